from quiddity.cli import main

main()
