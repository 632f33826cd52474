import sys

from frobfix.cli.cli_main import main

if __name__ == "__main__":
    sys.exit(main())
