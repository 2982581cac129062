import sys

from presentacion.vista.cli import main

if __name__ == "__main__":
    sys.exit(main())
