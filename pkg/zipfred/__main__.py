"""Entry point for ``python -m zipfred``."""

import sys

from zipfred.cli import main

if __name__ == "__main__":
    sys.exit(main())
