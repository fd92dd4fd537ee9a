"""Allow ``python -m spinekit``."""
import sys

from spinekit.main import run

if __name__ == "__main__":
    sys.exit(run())
