"""Allow ``python -m pairing_functions``."""

import sys

from .cli import main

sys.exit(main())
