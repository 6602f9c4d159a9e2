import sys

from nedlib.cli import main

sys.exit(main())
