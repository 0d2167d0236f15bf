import sys

from horolib.cli import main

sys.exit(main())
