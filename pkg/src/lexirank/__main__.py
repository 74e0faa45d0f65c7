import sys

from lexirank.cli import main

sys.exit(main())
