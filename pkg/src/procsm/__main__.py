import sys

from procsm.cli import main

sys.exit(main())
