import sys

from liemech.cli.main import main

sys.exit(main())
