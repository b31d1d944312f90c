import sys

from eulersense.cli.main import main

sys.exit(main())
