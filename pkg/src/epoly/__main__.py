import sys

from epoly.cli import main

sys.exit(main())
