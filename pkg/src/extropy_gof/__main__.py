import sys

from extropy_gof.cli import main

sys.exit(main())
