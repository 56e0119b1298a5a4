import sys

from persym.cli import main

sys.exit(main())
