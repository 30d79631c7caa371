import sys

from cyclorex.cli import main

sys.exit(main())
