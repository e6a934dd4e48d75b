import sys

from edgerecon.cli import main

sys.exit(main())
