import sys

from nltrace.cli import main

sys.exit(main())
