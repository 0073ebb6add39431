import sys

from cpplab.cli import main

sys.exit(main())
