import sys

from wordorder.cli import main

sys.exit(main())
