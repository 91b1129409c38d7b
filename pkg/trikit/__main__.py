import sys

from trikit.cli import main


sys.exit(main())
