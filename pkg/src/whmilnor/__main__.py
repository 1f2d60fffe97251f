import sys

from whmilnor.cli import main

sys.exit(main())
