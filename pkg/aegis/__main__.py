import sys

from aegis.analysis.cli import main

sys.exit(main())
