"""python -m liecurve"""

import sys

from liecurve.cli import main

sys.exit(main())
