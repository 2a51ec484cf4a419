"""Run the command line with ``python -m nmaps``."""
from __future__ import division, print_function, absolute_import
import sys

from nmaps.cli import main

sys.exit(main())
