'''
Entry point for `python -m chordx`.
'''
import sys

from .cli import main

sys.exit(main())
