# -*- coding: utf-8 -*-
"""
pytest root: makes the top-level packages importable, as main.py does
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
