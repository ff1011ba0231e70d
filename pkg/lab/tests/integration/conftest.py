# lab/tests/integration/conftest.py
import sys
from pathlib import Path

# Ensure the 'lab' directory is on sys.path so "import app" works
ROOT = Path(__file__).resolve().parents[2]  # lab/
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
