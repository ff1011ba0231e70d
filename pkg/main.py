"""Run the omlab command line from a source checkout: python main.py check --input T.json --block"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "lab"))

from app.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
