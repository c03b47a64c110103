"""Run the verification suite and write a JSON report.

    python scripts/run_suite.py --profile full --out report.json
"""

import sys

from monoidlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["suite", *sys.argv[1:]]))
