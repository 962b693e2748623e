#!/usr/bin/env python3
"""Compile the bundled 70-tool catalog into snapshots/seed.json."""

import sys
from pathlib import Path

from vison.cli import main

OUT = Path(__file__).resolve().parent.parent / "snapshots" / "seed.json"

if __name__ == "__main__":
    OUT.parent.mkdir(exist_ok=True)
    sys.exit(main(["ingest", "--snapshot", str(OUT)]))
