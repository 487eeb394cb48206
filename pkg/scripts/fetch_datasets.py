#!/usr/bin/env python3
"""Download the public benchmark datasets into data/.

Needs outbound network access. The UCI mushroom file feeds the
categorical acceptance test; the 2-d benchmark sets are optional
extras for the CLI walkthrough in the README.
"""

import os
import sys
import urllib.request

HERE = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(HERE, "..", "data")

# name -> (url, whitespace-separated: normalize to comma-separated csv)
SOURCES = {
    "agaricus-lepiota.data": (
        "https://archive.ics.uci.edu/ml/machine-learning-databases/mushroom/agaricus-lepiota.data",
        False),
    "aggregation.csv": ("https://cs.joensuu.fi/sipu/datasets/Aggregation.txt", True),
    "flame.csv": ("https://cs.joensuu.fi/sipu/datasets/flame.txt", True),
    "spiral.csv": ("https://cs.joensuu.fi/sipu/datasets/spiral.txt", True),
    "s4.csv": ("https://cs.joensuu.fi/sipu/datasets/s4.txt", True),
}


def main() -> int:
    os.makedirs(DATA_DIR, exist_ok=True)
    failures = 0
    for name, (url, normalize) in SOURCES.items():
        dest = os.path.join(DATA_DIR, name)
        if os.path.exists(dest):
            print(f"already present: {dest}")
            continue
        try:
            print(f"fetching {url}")
            with urllib.request.urlopen(url) as response:
                raw = response.read().decode("utf-8", errors="replace")
            if normalize:
                lines = (",".join(line.split()) for line in raw.splitlines()
                         if line.strip())
                raw = "\n".join(lines) + "\n"
            with open(dest, "w") as fh:
                fh.write(raw)
        except Exception as exc:
            print(f"  failed: {exc}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
