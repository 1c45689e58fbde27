"""Regenerate the frozen census regression file from the unpruned oracle.

Every count in data/census_frozen.txt must come from this script, never from
the production search: the regression test then proves the pruned search
reproduces oracle truth on every run.

Run from the repository root:  python3 tools/gen_frozen_census.py
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from yangbaxter.search import (
    FROZEN_CELLS,
    EnumFilter,
    format_frozen_census,
    oracle_census,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "yangbaxter" / "data" / "census_frozen.txt"


def main():
    counts = {}
    for n, sig in FROZEN_CELLS:
        t0 = time.time()
        filt = EnumFilter.from_signature(sig)
        counts[(n, sig)] = oracle_census(n, filt)
        print(f"n={n} {sig}: {counts[(n, sig)]} ({time.time() - t0:.1f}s)")
    OUT.write_text(format_frozen_census(counts))
    print("wrote", OUT)


if __name__ == "__main__":
    main()
