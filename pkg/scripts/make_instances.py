#!/usr/bin/env python3
"""Write a small benchmark corpus of deterministic random instances.

Usage: python scripts/make_instances.py OUTDIR
"""

import sys
from fractions import Fraction
from pathlib import Path

from kinterdict.generator import generate_instance
from kinterdict.instance import serialize_instance

FAMILIES = [
    # (tag, n, t, pmax, wmax, cmax, budget_frac, cap_frac)
    ("tiny", 6, 1, 20, 20, 9, "2/5", "1/2"),
    ("small", 12, 1, 100, 100, 50, "2/5", "1/2"),
    ("medium", 40, 1, 100, 100, 50, "1/2", "1/2"),
    ("large", 120, 1, 1000, 1000, 100, "1/2", "2/5"),
    ("multi2", 8, 2, 50, 20, 9, "2/5", "1/2"),
    ("multi3", 6, 3, 50, 12, 9, "2/5", "1/2"),
]


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    outdir = Path(sys.argv[1])
    outdir.mkdir(parents=True, exist_ok=True)
    for tag, n, t, pmax, wmax, cmax, bf, cf in FAMILIES:
        for seed in range(3):
            inst = generate_instance(
                n=n, t=t, seed=seed, pmax=pmax, wmax=wmax, cmax=cmax,
                budget_frac=Fraction(bf), cap_frac=Fraction(cf),
            )
            path = outdir / f"{tag}_s{seed}.json"
            path.write_text(serialize_instance(inst), encoding="utf-8")
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
