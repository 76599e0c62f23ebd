#!/usr/bin/env python3
"""Compute H-representations for a few small zonotopes and print them.

Shows the cube, the hexagon, and a rectangle whose generators contain a
parallel pair, both anchored at the origin and centered.

Usage: python scripts/hrep_demo.py
"""

from matroid_flats import RationalMatrix, hrep
from matroid_flats.io import hrep_to_text

EXAMPLES = {
    "unit cube (e1, e2, e3)": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "hexagon ((1,0), (0,1), (1,1))": [[1, 0], [0, 1], [1, 1]],
    "rectangle with a parallel pair ((1,0), (2,0), (0,1))":
        [[1, 0], [2, 0], [0, 1]],
}


def main() -> None:
    for name, columns in EXAMPLES.items():
        generators = RationalMatrix.from_columns(columns)
        print(f"== {name}")
        print(hrep_to_text(hrep(generators)), end="")
        print("-- centered:")
        print(hrep_to_text(hrep(generators, centered=True)))


if __name__ == "__main__":
    main()
