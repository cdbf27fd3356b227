#!/usr/bin/env python3
"""Print every reference table the library reproduces, plus the errata ledger.

Handy for eyeballing the whole artifact at once:
    python scripts/reference_tables.py
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quadratica import errata, fibgroup, geometry, metallic, perfect


def section(title: str) -> None:
    print(f"\n== {title} " + "=" * max(0, 60 - len(title)))


def main() -> int:
    section("perfect-number parabola table")
    for p in (2, 3, 5, 7, 11, 13):
        rec = perfect.perfect_from_exponent(p)
        tag = "perfect" if rec.is_perfect else "not perfect"
        print(f"p={rec.exponent:>2}  x1={rec.x1:>5}  x2={str(rec.x2):>9}  P={rec.value:>10}  ({tag})")

    section("metallic means")
    for p in range(1, 5):
        entry = metallic.metallic(p, 1)
        name = f" ({entry.name})" if entry.name else ""
        print(f"sigma_{p},1 = {entry.sigma}{name}")

    section("phi power ledger (first 10 rows)")
    for row in metallic.phi_ledger(11):
        flag = "  <- errata" if row.errata_id else ""
        print(f"phi^{row.n:>2} = {row.coeff:>3}*phi + {row.const:>3}   sum={row.power_sum:>4}{flag}")

    section("unit groups of the complex unit quadratics")
    for case in (fibgroup.Case.III, fibgroup.Case.IV):
        group = fibgroup.unit_group(case)
        print(f"case {case.value}: order {group.order}: " + ", ".join(str(z) for z in group.elements))

    section("Platonic solids (unit edge)")
    for solid in geometry.PlatonicSolid:
        row = geometry.platonic(solid, 1)
        print(f"{solid.value:<13} area={float(row.total_area):>9.6f}  "
              f"apothem={float(row.apothem):>9.6f}  volume={float(row.volume):>9.6f}")

    section("parabola axis areas")
    left = perfect.chord_geometry(Fraction(-1), Fraction(-1, 2))
    right = perfect.chord_geometry(Fraction(-1, 2), Fraction(0))
    print(f"[-1, -1/2]: {left.axis_area}   [-1/2, 0]: {right.axis_area}   "
          f"sum: {left.axis_area + right.axis_area}")

    section(f"errata ledger v{errata.ERRATA_VERSION}")
    for entry in errata.ERRATA:
        print(f"[{entry.id}] ({entry.kind}) {entry.section}")
        print(f"    displayed: {entry.displayed}")
        print(f"    derived:   {entry.derived}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
