"""Cohomology ranks and isomorphism classes for the augmentations of a plat or raw DGA.

    python3 scripts/trefoil_tables.py diagrams/trefoil.plat --field 2
"""

from __future__ import annotations

import argparse
from pathlib import Path

from legaug.augcat import MINUS, PLUS, AugCategory, enumerate_augmentations, is_isomorphic_augplus
from legaug.bordered import assemble
from legaug.dga import Dga
from legaug.ncpoly import Ring
from legaug.plat import parse_plat


def load(path: Path, ring: Ring) -> Dga:
    if path.suffix == ".json":
        return Dga.from_json(path.read_text()).over(ring)
    return assemble(parse_plat(path.read_text()), ring).dga


def ranks(h: dict[int, int]) -> str:
    return " ".join(f"H^{k}={v}" for k, v in sorted(h.items()) if v) or "0"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path", type=Path, nargs="?", default=Path("diagrams/trefoil.plat"))
    parser.add_argument("--field", type=int, default=2, help="prime p of the coefficient field F_p")
    args = parser.parse_args()
    ring = Ring(args.field)
    d = load(args.path, ring)
    augs = enumerate_augmentations(d, ring)
    cat = AugCategory(d, ring)
    reeb0 = [g.name for g in d.reeb if g.degree == 0]
    print(f"{len(augs)} augmentations over F{args.field}")
    for i, e in enumerate(augs, 1):
        print(f"  e{i}: " + " ".join(f"{name}={e[name]}" for name in reeb0))
    for direction in (PLUS, MINUS):
        print(f"\nH^* of hom{direction}(ei, ej)")
        for i, a in enumerate(augs, 1):
            for j, b in enumerate(augs, 1):
                print(f"  ({i},{j}): {ranks(cat.cohomology(a, b, direction))}")
    classes: list[list[int]] = []
    for i, e in enumerate(augs):
        for cl in classes:
            if is_isomorphic_augplus(cat, augs[cl[0]], e)[0]:
                cl.append(i)
                break
        else:
            classes.append([i])
    print(f"\n{len(classes)} isomorphism classes: " + " ".join("{" + ",".join(f"e{i + 1}" for i in cl) + "}" for cl in classes))


if __name__ == "__main__":
    main()
