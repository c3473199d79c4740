"""Print every nonzero m_k on basis elements of hom(eps, eps) for the unknot over Z.

    python3 scripts/unknot_products.py --max-arity 6
"""

from __future__ import annotations

import argparse
import itertools
from pathlib import Path

from legaug.augcat import AugCategory, HomElement
from legaug.dga import Augmentation, Dga
from legaug.ncpoly import ZZ

DIAGRAMS = Path(__file__).resolve().parent.parent / "diagrams"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-arity", type=int, default=6)
    args = parser.parse_args()
    d = Dga.from_json((DIAGRAMS / "unknot_raw.json").read_text())
    cat = AugCategory(d, ZZ)
    eps = Augmentation(ZZ, {g.name: -1 if g.kind == "basepoint" else 0 for g in d.generators})
    basis = cat.hom_basis(eps, eps)
    elements = {lab: HomElement(basis, {key: 1}) for lab, key in zip(basis.labels, basis.keys)}
    print("unit:", cat.unit(eps))
    for k in range(1, args.max_arity + 1):
        for labels in itertools.product(elements, repeat=k):
            out = cat.m_plus([eps] * (k + 1), [elements[lab] for lab in labels])
            if not out.is_zero():
                print(f"m{k}({', '.join(labels)}) = {out}")


if __name__ == "__main__":
    main()
