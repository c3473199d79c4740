"""Search for, or re-identify, a plat front of the knot m(9_45) with tb = 1.

This is an offline tool.  It needs SnapPy (``pip install snappy``), which is
not a dependency of the package; the tests only read the frozen result in
diagrams/m945.plat.

    python3 scripts/find_m945.py check diagrams/m945.plat
    python3 scripts/find_m945.py search --seed 1 --seconds 600

A plat front becomes a planar diagram by letting the strand that falls from
left to right pass over at every crossing (the usual front convention).  A
candidate must have a single component, rotation 0, tb = 1 and knot Floer
homology of total rank 23; the exterior is then identified.  SnapPy's 9_45
has tau = -1, and a front with tb = 1 forces tau >= 1, so any hit is the
mirror m(9_45).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
import warnings
from pathlib import Path

warnings.filterwarnings("ignore", message="Plink failed")
import snappy  # noqa: E402

from legaug.plat import PlatDiagram, classical_invariants, parse_plat  # noqa: E402


def plat_pd(d: PlatDiagram) -> list[tuple[int, int, int, int]] | None:
    """PD code of the knot drawn by ``d``, or None if ``d`` is a link."""
    N = len(d.crossings)
    labels: dict[tuple[int, str, int], tuple[int, str]] = {}
    s, p, right = 0, 1, True
    edge = passes = 0
    while True:
        if right:
            if s == N:  # right cusp: turn back on the partner strand
                p = p + 1 if p % 2 else p - 1
                right = False
                continue
            c = s + 1
            k = d.crossings[c - 1]
            if p in (k, k + 1):
                q = 2 * k + 1 - p
                labels[(c, "L", p)] = (edge, "in")
                edge += 1
                labels[(c, "R", q)] = (edge, "out")
                p = q
                passes += 1
            s = c
        else:
            if s == 0:  # left cusp
                p = p + 1 if p % 2 else p - 1
                right = True
                if p == 1:
                    break
                continue
            c = s
            k = d.crossings[c - 1]
            if p in (k, k + 1):
                q = 2 * k + 1 - p
                labels[(c, "R", p)] = (edge, "in")
                edge += 1
                labels[(c, "L", q)] = (edge, "out")
                p = q
                passes += 1
            s = c - 1
    if passes != 2 * N:
        return None
    pd = []
    for c in range(1, N + 1):
        k = d.crossings[c - 1]
        Lt, Lb = labels[(c, "L", k)], labels[(c, "L", k + 1)]
        Rt, Rb = labels[(c, "R", k)], labels[(c, "R", k + 1)]
        f = lambda x: x[0] % edge
        # the under strand runs from the lower left to the upper right
        if Lb[1] == "in":
            pd.append((f(Lb), f(Rb), f(Rt), f(Lt)))
        else:
            pd.append((f(Rt), f(Lt), f(Lb), f(Rb)))
    return pd


def describe(d: PlatDiagram) -> dict | None:
    """Classical invariants, knot Floer data and exterior identification of ``d``."""
    inv = classical_invariants(d)
    pd = plat_pd(d)
    if pd is None:
        return None
    link = snappy.Link(pd)
    link.simplify("global")
    hfk = link.knot_floer_homology()
    return {
        "tb": inv.tb,
        "rotation": inv.rotation,
        "crossings_after_simplify": len(link.crossings),
        "hfk_total_rank": hfk["total_rank"],
        "tau": hfk["tau"],
        "genus": hfk["seifert_genus"],
        "exterior": [str(m) for m in link.exterior().identify()],
    }


def search(seed: int, seconds: float) -> None:
    target = snappy.Link("9_45").knot_floer_homology()
    rng = random.Random(seed)
    start, tries, hits = time.time(), 0, 0
    while time.time() - start < seconds:
        n = rng.choice([6, 6, 8])
        d = PlatDiagram(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(8, 18))))
        tries += 1
        inv = classical_invariants(d)
        if tuple(inv.rotation) != (0,) or inv.tb != 1:
            continue
        link = snappy.Link(plat_pd(d))
        link.simplify("global")
        if len(link.crossings) < 9:
            continue
        hfk = link.knot_floer_homology()
        if hfk["total_rank"] != target["total_rank"] or hfk["seifert_genus"] != target["seifert_genus"]:
            continue
        ids = link.exterior().identify()
        if any(str(m).startswith("9_45") for m in ids):
            hits += 1
            print(" ".join(d.to_text().split()), "tau", hfk["tau"], ids, flush=True)
    print("tries", tries, "hits", hits)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    chk = sub.add_parser("check", help="identify the knot drawn by a plat file")
    chk.add_argument("path", type=Path)
    srch = sub.add_parser("search", help="random search for tb = 1 plats of m(9_45)")
    srch.add_argument("--seed", type=int, default=1)
    srch.add_argument("--seconds", type=float, default=600.0)
    args = parser.parse_args(argv)
    if args.command == "check":
        info = describe(parse_plat(args.path.read_text()))
        if info is None:
            print("not a knot")
            return 1
        for key, value in info.items():
            print(f"{key}: {value}")
        return 0
    search(args.seed, args.seconds)
    return 0


if __name__ == "__main__":
    sys.exit(main())
