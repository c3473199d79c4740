from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

from legaug.bordered import assemble
from legaug.ncpoly import Ring
from legaug.plat import MaslovError, PlatDiagram, parse_plat, random_plat, solve_maslov

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

DIAGRAMS = Path(__file__).resolve().parent.parent / "diagrams"
CORPUS_SIZE = 100
CORPUS_SEED = 2024


@lru_cache(maxsize=None)
def plat_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> tuple[PlatDiagram, ...]:
    """Seeded random plats (n <= 8, <= 12 crossings) with a Z-valued Maslov potential."""
    rng = random.Random(seed)
    out: list[PlatDiagram] = []
    while len(out) < size:
        d = random_plat(rng, 8, 12)
        try:
            solve_maslov(d)
        except MaslovError:
            continue
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def assembled(d: PlatDiagram, p: int | None = None):
    return assemble(d, Ring(p))


def load_plat(name: str) -> PlatDiagram:
    return parse_plat((DIAGRAMS / name).read_text())


@pytest.fixture(scope="session")
def corpus() -> tuple[PlatDiagram, ...]:
    return plat_corpus()


@pytest.fixture(scope="session")
def trefoil() -> PlatDiagram:
    return load_plat("trefoil.plat")


@pytest.fixture(scope="session")
def unknot() -> PlatDiagram:
    return load_plat("unknot.plat")


@lru_cache(maxsize=None)
def field_workspace(d: PlatDiagram, p: int, sample: int = 12):
    """Workspace for a corpus diagram over F_p; augmentations and category are cached on it."""
    from legaug.verify import Workspace

    asm = assembled(d, p)
    return Workspace(asm.dga, Ring(p), asm, max_arity=4, sample=sample)


@lru_cache(maxsize=None)
def slice_report(n: int, p: int, trials: int = 100):
    from legaug.slice_mc import verify_slice_equivalences

    return verify_slice_equivalences(n, None, trials, Ring(p), seed=n)
