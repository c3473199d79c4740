from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DIAGRAMS, assembled, load_plat, plat_corpus
from legaug.augcat import enumerate_augmentations
from legaug.dga import Augmentation, Dga, check_dga, is_augmentation, make_dga, restrict_to_components, twist
from legaug.errors import LegaugError
from legaug.mcopy import CopyPlan, build_mcopy, chain_coefficients, copy_name, diagonal_augmentation, relabel
from legaug.ncpoly import ZZ, NcPoly, Ring, symbol_name


def raw_unknot() -> Dga:
    return Dga.from_json((DIAGRAMS / "unknot_raw.json").read_text())


UNKNOT_TWO_COPY = {
    "a^11": "1 + (t^1)^-1 + y^12 a^21",
    "a^12": "-x^12 (t^2)^-1 + y^12 a^22 + a^11 y^12",
    "a^21": "0",
    "a^22": "1 + (t^2)^-1 + a^21 y^12",
    "x^12": "(t^1)^-1 y^12 t^2 - y^12",
    "y^12": "0",
}


def _expected(text: str) -> NcPoly:
    # the expected strings write inverses as (t^i)^-1
    for i in (1, 2, 3):
        text = text.replace(f"(t^{i})^-1", f"t^{i}^-1")
    return NcPoly.parse(ZZ, text)


@pytest.mark.parametrize("gen", sorted(UNKNOT_TWO_COPY))
def test_unknot_two_copy_matches_known_differentials(gen):
    mc = build_mcopy(raw_unknot(), 2)
    assert str(mc.d(gen)) == str(_expected(UNKNOT_TWO_COPY[gen]))


def test_unknot_two_copy_degrees_and_gradings():
    mc = build_mcopy(raw_unknot(), 2)
    table = {g.name: (g.degree, g.r, g.c) for g in mc.generators}
    assert table == {
        "a^11": (1, 1, 1), "a^12": (1, 1, 2), "a^21": (1, 2, 1), "a^22": (1, 2, 2),
        "x^12": (0, 1, 2), "y^12": (-1, 1, 2), "t^1": (0, 1, 1), "t^2": (0, 2, 2),
    }


def test_unknot_three_copy_y13():
    mc = build_mcopy(raw_unknot(), 3)
    assert str(mc.d("y^13")) == "y^12 y^23"
    assert check_dga(mc).ok


def test_diagonal_augmentation_of_unknot_two_copy():
    mc = build_mcopy(raw_unknot(), 2)
    eps = Augmentation(ZZ, {"a": 0, "t": -1})
    diag = diagonal_augmentation(mc, [eps, eps])
    assert diag["t^1"] == diag["t^2"] == -1
    assert all(diag[n] == 0 for n in ("a^11", "a^12", "a^21", "a^22", "x^12", "y^12"))
    assert is_augmentation(mc, diag)


def test_one_copy_restriction_is_the_base():
    base = raw_unknot()
    mc = build_mcopy(base, 2)
    only1 = restrict_to_components(mc, [1])
    expect = base.renamed({"a": "a^11", "t": "t^1"})
    assert only1 == expect


@pytest.mark.parametrize("name", ["unknot.plat", "trefoil.plat", "hopf.plat"])
def test_restricting_three_copy_matches_relabelled_two_copy(name):
    base = assembled(load_plat(name)).dga
    mc3 = build_mcopy(base, 3)
    mc2 = build_mcopy(base, 2)
    assert restrict_to_components(mc3, [1, 3]) == relabel(mc2, [1, 3], 3)
    assert restrict_to_components(mc3, [2, 3]) == relabel(mc2, [2, 3], 3)


def test_one_copy_of_a_plat_dga_is_isomorphic_to_the_base(trefoil):
    base = assembled(trefoil).dga
    mc = build_mcopy(base, 1)
    mapping = {c: name for c, (_, name, _, _) in mc.origin.items()}
    renamed = mc.renamed(mapping)
    # link gradings differ: the copy grades by copy index, the base by arcs
    assert renamed.degrees == base.degrees
    assert renamed.differential == base.differential


def test_corpus_copies_square_to_zero(corpus):
    for d in corpus[:40]:
        base = assembled(d).dga
        for m in (2, 3):
            assert check_dga(build_mcopy(base, m, check=False)).ok, (d, m)


def test_copy_needs_an_arc_grading():
    with pytest.raises(LegaugError):
        CopyPlan(make_dga(ZZ, {"a": 1}, {"a": "0"}))
    with pytest.raises(LegaugError):
        CopyPlan(raw_unknot(), arc_families={2: "y"})
    with pytest.raises(LegaugError):
        CopyPlan(raw_unknot(), arc_families={1: "a"})


def test_copy_names():
    assert copy_name("a3", 1, 2, 3) == "a3^12"
    assert copy_name("t1", 2, None, 3) == "t1^2"
    assert copy_name("a3", 10, 2, 12) == "a3^10,2"


# -- path-restricted evaluation against the full m-copy ---------------------------


def reference_coefficients(base: Dga, augs: dict[int, Augmentation], path, m: int):
    """Word coefficients read off the twisted full m-copy."""
    mc = build_mcopy(base, m)
    tw = twist(mc, diagonal_augmentation(mc, [augs[i] for i in range(1, m + 1)]))
    k = len(path) - 1
    out = {}
    for key in mc.plan.keys():
        if key[0] != "a" and not path[0] < path[-1]:
            continue
        g = copy_name(mc.plan.label(key), path[0], path[-1], m)
        words = {}
        for w, c in tw.differential[g].items():
            if len(w) != k or any(x < 0 for x in w):
                continue
            letters = [mc.origin[symbol_name(x)] for x in w]
            if all((o[2], o[3]) == (path[s], path[s + 1]) for s, o in enumerate(letters)):
                words[tuple((o[0], o[1]) for o in letters)] = c
        if words:
            out[key] = words
    return out


PATHS = [(1, 2), (2, 1), (1, 2, 3), (3, 2, 1), (2, 1, 3), (1, 3, 2), (2, 3, 1)]


@pytest.mark.parametrize("p", [2, 3])
def test_chain_coefficients_agree_with_twisted_full_copy(corpus, p):
    R = Ring(p)
    rng = random.Random(p)
    compared = 0
    for d in corpus[:30]:
        base = assembled(d, p).dga
        augs = enumerate_augmentations(base, R)
        if not augs:
            continue
        plan = CopyPlan(base)
        for path in PATHS:
            m = len(path)
            chosen = {i: rng.choice(augs) for i in range(1, m + 1)}
            assert chain_coefficients(plan, chosen, path) == reference_coefficients(base, chosen, path, m)
            compared += 1
    assert compared > 50


@given(st.integers(0, 10**6), st.sampled_from(PATHS))
@settings(max_examples=40)
def test_chain_words_follow_the_path(seed, path):
    R = Ring(3)
    rng = random.Random(seed)
    d = rng.choice(plat_corpus())
    base = assembled(d, 3).dga
    augs = enumerate_augmentations(base, R)
    if not augs:
        return
    plan = CopyPlan(base)
    chosen = {i: rng.choice(augs) for i in range(1, len(path) + 1)}
    k = len(path) - 1
    found = chain_coefficients(plan, chosen, path)
    for words in found.values():
        for word in words:
            assert len(word) == k
            for s, (kind, name) in enumerate(word):
                if kind == "a":
                    assert base.info(name).kind == "reeb"
                else:
                    # x and y matrices are strictly upper triangular off the diagonal
                    assert path[s] < path[s + 1]
    shorter = chain_coefficients(plan, chosen, path, max_len=k - 1)
    assert all(not words for words in shorter.values())
