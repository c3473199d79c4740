from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import assembled, load_plat
from legaug.bordered import (
    assemble,
    crossing_slice_dga,
    glue,
    line_dga,
    right_cusp_slice_dga,
    sections,
)
from legaug.dga import check_dga
from legaug.errors import LegaugError
from legaug.ncpoly import ZZ, NcPoly, Ring
from legaug.verify import Workspace, check_sheaf


@st.composite
def potentials(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    return [draw(st.integers(-2, 2)) for _ in range(n)]


@given(potentials())
def test_line_algebra_squares_to_zero(mu):
    assert check_dga(line_dga(len(mu), mu), check_grading=False).ok


@given(potentials(min_n=2), st.data())
def test_crossing_slice_squares_to_zero(mu, data):
    k = data.draw(st.integers(1, len(mu) - 1))
    assert check_dga(crossing_slice_dga(len(mu), k, mu), check_grading=False).ok


@given(st.integers(1, 3), st.data())
def test_right_cusp_slice_squares_to_zero(cusps, data):
    mu = []
    for _ in range(cusps):
        low = data.draw(st.integers(-2, 2))
        mu += [low + 1, low]
    sigma = [data.draw(st.sampled_from([1, -1])) for _ in range(cusps)]
    assert check_dga(right_cusp_slice_dga(2 * cusps, mu, sigma), check_grading=False).ok


def test_right_cusp_slice_needs_cusp_constraint():
    with pytest.raises(LegaugError):
        right_cusp_slice_dga(2, [0, 0], [1])


def test_unknot_dga(unknot):
    d = assembled(unknot).dga
    assert [(g.name, g.degree) for g in d.reeb] == [("c1", 1)]
    assert str(d.d("c1")) == "1 + t1"
    flipped = assemble(unknot, flip=[1]).dga
    assert str(flipped.d("c1")) == "1 + t1^-1"


def test_trefoil_dga_matches_the_single_basepoint_differential(trefoil):
    d = assembled(trefoil).dga
    assert {g.name: g.degree for g in d.reeb} == {"a1": 0, "a2": 0, "a3": 0, "c1": 1, "c2": 1}
    # with t1 = -1 and t2 = 1 the differential is the single base point one
    spec = d.substitute({"t1": NcPoly.const(ZZ, -1), "t2": NcPoly.const(ZZ, 1)}, drop=["t1", "t2"])
    assert spec.d("c1") == NcPoly.parse(ZZ, "-1 + a1 + a3 + a1 a2 a3")
    assert spec.d("c2") == NcPoly.parse(ZZ, "1 - a1 - a3 - a3 a2 a1")
    assert all(spec.d(f"a{i}").is_zero() for i in (1, 2, 3))


def test_corpus_dgas_pass_all_checks_over_the_integers(corpus):
    for d in corpus:
        asm = assembled(d)
        rep = check_dga(asm.dga)
        assert rep.ok, (d, str(rep))
        for sl in asm.slices:
            assert check_dga(sl, check_grading=False).ok, d


def test_boundary_matrices_satisfy_the_chain_relation(corpus):
    for d in corpus:
        asm = assembled(d)
        for b, M in enumerate(asm.matrices):
            assert M.chain_defects(asm.dga, asm.maslov.at(b)) == [], (d, b)
            mu = asm.maslov.at(b)
            assert M.degree_defects(mu, {g.name: g.degree for g in asm.dga.generators}) == [], (d, b)


def test_pushout_at_every_split_recovers_the_assembly(corpus):
    for d in corpus:
        asm = assembled(d)
        N = len(d.crossings)
        whole = sections(d, 0, N + 1)
        assert whole.dga == asm.dga
        for s in range(N + 1):
            glued = glue(sections(d, 0, s), sections(d, s + 1, N + 1))
            assert glued.dga == asm.dga, (d, s)


def test_three_way_gluing_is_associative():
    d = load_plat("link6.plat")
    N = len(d.crossings)
    a, b, c = sections(d, 0, 1), sections(d, 2, 3), sections(d, 4, N + 1)
    assert glue(glue(a, b), c).dga == glue(a, glue(b, c)).dga == assemble(d).dga


def test_sections_of_a_middle_range_expose_the_boundary_line(trefoil):
    sec = sections(trefoil, 1, 2)
    assert sec.right_matrix is not None
    names = {g.name for g in sec.dga.generators}
    assert {"p1_2", "p3_4", "a1", "a2"} <= names and "a3" not in names
    assert check_dga(sec.dga, check_grading=False).ok


def test_glue_rejects_non_adjacent_sections(trefoil):
    with pytest.raises(LegaugError):
        glue(sections(trefoil, 0, 1), sections(trefoil, 3, 4))
    with pytest.raises(LegaugError):
        sections(trefoil, 2, 9)


@pytest.mark.parametrize("p", [2, 3])
def test_augmentations_glue_as_a_sheaf_of_sets(corpus, p):
    R = Ring(p)
    checked = 0
    for d in corpus:
        res = check_sheaf(Workspace(assembled(d, p).dga, R, assembled(d, p)))
        assert res.ok, (d, res.messages)
        checked += res.checked
    assert checked > 200


def test_random_flips_keep_the_dga_valid():
    rng = random.Random(11)
    d = load_plat("link6.plat")
    for _ in range(4):
        flip = [c for c in (1, 2) if rng.random() < 0.5]
        assert check_dga(assemble(d, flip=flip).dga).ok
