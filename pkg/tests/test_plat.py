from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DIAGRAMS, load_plat
from legaug.errors import LegaugError
from legaug.plat import (
    MaslovError,
    PlatDiagram,
    PlatParseError,
    classical_invariants,
    parse_plat,
    random_plat,
    solve_maslov,
    trace_knot,
)

seeds = st.integers(0, 10**9)


@pytest.mark.parametrize(
    "text,where",
    [
        ("strands 3\n", "line 1"),
        ("cross 1\n", "line 1"),
        ("strands 4\ncross 4\n", "line 2"),
        ("strands 4\n  cross x\n", "line 2, column 9"),
        ("strands 4\nwiggle 2\n", "line 2, column 1"),
        ("strands 4\nstrands 4\n", "line 2"),
        ("# only a comment\n", "missing"),
    ],
)
def test_parse_errors_name_the_location(text, where):
    with pytest.raises(PlatParseError, match=where):
        parse_plat(text)


def test_parse_ignores_comments_and_blank_lines():
    d = parse_plat("# trefoil\n\nstrands 4  # four strands\ncross 2\ncross 2\ncross 2\n")
    assert d == PlatDiagram(4, (2, 2, 2))


def test_diagram_files_round_trip():
    for path in sorted(DIAGRAMS.glob("*.plat")):
        d = parse_plat(path.read_text())
        assert parse_plat(d.to_text()) == d


@given(seeds)
def test_random_plats_round_trip(seed):
    d = random_plat(random.Random(seed))
    assert parse_plat(d.to_text()) == d
    assert d.n <= 8 and len(d.crossings) <= 12


def test_invalid_diagrams_are_rejected():
    with pytest.raises(LegaugError):
        PlatDiagram(3)
    with pytest.raises(LegaugError):
        PlatDiagram(4, (0,))


def test_unknot_potential_and_invariants(unknot):
    m = solve_maslov(unknot)
    assert m.strand == (1, 0)
    inv = classical_invariants(unknot)
    assert (inv.tb, inv.writhe, inv.rotation) == (-1, 0, (0,))


def test_trefoil_potential_and_invariants(trefoil):
    m = solve_maslov(trefoil)
    assert m.strand == (2, 1, 1, 0)
    assert [m.crossing_degree(e) for e in (1, 2, 3)] == [0, 0, 0]
    tr = trace_knot(trefoil)
    assert tr.component_count == 1 and tr.sigma == (1, -1)
    inv = classical_invariants(trefoil, tr)
    assert (inv.tb, inv.writhe, inv.rotation) == (1, 3, (0,))


def test_hopf_link_components():
    d = load_plat("hopf.plat")
    tr = trace_knot(d)
    assert tr.component_count == 2
    inv = classical_invariants(d, tr)
    assert inv.tb_per_component == (-1, -1)
    # flipping one component changes the sign of both mixed crossings
    flipped = classical_invariants(d, trace_knot(d, flip=[2]))
    assert flipped.writhe == -inv.writhe


def test_nonzero_rotation_is_rejected():
    d = PlatDiagram(4, (1, 2))
    with pytest.raises(MaslovError):
        solve_maslov(d)
    assert classical_invariants(d).rotation != (0,)


@given(seeds)
def test_potential_exists_iff_rotation_numbers_vanish(seed):
    d = random_plat(random.Random(seed))
    rotation = classical_invariants(d).rotation
    try:
        solve_maslov(d)
    except MaslovError:
        assert any(rotation)
    else:
        assert not any(rotation)


@given(seeds)
def test_potential_meets_every_cusp_constraint(seed):
    d = random_plat(random.Random(seed))
    try:
        m = solve_maslov(d)
    except MaslovError:
        return
    right = d.perms()[-1]
    for i in range(d.cusps):
        assert m.strand[2 * i] == m.strand[2 * i + 1] + 1
        assert m.strand[right[2 * i] - 1] == m.strand[right[2 * i + 1] - 1] + 1
    tr = trace_knot(d)
    for comp in range(1, tr.component_count + 1):
        lows = [m.strand[s - 1] for s in range(2, d.n + 1, 2) if tr.component[s - 1] == comp]
        assert min(lows) == 0


@given(seeds)
def test_trace_orientation_and_arcs_are_consistent(seed):
    d = random_plat(random.Random(seed))
    tr = trace_knot(d)
    # each left cusp and right cusp joins oppositely oriented strands
    for i in range(1, d.cusps + 1):
        assert tr.direction[2 * i - 2] == -tr.direction[2 * i - 1]
        up, low = tr.right_cusp_strands(i)
        assert tr.direction[up - 1] == -tr.direction[low - 1]
        r, c = tr.basepoint_grade(i)
        assert c == i and tr.basepoint_component[i - 1] == tr.component[up - 1]
    # arcs are labelled by base points on the same component
    for s in range(1, d.n + 1):
        assert tr.basepoint_component[tr.arc[s - 1] - 1] == tr.component[s - 1]
    # reversing every component flips every direction
    flipped = trace_knot(d, flip=range(1, tr.component_count + 1))
    assert flipped.direction == tuple(-x for x in tr.direction)


def test_flip_of_unknown_component_is_an_error(trefoil):
    with pytest.raises(LegaugError):
        trace_knot(trefoil, flip=[2])
