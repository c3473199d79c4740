from __future__ import annotations

import json

import pytest

from conftest import DIAGRAMS, assembled
from legaug.augcat import enumerate_augmentations
from legaug.dga import BASEPOINT, REEB, Augmentation, GenInfo, Dga, augmentation, check_dga, is_augmentation, make_dga, restrict_to_components, twist
from legaug.errors import LegaugError
from legaug.ncpoly import ZZ, NcPoly, Ring


def raw_unknot(ring=ZZ) -> Dga:
    return make_dga(ring, {"a": 1}, {"a": "1 + t^-1"}, basepoints=["t"])


def test_raw_unknot_passes_checks():
    d = raw_unknot()
    assert check_dga(d).ok
    assert [g.name for g in d.reeb] == ["a"] and [g.name for g in d.basepoints] == ["t"]


@pytest.mark.parametrize(
    "degrees,diff,bps,grading,kind",
    [
        ({"a": 2, "b": 1}, {"a": "b", "b": "1"}, [], None, "d-squared"),
        ({"a": 2, "b": 0}, {"a": "b", "b": "0"}, [], None, "degree"),
        ({"a": 1}, {"a": "z"}, [], None, "unknown-symbol"),
        ({"a": 1, "b": 0}, {"a": "b^-1", "b": "0"}, [], None, "inverted-generator"),
        ({"a": 1, "b": 0}, {"a": "b b", "b": "0"}, [], {"a": (1, 2), "b": (1, 2)}, "link-grading"),
    ],
)
def test_check_dga_reports_each_kind_of_problem(degrees, diff, bps, grading, kind):
    d = make_dga(ZZ, degrees, diff, bps, grading)
    assert kind in check_dga(d).kinds()


def test_basepoint_of_nonzero_degree_is_reported():
    gens = [GenInfo("a", 1, REEB), GenInfo("t", 1, BASEPOINT)]
    d = Dga(ZZ, gens, {"a": NcPoly.parse(ZZ, "1 + t^-1")})
    assert "basepoint-degree" in check_dga(d).kinds()


def test_augmentation_values_and_equality():
    F3 = Ring(3)
    d = raw_unknot(F3)
    eps = augmentation(d, F3, {"a": 0, "t": -1})
    assert eps == Augmentation(F3, {"a": 3, "t": 2})
    assert is_augmentation(d, eps)
    assert not is_augmentation(d, Augmentation(F3, {"a": 0, "t": 1}))
    assert augmentation(d, F3, {"t": -1}) == eps
    with pytest.raises(LegaugError):
        augmentation(d, F3, {"a": 0})
    assert eps.as_dict() == {"a": "0", "t": "-1"}


def test_unknot_has_one_augmentation_with_t_minus_one():
    for p in (2, 3):
        R = Ring(p)
        augs = enumerate_augmentations(raw_unknot(R), R)
        assert len(augs) == 1 and augs[0]["t"] == R.reduce(-1)


def test_twist_kills_constant_terms():
    F3 = Ring(3)
    d = raw_unknot(F3)
    tw = twist(d, Augmentation(F3, {"a": 0, "t": -1}))
    assert str(tw.d("a")) == "0"


def test_twist_rejects_non_augmentations():
    F3 = Ring(3)
    with pytest.raises(LegaugError):
        twist(raw_unknot(F3), Augmentation(F3, {"a": 0, "t": 1}))


def test_twisted_corpus_dgas_are_dgas_without_constants(corpus):
    F3 = Ring(3)
    seen = 0
    for d in corpus[:60]:
        dga = assembled(d, 3).dga
        for eps in enumerate_augmentations(dga, F3)[:3]:
            tw = twist(dga, eps)
            assert check_dga(tw, check_grading=False).ok
            assert all(tw.d(g.name).constant_term() == 0 for g in tw.reeb)
            seen += 1
    assert seen > 20


def test_json_round_trip_of_diagram_files():
    for path in sorted(DIAGRAMS.glob("*.json")):
        d = Dga.from_json(path.read_text())
        assert check_dga(d).ok
        again = Dga.from_json(d.to_json())
        assert again == d
        assert json.loads(again.to_json()) == json.loads(path.read_text())


def test_from_json_rejects_malformed_input():
    with pytest.raises(LegaugError):
        Dga.from_json("{not json")
    with pytest.raises(LegaugError):
        Dga.from_json('{"generators": [{"degree": 1}]}')


def test_over_changes_ring_of_everything():
    d = raw_unknot().over(Ring(2))
    assert d.ring == Ring(2) and d.d("a").ring == Ring(2)


def test_single_basepoint_keeps_a_valid_dga(trefoil):
    d = assembled(trefoil).dga.single_basepoint()
    assert [g.name for g in d.basepoints] == ["t1"]
    assert check_dga(d).ok
    assert len(enumerate_augmentations(d, Ring(2))) == 5


def test_restrict_to_components_of_a_split_link():
    d = make_dga(
        ZZ,
        {"a": 1, "b": 1, "m": 0},
        {"a": "1 + s^-1", "b": "1 + u^-1", "m": "0"},
        basepoints=["s", "u"],
        grading={"a": (1, 1), "s": (1, 1), "b": (2, 2), "u": (2, 2), "m": (1, 2)},
    )
    only2 = restrict_to_components(d, [2])
    assert [g.name for g in only2.generators] == ["b", "u"]
    assert all(g.r == 1 and g.c == 1 for g in only2.generators)
    assert restrict_to_components(d, [1, 2]) == d
