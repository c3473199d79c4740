"""Semi-free DGAs with integer gradings and (weak) link gradings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .errors import LegaugError
from .ncpoly import NcPoly, Ring, ZZ, extend_derivation, extend_hom, intern, symbol_name

REEB = "reeb"
BASEPOINT = "basepoint"


@dataclass(frozen=True)
class GenInfo:
    name: str
    degree: int
    kind: str = REEB
    r: int = 1
    c: int = 1

    def __post_init__(self) -> None:
        if self.kind not in (REEB, BASEPOINT):
            raise LegaugError(f"unknown generator kind {self.kind!r}")
        intern(self.name)

    @property
    def link_grade(self) -> tuple[int, int]:
        return (self.r, self.c)


class Dga:
    """Generator table plus differential on the Reeb generators."""

    def __init__(
        self,
        ring: Ring,
        generators: Sequence[GenInfo],
        differential: Mapping[str, NcPoly],
        component_count: int | None = None,
    ):
        self.ring = ring
        self.generators: tuple[GenInfo, ...] = tuple(generators)
        self._info = {g.name: g for g in self.generators}
        if len(self._info) != len(self.generators):
            raise LegaugError("duplicate generator names")
        diff: dict[str, NcPoly] = {}
        for name, p in differential.items():
            if name not in self._info:
                raise LegaugError(f"differential given for unknown generator {name!r}")
            if p.ring != ring:
                raise LegaugError(f"differential of {name!r} lives over {p.ring}, expected {ring}")
            diff[name] = p
        for g in self.generators:
            if g.kind == REEB:
                diff.setdefault(g.name, NcPoly.zero(ring))
        self.differential: dict[str, NcPoly] = diff
        if component_count is None:
            component_count = max([max(g.r, g.c) for g in self.generators], default=1)
        self.component_count = component_count
        self.degrees: dict[str, int] = {g.name: g.degree for g in self.generators}

    # lookups ------------------------------------------------------------
    def info(self, name: str) -> GenInfo:
        try:
            return self._info[name]
        except KeyError:
            raise LegaugError(f"unknown generator {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._info

    @property
    def reeb(self) -> list[GenInfo]:
        return [g for g in self.generators if g.kind == REEB]

    @property
    def basepoints(self) -> list[GenInfo]:
        return [g for g in self.generators if g.kind == BASEPOINT]

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def d(self, name: str) -> NcPoly:
        if self.info(name).kind == BASEPOINT:
            return NcPoly.zero(self.ring)
        return self.differential[name]

    def apply(self, p: NcPoly) -> NcPoly:
        return extend_derivation(self.differential, self.degrees, p)

    def word_degree(self, word) -> int:
        return sum(self.degrees[symbol_name(x)] for x in word if x > 0)

    # transformations ----------------------------------------------------
    def over(self, ring: Ring) -> "Dga":
        """Reduce coefficients from the integers to a prime field."""
        if ring == self.ring:
            return self
        return Dga(
            ring,
            self.generators,
            {k: v.change_ring(ring) for k, v in self.differential.items()},
            self.component_count,
        )

    def substitute(self, values: Mapping[str, NcPoly], drop: Iterable[str] = ()) -> "Dga":
        """Apply an algebra map fixing every generator not in ``values``."""
        drop = set(drop)
        gens = [g for g in self.generators if g.name not in drop]
        diff = {
            g.name: extend_hom(values, self.differential[g.name], identity_on_missing=True)
            for g in gens
            if g.kind == REEB
        }
        return Dga(self.ring, gens, diff, self.component_count)

    def single_basepoint(self) -> "Dga":
        """Set every base point except the first to 1 and drop it."""
        bps = self.basepoints
        one = NcPoly.one(self.ring)
        extra = [b.name for b in bps[1:]]
        out = self.substitute({n: one for n in extra}, drop=extra)
        gens = [replace(g, r=1, c=1) for g in out.generators]
        return Dga(self.ring, gens, out.differential, 1)

    def renamed(self, mapping: Mapping[str, str]) -> "Dga":
        vals = {old: NcPoly.gen(self.ring, new) for old, new in mapping.items()}
        gens = [replace(g, name=mapping.get(g.name, g.name)) for g in self.generators]
        diff = {
            mapping.get(g.name, g.name): extend_hom(vals, self.differential[g.name], identity_on_missing=True)
            for g in self.generators
            if g.kind == REEB
        }
        return Dga(self.ring, gens, diff, self.component_count)

    def same_as(self, other: "Dga") -> bool:
        """Equality of generator tables (as sets) and differentials."""
        return (
            self.ring == other.ring
            and set(self.generators) == set(other.generators)
            and self.differential == other.differential
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dga):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None  # type: ignore[assignment]

    # serialization ------------------------------------------------------
    def to_json_obj(self) -> dict:
        diff = {}
        for g in self.reeb:
            p = self.differential[g.name]
            diff[g.name] = [[self.ring.signed(c), [str(s) for s in syms]] for c, syms in p.terms()]
        return {
            "ring": self.ring.name,
            "generators": [
                {"name": g.name, "degree": g.degree, "kind": g.kind, "r": g.r, "c": g.c} for g in self.generators
            ],
            "differential": diff,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj: Mapping, ring: Ring | None = None) -> "Dga":
        try:
            base_ring = Ring.parse(obj.get("ring", "Z"))
            gens = [
                GenInfo(g["name"], int(g["degree"]), g.get("kind", REEB), int(g.get("r", 1)), int(g.get("c", 1)))
                for g in obj["generators"]
            ]
            diff = {}
            for name, terms in obj.get("differential", {}).items():
                acc = NcPoly.zero(base_ring)
                for coef, syms in terms:
                    acc = acc + NcPoly.monomial(base_ring, int(coef), syms)
                diff[name] = acc
        except (KeyError, TypeError, ValueError) as exc:
            raise LegaugError(f"malformed DGA JSON: {exc}") from exc
        d = cls(base_ring, gens, diff)
        return d.over(ring) if ring is not None else d

    @classmethod
    def from_json(cls, text: str, ring: Ring | None = None) -> "Dga":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LegaugError(f"malformed DGA JSON: {exc}") from exc
        return cls.from_json_obj(obj, ring)

    def __str__(self) -> str:
        lines = [f"DGA over {self.ring.name}"]
        for g in self.generators:
            if g.kind == REEB:
                lines.append(f"  d {g.name} = {self.differential[g.name]}    |{g.name}| = {g.degree}")
        return "\n".join(lines)


def make_dga(
    ring: Ring,
    degrees: Mapping[str, int],
    differential: Mapping[str, str | NcPoly],
    basepoints: Sequence[str] = (),
    grading: Mapping[str, tuple[int, int]] | None = None,
) -> Dga:
    """Convenience constructor from degree and differential text tables."""
    grading = grading or {}
    gens = [GenInfo(n, d, REEB, *grading.get(n, (1, 1))) for n, d in degrees.items()]
    gens += [GenInfo(b, 0, BASEPOINT, *grading.get(b, (1, 1))) for b in basepoints]
    diff = {k: (NcPoly.parse(ring, v) if isinstance(v, str) else v) for k, v in differential.items()}
    return Dga(ring, gens, diff)


# ---------------------------------------------------------------------------
# validation


@dataclass
class Issue:
    kind: str
    generator: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.generator}: {self.detail}"


@dataclass
class Report:
    issues: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def kinds(self) -> set[str]:
        return {i.kind for i in self.issues}

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else "\n".join(str(i) for i in self.issues)


def check_dga(d: Dga, *, check_grading: bool = True) -> Report:
    """Validate degrees, square-zero, and composability of the differential."""
    rep = Report()
    info = d._info
    for g in d.basepoints:
        if g.degree != 0:
            rep.issues.append(Issue("basepoint-degree", g.name, f"degree {g.degree}"))
    for g in d.reeb:
        p = d.differential[g.name]
        for w, _ in p.items():
            for x in w:
                name = symbol_name(x)
                if name not in info:
                    rep.issues.append(Issue("unknown-symbol", g.name, name))
                elif x < 0 and info[name].kind != BASEPOINT:
                    rep.issues.append(Issue("inverted-generator", g.name, f"{name}^-1"))
        if rep.issues:
            continue
        for w, _ in p.items():
            deg = d.word_degree(w)
            if deg != g.degree - 1:
                rep.issues.append(Issue("degree", g.name, f"term {NcPoly.from_word(d.ring, w)} has degree {deg}"))
                break
        if check_grading:
            for w, _ in p.items():
                if not composable(d, w, g.r, g.c):
                    rep.issues.append(
                        Issue("link-grading", g.name, f"term {NcPoly.from_word(d.ring, w)} not composable")
                    )
                    break
    if rep.issues:
        return rep
    for g in d.reeb:
        dd = d.apply(d.differential[g.name])
        if not dd.is_zero():
            rep.issues.append(Issue("d-squared", g.name, str(dd)))
    return rep


def letter_grade(d: Dga, x: int) -> tuple[int, int]:
    g = d.info(symbol_name(x))
    return (g.r, g.c) if x > 0 else (g.c, g.r)


def composable(d: Dga, word, r: int, c: int) -> bool:
    cur = r
    for x in word:
        gr, gc = letter_grade(d, x)
        if gr != cur:
            return False
        cur = gc
    return cur == c


# ---------------------------------------------------------------------------
# augmentations


class Augmentation:
    """Values of a DGA map to the coefficient ring on generators."""

    __slots__ = ("ring", "values", "_key")

    def __init__(self, ring: Ring, values: Mapping[str, int]):
        self.ring = ring
        self.values = {k: ring.reduce(int(v)) for k, v in values.items()}
        self._key = tuple(sorted(self.values.items()))

    def __getitem__(self, name: str) -> int:
        try:
            return self.values[name]
        except KeyError:
            raise LegaugError(f"augmentation does not assign {name!r}") from None

    def get(self, name: str, default: int = 0) -> int:
        return self.values.get(name, default)

    def letter(self, x: int) -> int:
        v = self[symbol_name(x)]
        return v if x > 0 else self.ring.inv(v)

    def evaluate(self, p: NcPoly) -> int:
        total = 0
        for w, c in p.items():
            for x in w:
                c = c * self.letter(x)
                if not self.ring.reduce(c):
                    break
            total += c
        return self.ring.reduce(total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Augmentation):
            return NotImplemented
        return self.ring == other.ring and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.ring, self._key))

    def as_dict(self) -> dict[str, str]:
        return {k: str(self.ring.signed(v)) for k, v in self.values.items()}

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={self.ring.signed(v)}" for k, v in self.values.items())
        return f"Augmentation({self.ring.name}: {inner})"


def augmentation(d: Dga, ring: Ring, values: Mapping[str, int]) -> Augmentation:
    """Build an augmentation, filling unspecified nonzero-degree generators with 0."""
    full = {}
    for g in d.generators:
        if g.name in values:
            full[g.name] = values[g.name]
        elif g.kind == REEB and g.degree != 0:
            full[g.name] = 0
        else:
            raise LegaugError(f"augmentation does not assign {g.name!r}")
    return Augmentation(ring, full)


def _check_ring(d: Dga, eps: Augmentation) -> None:
    if d.ring != eps.ring and d.ring != ZZ:
        raise LegaugError(f"augmentation over {eps.ring} does not match DGA over {d.ring}")


def is_augmentation(d: Dga, eps: Augmentation, respect_link_grading: bool = False) -> bool:
    _check_ring(d, eps)
    ring = eps.ring
    for g in d.generators:
        v = eps[g.name]
        if g.kind == BASEPOINT:
            if not ring.is_unit(v):
                return False
        elif g.degree != 0 and v:
            return False
        elif respect_link_grading and g.r != g.c and v:
            return False
    dd = d.over(ring)
    for g in dd.reeb:
        if g.degree == 1 and eps.evaluate(dd.differential[g.name]):
            return False
    return True


def twist(d: Dga, eps: Augmentation) -> Dga:
    """The DGA with differential conjugated by a -> a + eps(a); base points specialize."""
    if not is_augmentation(d, eps):
        raise LegaugError("twist needs a valid augmentation")
    ring = eps.ring
    dd = d.over(ring)
    values = {}
    for g in dd.generators:
        if g.kind == BASEPOINT:
            values[g.name] = NcPoly.const(ring, eps[g.name])
        else:
            values[g.name] = NcPoly.gen(ring, g.name) + eps[g.name]
    inv = {b.name: NcPoly.const(ring, ring.inv(eps[b.name])) for b in dd.basepoints}
    gens = dd.reeb
    diff = {g.name: extend_hom(values, dd.differential[g.name], inv) for g in gens}
    for name, p in diff.items():
        if p.constant_term():
            raise LegaugError(f"twisted differential of {name!r} has a constant term")
    return Dga(ring, gens, diff, d.component_count)


def restrict_to_components(d: Dga, comps: Iterable[int]) -> Dga:
    """Sub-DGA on generators whose link grading lies in ``comps``, relabeled 1..|comps|."""
    comps = sorted(set(comps))
    pos = {c: i + 1 for i, c in enumerate(comps)}
    for b in d.basepoints:
        if b.r != b.c:
            raise LegaugError(f"base point {b.name!r} is off-diagonal; restriction needs a link grading")
    keep = [g for g in d.generators if g.r in pos and g.c in pos]
    kept = {g.name for g in keep}
    zero = NcPoly.zero(d.ring)
    kill = {g.name: zero for g in d.reeb if g.name not in kept}
    gens = [replace(g, r=pos[g.r], c=pos[g.c]) for g in keep]
    diff = {
        g.name: extend_hom(kill, d.differential[g.name], identity_on_missing=True) for g in keep if g.kind == REEB
    }
    return Dga(d.ring, gens, diff, len(comps))
