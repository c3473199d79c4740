"""The algebraic m-copy of a DGA with a weak link grading.

Every generator of the m-copy is an entry of a matrix: ``A_a`` for each Reeb
generator ``a`` (all entries), a unitriangular ``X_t`` and a strictly upper
``Y_t`` for each base point ``t``, and ``Delta_t = diag(t^1, ..., t^m)``.
The differential of each matrix is a short matrix expression; the entries
of those expressions give the differentials of the copy generators.

The weak link grading of the base is by arcs, numbered by the base point
that starts them, so the ``Y`` matrix of arc ``l`` is the one attached to
the ``l``-th base point.

Two evaluators share the same matrix expressions:

* ``build_mcopy`` multiplies symbolic matrices and returns the whole DGA.
* ``chain_coefficients`` specializes the diagonal by a tuple of
  augmentations while multiplying, and keeps only words that walk along a
  prescribed path of copy indices.  That is all the composition maps need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .dga import BASEPOINT, REEB, Augmentation, Dga, GenInfo, check_dga, is_augmentation
from .errors import LegaugError
from .ncpoly import NcPoly, Ring, symbol_name

# family keys: ("a", reeb name), ("x", base point name), ("y", base point name)
Key = tuple[str, str]


def family_names(bp: str) -> tuple[str, str]:
    """Names of the x and y families attached to base point ``bp``."""
    if bp.startswith("t"):
        return "x" + bp[1:], "y" + bp[1:]
    return f"x_{bp}", f"y_{bp}"


def copy_name(base: str, i: int, j: int | None, m: int) -> str:
    if j is None:
        return f"{base}^{i}"
    return f"{base}^{i}{j}" if m <= 9 else f"{base}^{i},{j}"


@dataclass(frozen=True)
class Factor:
    kind: str  # "A", "D", "X", "Xi", "Y"
    name: str  # reeb generator, base point, or base point owning the Y family
    exp: int = 1


Expr = list[tuple[int, list[Factor]]]


class CopyPlan:
    """Matrix expressions for the differentials of a base DGA's m-copy.

    ``arc_families`` names the ``Y`` family of each arc of the weak link
    grading; by default arc ``l`` uses the y family of the ``l``-th base
    point.  ``x_families`` overrides the names of the x families.
    """

    def __init__(
        self,
        base: Dga,
        arc_families: Mapping[int, str] | None = None,
        x_families: Mapping[str, str] | None = None,
    ):
        self.base = base
        self.bps = [b.name for b in base.basepoints]
        self.x_label = {b: family_names(b)[0] for b in self.bps}
        if x_families:
            self.x_label.update(x_families)
        if arc_families is None:
            if not self.bps:
                raise LegaugError("the m-copy needs at least one base point or explicit arc families")
            arc_families = {l + 1: family_names(name)[1] for l, name in enumerate(self.bps)}
        self.arc_y = dict(arc_families)
        self.y_labels = list(dict.fromkeys(self.arc_y.values()))
        names = set(base.names)
        for fam in list(self.x_label.values()) + self.y_labels:
            if fam in names:
                raise LegaugError(f"family name {fam!r} collides with a base generator")
        for g in base.generators:
            if g.r not in self.arc_y or g.c not in self.arc_y:
                raise LegaugError(f"generator {g.name!r} has arc grading ({g.r},{g.c}) outside the known arcs")

    def phi(self, word) -> list[Factor]:
        out: list[Factor] = []
        for x in word:
            name = symbol_name(x)
            g = self.base.info(name)
            if g.kind == REEB:
                out.append(Factor("A", name))
            elif x > 0:
                out += [Factor("D", name, 1), Factor("X", name)]
            else:
                out += [Factor("Xi", name), Factor("D", name, -1)]
        return out

    def expr(self, key: Key) -> Expr:
        kind, name = key
        if kind == "a":
            g = self.base.info(name)
            out: Expr = [(c, self.phi(w)) for w, c in self.base.differential[name].items()]
            out.append((1, [Factor("Y", self.arc_y[g.r]), Factor("A", name)]))
            out.append((1 if g.degree % 2 else -1, [Factor("A", name), Factor("Y", self.arc_y[g.c])]))
            return out
        if kind == "x":
            g = self.base.info(name)
            return [
                (1, [Factor("D", name, -1), Factor("Y", self.arc_y[g.r]), Factor("D", name, 1), Factor("X", name)]),
                (-1, [Factor("X", name), Factor("Y", self.arc_y[g.c])]),
            ]
        if kind == "y":
            return [(1, [Factor("Y", name), Factor("Y", name)])]
        raise LegaugError(f"unknown family {kind!r}")

    def keys(self) -> list[Key]:
        return (
            [("a", g.name) for g in self.base.reeb]
            + [("x", b) for b in self.bps]
            + [("y", y) for y in self.y_labels]
        )

    def label(self, key: Key) -> str:
        kind, name = key
        if kind == "x":
            return self.x_label[name]
        return name

    def degree(self, key: Key) -> int:
        """Degree of a copy generator in the family ``key``."""
        kind, name = key
        if kind == "a":
            return self.base.degrees[name]
        return 0 if kind == "x" else -1


# ---------------------------------------------------------------------------
# full symbolic m-copy


class McopyDga(Dga):
    """The m-copy together with back-references to the base generators."""

    def __init__(self, base: Dga, m: int, generators, differential, origin, plan: CopyPlan):
        super().__init__(base.ring, generators, differential, m)
        self.base = base
        self.plan = plan
        self.m = m
        self.origin: dict[str, tuple[str, str, int, int]] = origin


def _symbolic_matrices(plan: CopyPlan, m: int, ring: Ring):
    zero = NcPoly.zero(ring)
    one = NcPoly.one(ring)
    cache: dict[Factor, list[list[NcPoly]]] = {}

    def mat(f: Factor) -> list[list[NcPoly]]:
        if f in cache:
            return cache[f]
        M = [[zero] * m for _ in range(m)]
        if f.kind == "A":
            for i in range(m):
                for j in range(m):
                    M[i][j] = NcPoly.gen(ring, copy_name(f.name, i + 1, j + 1, m))
        elif f.kind == "D":
            for i in range(m):
                M[i][i] = NcPoly.gen(ring, copy_name(f.name, i + 1, None, m), f.exp)
        elif f.kind in ("X", "Y"):
            fam = plan.x_label[f.name] if f.kind == "X" else f.name
            for i in range(m):
                if f.kind == "X":
                    M[i][i] = one
                for j in range(i + 1, m):
                    M[i][j] = NcPoly.gen(ring, copy_name(fam, i + 1, j + 1, m))
        elif f.kind == "Xi":
            xname = plan.x_label[f.name]
            Nneg = [[zero] * m for _ in range(m)]
            for i in range(m):
                for j in range(i + 1, m):
                    Nneg[i][j] = -NcPoly.gen(ring, copy_name(xname, i + 1, j + 1, m))
            power = [[one if i == j else zero for j in range(m)] for i in range(m)]
            total = [row[:] for row in power]
            for _ in range(m - 1):
                power = _matmul(power, Nneg, m, zero)
                total = [[total[i][j] + power[i][j] for j in range(m)] for i in range(m)]
            M = total
        cache[f] = M
        return M

    return mat


def _matmul(P, Q, m, zero):
    out = [[zero] * m for _ in range(m)]
    for i in range(m):
        for k in range(m):
            if P[i][k].is_zero():
                continue
            for j in range(m):
                if not Q[k][j].is_zero():
                    out[i][j] = out[i][j] + P[i][k] * Q[k][j]
    return out


def _row_times(row: list[NcPoly], M: list[list[NcPoly]], m: int, zero: NcPoly) -> list[NcPoly]:
    out = [zero] * m
    for k in range(m):
        if row[k].is_zero():
            continue
        for j in range(m):
            if not M[k][j].is_zero():
                out[j] = out[j] + row[k] * M[k][j]
    return out


def _entry(plan: CopyPlan, mat, expr: Expr, i: int, j: int, m: int, ring: Ring) -> NcPoly:
    zero = NcPoly.zero(ring)
    total = zero
    for coef, factors in expr:
        row = [NcPoly.const(ring, coef) if q == i else zero for q in range(m)]
        for f in factors:
            row = _row_times(row, mat(f), m, zero)
        total = total + row[j]
    return total


def build_mcopy(base: Dga, m: int, *, check: bool = True, plan: CopyPlan | None = None) -> McopyDga:
    """Full m-copy DGA of ``base``."""
    if m < 1:
        raise LegaugError("m must be at least 1")
    if check:
        rep = check_dga(base)
        if not rep.ok:
            raise LegaugError(f"base DGA is not valid with its weak link grading: {rep}")
    plan = plan or CopyPlan(base)
    ring = base.ring
    mat = _symbolic_matrices(plan, m, ring)
    gens: list[GenInfo] = []
    diff: dict[str, NcPoly] = {}
    origin: dict[str, tuple[str, str, int, int]] = {}
    for key in plan.keys():
        kind, name = key
        expr = plan.expr(key)
        fam = plan.label(key)
        deg = plan.degree(key)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if kind != "a" and j <= i:
                    continue
                cname = copy_name(fam, i, j, m)
                gens.append(GenInfo(cname, deg, REEB, i, j))
                origin[cname] = (kind, name, i, j)
                diff[cname] = _entry(plan, mat, expr, i - 1, j - 1, m, ring)
    for b in plan.bps:
        for i in range(1, m + 1):
            cname = copy_name(b, i, None, m)
            gens.append(GenInfo(cname, 0, BASEPOINT, i, i))
            origin[cname] = ("t", b, i, i)
    return McopyDga(base, m, gens, diff, origin, plan)


def relabel(mc: McopyDga, indices: Sequence[int], m_target: int) -> Dga:
    """Rename copy generators of ``mc`` by sending copy ``i`` to ``indices[i-1]``.

    Link gradings are left as positions 1..len(indices), matching the output
    of ``restrict_to_components``.
    """
    mapping = {}
    for cname, (kind, name, i, j) in mc.origin.items():
        fam = name if kind == "t" else mc.plan.label((kind, name))
        if kind == "t":
            mapping[cname] = copy_name(fam, indices[i - 1], None, m_target)
        else:
            mapping[cname] = copy_name(fam, indices[i - 1], indices[j - 1], m_target)
    return mc.renamed(mapping)


def diagonal_augmentation(mc: McopyDga, augs: Sequence[Augmentation]) -> Augmentation:
    """Augmentation of the m-copy that is ``augs[i-1]`` on copy ``i`` and zero on mixed generators."""
    if len(augs) != mc.m:
        raise LegaugError(f"need {mc.m} augmentations, got {len(augs)}")
    ring = augs[0].ring
    for e in augs:
        if e.ring != ring:
            raise LegaugError("augmentations over different rings")
        if not is_augmentation(mc.base, e):
            raise LegaugError("diagonal entries must be augmentations of the base")
    vals = {}
    for cname, (kind, name, i, j) in mc.origin.items():
        vals[cname] = augs[i - 1][name] if i == j and kind in ("a", "t") else 0
    out = Augmentation(ring, vals)
    return out


# ---------------------------------------------------------------------------
# path-restricted evaluation


def chain_coefficients(
    plan: CopyPlan,
    augs: Mapping[int, Augmentation],
    path: Sequence[int],
    max_len: int | None = None,
) -> dict[Key, dict[tuple[Key, ...], int]]:
    """Chain-word coefficients of twisted differentials of output generators.

    ``path = (p_0, ..., p_k)`` lists distinct copy indices.  For every
    family, the output generator has superscript ``(p_0, p_k)``; the word
    letters have superscripts ``(p_{s-1}, p_s)``.  Diagonal copy generators
    are evaluated by the augmentation placed on that copy, and words
    containing any other letter are discarded.  Returns
    ``{output family: {word as family keys: coefficient}}``.
    """
    k = len(path) - 1
    if max_len is None:
        max_len = k
    if len(set(path)) != len(path):
        raise LegaugError("path must visit distinct copies")
    ring = next(iter(augs.values())).ring
    p = ring.p
    up = [path[s] < path[s + 1] for s in range(k)]
    result: dict[Key, dict[tuple[Key, ...], int]] = {}
    diag_cache: dict[tuple[Factor, int], int] = {}

    def diag(f: Factor, copy: int) -> int:
        key = (f, copy)
        if key not in diag_cache:
            if f.kind == "A":
                v = augs[copy][f.name]
            elif f.kind == "D":
                v = augs[copy][f.name]
                if f.exp < 0:
                    v = ring.inv(v)
            elif f.kind in ("X", "Xi"):
                v = 1
            else:
                v = 0
            diag_cache[key] = v
        return diag_cache[key]

    for key in plan.keys():
        if key[0] != "a" and not path[0] < path[-1]:
            continue
        acc: dict[tuple[Key, ...], int] = {}
        for coef, factors in plan.expr(key):
            states: dict[tuple[int, tuple[Key, ...]], int] = {(0, ()): coef}
            for f in factors:
                nxt: dict[tuple[int, tuple[Key, ...]], int] = {}
                for (s, word), c in states.items():
                    dv = diag(f, path[s])
                    if dv:
                        kk = (s, word)
                        nxt[kk] = nxt.get(kk, 0) + c * dv
                    if s >= k or len(word) >= max_len:
                        continue
                    if f.kind == "A":
                        kk = (s + 1, word + (("a", f.name),))
                        nxt[kk] = nxt.get(kk, 0) + c
                    elif f.kind in ("X", "Y") and up[s]:
                        kk = (s + 1, word + (("x" if f.kind == "X" else "y", f.name),))
                        nxt[kk] = nxt.get(kk, 0) + c
                    elif f.kind == "Xi":
                        # entry of X^-1 along consecutive up-steps: (-1)^r x x ... x
                        sign = -c
                        w = word
                        t = s
                        while t < k and up[t] and len(w) < max_len:
                            w = w + (("x", f.name),)
                            t += 1
                            kk = (t, w)
                            nxt[kk] = nxt.get(kk, 0) + sign
                            sign = -sign
                if p is not None:
                    nxt = {kk: v % p for kk, v in nxt.items() if v % p}
                else:
                    nxt = {kk: v for kk, v in nxt.items() if v}
                states = nxt
                if not states:
                    break
            for (s, word), c in states.items():
                if s == k:
                    acc[word] = acc.get(word, 0) + c
        if p is not None:
            acc = {w: v % p for w, v in acc.items() if v % p}
        else:
            acc = {w: v for w, v in acc.items() if v}
        if acc:
            result[key] = acc
    return result
