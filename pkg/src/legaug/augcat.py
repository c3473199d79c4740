"""Augmentation categories: hom complexes, composition maps, cohomology.

Hom spaces are spanned by duals of copy generators.  A morphism between
augmentations placed on copies ``i`` and ``j`` of a multi-copy lives in the
dual of the ``(i, j)`` mixed generators; it is a positive morphism when
``i < j`` (spanned by ``a+``, ``x_k+``, ``y_k+``) and a negative one when
``i > j`` (spanned by ``a-`` only).

Composition maps are read from twisted differentials.  For objects
``X_0, ..., X_k`` placed on distinct copies ``p_0, ..., p_k`` and arguments
``alpha_i in Hom(X_{i-1}, X_i)``,

    m_k(alpha_k, ..., alpha_1) = (-1)^s  sum_g  g^dual * Coeff_{alpha_1 alpha_2 ... alpha_k}(d_eps g)

where ``g`` runs over generators with superscript ``(p_0, p_k)``, the word
letters carry superscripts ``(p_{i-1}, p_i)``, and writing ``b_1, ..., b_k``
for the arguments in the order they appear in ``m_k(...)``,

    s = k(k-1)/2 + sum_{p<q} |b_p||b_q| + |b_2| + |b_4| + ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg
from .dga import REEB, Augmentation, Dga, is_augmentation
from .errors import LegaugError
from .mcopy import CopyPlan, Key, chain_coefficients
from .ncpoly import Ring, symbol_name

PLUS = "plus"
MINUS = "minus"

MAX_SEARCH = 2**24


# ---------------------------------------------------------------------------
# enumeration


def enumerate_augmentations(d: Dga, ring: Ring, respect_link_grading: bool = False) -> list[Augmentation]:
    """All augmentations of ``d`` over F_p, in lexicographic order (base points first)."""
    p = ring.p
    if p is None:
        raise LegaugError("augmentations are enumerated over a finite field")
    dd = d.over(ring)
    tvars = [b.name for b in dd.basepoints]
    avars = [
        g.name
        for g in dd.reeb
        if g.degree == 0 and not (respect_link_grading and g.r != g.c)
    ]
    space = (p - 1) ** len(tvars) * p ** len(avars)
    if space > MAX_SEARCH:
        raise LegaugError(f"augmentation search space {space} exceeds the cap {MAX_SEARCH}")
    order = tvars + avars
    index = {name: i for i, name in enumerate(order)}
    # constraints: eps(d g) = 0 for |g| = 1, keeping terms whose letters are all variables
    checks: list[list] = [[] for _ in order]
    constant_fail = False
    for g in dd.reeb:
        if g.degree != 1:
            continue
        terms = []
        last = -1
        for w, c in dd.differential[g.name].items():
            letters = []
            ok = True
            for x in w:
                name = symbol_name(x)
                if name not in index:
                    ok = False
                    break
                letters.append((index[name], x > 0))
            if ok:
                terms.append((c, letters))
                for i, _ in letters:
                    last = max(last, i)
        if not terms:
            continue
        if last < 0:
            if sum(c for c, _ in terms) % p:
                constant_fail = True
            continue
        checks[last].append(terms)
    if constant_fail:
        return []
    values = [0] * len(order)
    inverses = [0] * len(order)
    out: list[Augmentation] = []
    fixed = {g.name: 0 for g in dd.reeb if g.name not in index}

    def holds(terms) -> bool:
        total = 0
        for c, letters in terms:
            for i, pos in letters:
                c = c * (values[i] if pos else inverses[i]) % p
                if not c:
                    break
            total += c
        return total % p == 0

    def rec(i: int) -> None:
        if i == len(order):
            vals = dict(fixed)
            vals.update(zip(order, values))
            out.append(Augmentation(ring, {g.name: vals[g.name] for g in dd.generators}))
            return
        rng = range(1, p) if i < len(tvars) else range(p)
        for v in rng:
            values[i] = v
            if i < len(tvars):
                inverses[i] = pow(v, -1, p)
            if all(holds(t) for t in checks[i]):
                rec(i + 1)
        values[i] = 0

    rec(0)
    return out


# ---------------------------------------------------------------------------
# hom spaces


@dataclass(frozen=True)
class HomBasis:
    source: Augmentation
    target: Augmentation
    direction: str
    keys: tuple[Key, ...]
    degrees: tuple[int, ...]
    names: tuple[str, ...]

    @property
    def suffix(self) -> str:
        return "+" if self.direction == PLUS else "-"

    def label(self, key: Key) -> str:
        return self.names[self.keys.index(key)] + self.suffix

    @property
    def labels(self) -> list[str]:
        return [self.label(k) for k in self.keys]

    def degree(self, key: Key) -> int:
        return self.degrees[self.keys.index(key)]

    def __len__(self) -> int:
        return len(self.keys)

    def as_json(self) -> list[dict]:
        return [{"name": self.label(k), "degree": deg} for k, deg in zip(self.keys, self.degrees)]


class HomElement:
    """Linear combination of basis elements of a hom space."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: HomBasis, coeffs: Mapping[Key, int] | None = None):
        self.basis = basis
        p = basis.source.ring.p
        clean = {}
        for k, v in (coeffs or {}).items():
            if k not in basis.keys:
                raise LegaugError(f"{k} is not in this hom space")
            v = v % p if p else v
            if v:
                clean[k] = v
        self.coeffs: dict[Key, int] = clean

    @classmethod
    def from_vector(cls, basis: HomBasis, vec: Sequence[int]) -> "HomElement":
        return cls(basis, {k: v for k, v in zip(basis.keys, vec)})

    def vector(self) -> list[int]:
        return [self.coeffs.get(k, 0) for k in self.basis.keys]

    def __add__(self, other: "HomElement") -> "HomElement":
        _same_space(self.basis, other.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return HomElement(self.basis, out)

    def __neg__(self) -> "HomElement":
        return self.scale(-1)

    def __sub__(self, other: "HomElement") -> "HomElement":
        return self + (-other)

    def scale(self, c: int) -> "HomElement":
        return HomElement(self.basis, {k: v * c for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomElement):
            return NotImplemented
        return _space_key(self.basis) == _space_key(other.basis) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((_space_key(self.basis), frozenset(self.coeffs.items())))

    def degrees(self) -> set[int]:
        return {self.basis.degree(k) for k in self.coeffs}

    def homogeneous_degree(self) -> int | None:
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        ring = self.basis.source.ring
        parts = []
        for k in self.basis.keys:
            if k in self.coeffs:
                c = ring.signed(self.coeffs[k])
                lab = self.basis.label(k)
                parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c} {lab}")
        return " + ".join(parts)

    __repr__ = __str__


def _space_key(b: HomBasis):
    return (b.source, b.target, b.direction)


def _same_space(a: HomBasis, b: HomBasis) -> None:
    if _space_key(a) != _space_key(b):
        raise LegaugError("elements live in different hom spaces")


# ---------------------------------------------------------------------------
# the category


@dataclass
class Report:
    ok: bool
    details: dict = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


class AugCategory:
    """Composition maps and hom complexes for augmentations of one DGA over F_p (or Z)."""

    def __init__(self, dga: Dga, ring: Ring, plan_options: Mapping | None = None):
        self.ring = ring
        self.dga = dga.over(ring) if dga.ring != ring else dga
        self.plan = CopyPlan(self.dga, **(plan_options or {}))
        self._chains: dict = {}
        self._index: dict = {}

    # -- bases ---------------------------------------------------------
    def check(self, eps: Augmentation) -> None:
        if eps.ring != self.ring:
            raise LegaugError(f"augmentation over {eps.ring}, category over {self.ring}")
        if not is_augmentation(self.dga, eps):
            raise LegaugError("not an augmentation of this DGA")

    def hom_basis(self, source: Augmentation, target: Augmentation, direction: str = PLUS) -> HomBasis:
        if direction not in (PLUS, MINUS):
            raise LegaugError(f"direction must be plus or minus, got {direction!r}")
        keys = self.plan.keys() if direction == PLUS else [("a", g.name) for g in self.dga.reeb]
        return HomBasis(
            source,
            target,
            direction,
            tuple(keys),
            tuple(self.plan.degree(k) + 1 for k in keys),
            tuple(self.plan.label(k) for k in keys),
        )

    def element(self, source, target, direction, coeffs: Mapping[str, int]) -> HomElement:
        """Element from labels such as ``{"a1+": 1, "y1+": -1}``."""
        basis = self.hom_basis(source, target, direction)
        lookup = {basis.label(k): k for k in basis.keys}
        try:
            return HomElement(basis, {lookup[lab]: v for lab, v in coeffs.items()})
        except KeyError as exc:
            raise LegaugError(f"unknown basis label {exc}") from None

    def unit(self, eps: Augmentation) -> HomElement:
        basis = self.hom_basis(eps, eps, PLUS)
        return HomElement(basis, {("y", y): -1 for y in self.plan.y_labels})

    # -- composition ---------------------------------------------------
    def _word_index(self, objs: tuple[Augmentation, ...], ranks: tuple[int, ...]):
        key = (objs, ranks)
        idx = self._index.get(key)
        if idx is None:
            augs = {r: e for r, e in zip(ranks, objs)}
            chains = chain_coefficients(self.plan, augs, ranks)
            idx = {}
            for out, words in chains.items():
                for w, c in words.items():
                    idx.setdefault(w, []).append((out, c))
            self._index[key] = idx
        return idx

    def compose(
        self, objs: Sequence[Augmentation], path: Sequence[int], args: Sequence[HomElement]
    ) -> HomElement:
        """``m_k(args)`` for objects ``objs[0..k]`` placed on copies ``path``.

        ``args`` are written as in ``m_k(alpha_k, ..., alpha_1)``: the last
        argument is a morphism from ``objs[0]`` to ``objs[1]``.
        """
        k = len(args)
        if len(objs) != k + 1 or len(path) != k + 1:
            raise LegaugError("need k+1 objects and copy positions for k arguments")
        if k == 0:
            raise LegaugError("m_0 is not defined")
        ranks = tuple(sorted(path).index(p) + 1 for p in path)
        objs = tuple(objs)
        for i, a in enumerate(reversed(args)):
            b = a.basis
            want = PLUS if ranks[i] < ranks[i + 1] else MINUS
            if b.source != objs[i] or b.target != objs[i + 1] or b.direction != want:
                raise LegaugError(f"argument {k - i} does not match the composable chain")
        out_dir = PLUS if ranks[0] < ranks[-1] else MINUS
        out_basis = self.hom_basis(objs[0], objs[-1], out_dir)
        idx = self._word_index(objs, ranks)
        p = self.ring.p
        plan = self.plan
        acc: dict[Key, int] = {}
        # arguments in the order they appear: b_1 = args[0] ... b_k = args[k-1]; word letter i is b_{k+1-i}
        arg_items = [list(a.coeffs.items()) for a in args]
        for combo in itertools.product(*arg_items):
            keys = [c[0] for c in combo]
            coef = 1
            for c in combo:
                coef *= c[1]
            word = tuple(reversed(keys))
            hits = idx.get(word)
            if not hits:
                continue
            degs = [plan.degree(kk) + 1 for kk in keys]
            sign = _sigma(degs)
            for out, c in hits:
                acc[out] = acc.get(out, 0) + sign * coef * c
        if p is not None:
            acc = {k_: v % p for k_, v in acc.items() if v % p}
        return HomElement(out_basis, acc)

    def m_plus(self, augs: Sequence[Augmentation], alphas: Sequence[HomElement]) -> HomElement:
        """m_k(alpha_k, ..., alpha_1) with alpha_i in hom(augs[i-1], augs[i])."""
        return self.compose(augs, list(range(1, len(augs) + 1)), alphas)

    def m_minus(self, augs: Sequence[Augmentation], betas: Sequence[HomElement]) -> HomElement:
        """m_k(beta_1, ..., beta_k) with beta_i in Hom_-(augs[i], augs[i-1]).

        The output lies in Hom_-(augs[k], augs[0]).
        """
        objs = list(reversed(augs))
        path = list(range(len(augs), 0, -1))
        return self.compose(objs, path, betas)

    def m1(self, x: HomElement) -> HomElement:
        b = x.basis
        path = [1, 2] if b.direction == PLUS else [2, 1]
        return self.compose([b.source, b.target], path, [x])

    def m2(self, x: HomElement, y: HomElement) -> HomElement:
        """m_2(x, y) for y: A -> B and x: B -> C, in the positive or negative category."""
        if x.basis.direction == PLUS and y.basis.direction == PLUS:
            return self.m_plus([y.basis.source, y.basis.target, x.basis.target], [x, y])
        if x.basis.direction == MINUS and y.basis.direction == MINUS:
            return self.compose([y.basis.source, y.basis.target, x.basis.target], [3, 2, 1], [x, y])
        raise LegaugError("mixed directions: use graded_m2_mixed")

    def graded_m2_mixed(
        self, signs: Sequence[str], augs: Sequence[Augmentation], alpha: HomElement, beta: HomElement
    ) -> HomElement:
        """m_2(alpha, beta) for beta: augs[0] -> augs[1], alpha: augs[1] -> augs[2].

        ``signs`` gives the directions of (alpha, beta, output) as "+"/"-".
        """
        s = tuple("+" if x in ("+", PLUS) else "-" for x in signs)
        if s in (("+", "+", "-"), ("-", "-", "+")):
            raise LegaugError(f"sign pattern {s} cannot be realized on three copies")
        for perm in itertools.permutations((1, 2, 3)):
            p1, p2, p3 = perm
            if ((p2 < p3) == (s[0] == "+")) and ((p1 < p2) == (s[1] == "+")) and ((p1 < p3) == (s[2] == "+")):
                return self.compose(list(augs), [p1, p2, p3], [alpha, beta])
        raise LegaugError(f"sign pattern {s} cannot be realized on three copies")

    # -- matrices and cohomology ----------------------------------------
    def m1_matrix(self, source, target, direction=PLUS) -> tuple[HomBasis, list[list[int]]]:
        """Matrix of m_1 (columns = images of basis elements)."""
        basis = self.hom_basis(source, target, direction)
        n = len(basis)
        cols = []
        for key in basis.keys:
            img = self.m1(HomElement(basis, {key: 1}))
            cols.append(img.vector())
        rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        return basis, rows

    def complex(self, source, target, direction=PLUS) -> "Cochain":
        basis, mat = self.m1_matrix(source, target, direction)
        return Cochain(self.ring, list(basis.degrees), mat, basis)

    def cohomology(self, source, target, direction=PLUS) -> dict[int, int]:
        return self.complex(source, target, direction).betti()

    # -- identities -----------------------------------------------------
    def ainfty_defect(self, objs: Sequence[Augmentation], path: Sequence[int], args: Sequence[HomElement]) -> HomElement:
        """Left side of the A-infinity relation on ``args`` (written m(args))."""
        n = len(args)
        ranks = [sorted(path).index(p) + 1 for p in path]
        total = None
        # args[0] is the last morphism; object chain objs[0] -> ... -> objs[n]
        for r in range(n):
            for s in range(1, n - r + 1):
                t = n - r - s
                inner_args = args[r : r + s]
                # inner maps objs[t] -> objs[t+s]
                inner = self.compose(objs[t : t + s + 1], ranks[t : t + s + 1], inner_args)
                if inner.is_zero():
                    continue
                outer_objs = list(objs[: t + 1]) + list(objs[t + s :])
                outer_path = ranks[: t + 1] + ranks[t + s :]
                outer_args = list(args[:r]) + [inner] + list(args[r + s :])
                val = self.compose(outer_objs, outer_path, outer_args)
                pre = sum(_elt_degree(a) for a in args[:r])
                sign = (-1) ** (r + s * t + s * pre)
                val = val.scale(sign)
                total = val if total is None else total + val
        if total is None:
            out_dir = PLUS if ranks[0] < ranks[-1] else MINUS
            return HomElement(self.hom_basis(objs[0], objs[-1], out_dir))
        return total

    def m1_oracle(self, source, target) -> tuple[HomBasis, list[list[int]]]:
        """m_1 on hom(source, target) from closed formulas (single base point only)."""
        d = self.dga
        if len(self.plan.bps) != 1:
            raise LegaugError("the closed m_1 formula needs a single base point")
        ring = self.ring
        t = self.plan.bps[0]
        basis = self.hom_basis(source, target, PLUS)
        pos = {k: i for i, k in enumerate(basis.keys)}
        n = len(basis)
        M = [[0] * n for _ in range(n)]
        e1, e2 = source, target
        # y+
        yi = pos[("y", self.plan.arc_y[1])]
        M[pos[("x", t)]][yi] = ring.inv(e1[t]) * e2[t] - 1
        for g in d.reeb:
            sgn = -1 if g.degree % 2 else 1
            M[pos[("a", g.name)]][yi] += e2[g.name] - sgn * e1[g.name]
        # a+ and x+: read single letters out of d a with prefix on copy 1 and suffix on copy 2
        for g in d.reeb:
            row = pos[("a", g.name)]
            for w, c in d.differential[g.name].items():
                for i, x in enumerate(w):
                    pre = c
                    for y in w[:i]:
                        pre *= e1.letter(y)
                    post = 1
                    for y in w[i + 1 :]:
                        post *= e2.letter(y)
                    name = symbol_name(x)
                    if d.info(name).kind == REEB:
                        M[row][pos[("a", name)]] += pre * post
                    elif x > 0:
                        M[row][pos[("x", name)]] += pre * e1[name] * post
                    else:
                        M[row][pos[("x", name)]] -= pre * ring.inv(e2[name]) * post
        p = ring.p
        if p is not None:
            M = [[v % p for v in row] for row in M]
        return basis, M


def _elt_degree(x: HomElement) -> int:
    d = x.homogeneous_degree()
    if d is None:
        if x.is_zero():
            return 0
        raise LegaugError("A-infinity signs need homogeneous arguments")
    return d


def _sigma(degs: Sequence[int]) -> int:
    k = len(degs)
    s = k * (k - 1) // 2
    for p in range(k):
        for q in range(p + 1, k):
            s += degs[p] * degs[q]
    s += sum(degs[i] for i in range(1, k, 2))
    return -1 if s % 2 else 1


# ---------------------------------------------------------------------------
# cochain complexes over F_p


class Cochain:
    """A finite cochain complex given by a differential matrix and degrees of basis vectors."""

    def __init__(self, ring: Ring, degrees: Sequence[int], matrix: Sequence[Sequence[int]], basis=None):
        self.ring = ring
        self.degrees = list(degrees)
        self.matrix = [list(r) for r in matrix]
        self.basis = basis
        self.n = len(self.degrees)

    def block(self, deg: int) -> list[list[int]]:
        """Matrix of the differential from degree ``deg`` to ``deg + 1``."""
        src = [j for j, d in enumerate(self.degrees) if d == deg]
        tgt = [i for i, d in enumerate(self.degrees) if d == deg + 1]
        return [[self.matrix[i][j] for j in src] for i in tgt]

    def indices(self, deg: int) -> list[int]:
        return [j for j, d in enumerate(self.degrees) if d == deg]

    def rank_out(self, deg: int) -> int:
        b = self.block(deg)
        src = len(self.indices(deg))
        if not b or not src:
            return 0
        return linalg.rank(self.ring, b, src)

    def betti(self) -> dict[int, int]:
        out = {}
        for deg in sorted(set(self.degrees)):
            dim = len(self.indices(deg)) - self.rank_out(deg) - self.rank_out(deg - 1)
            out[deg] = dim
        return out

    def is_complex(self) -> bool:
        p = self.ring.p
        n = self.n
        for i in range(n):
            for j in range(n):
                s = sum(self.matrix[i][k] * self.matrix[k][j] for k in range(n))
                if (s % p if p else s) != 0:
                    return False
        return True

    def apply(self, vec: Sequence[int]) -> list[int]:
        p = self.ring.p
        out = [sum(self.matrix[i][j] * vec[j] for j in range(self.n)) for i in range(self.n)]
        return [v % p for v in out] if p else out

    def cocycles(self, deg: int) -> list[list[int]]:
        idx = self.indices(deg)
        b = self.block(deg)
        ns = linalg.nullspace(self.ring, b, len(idx)) if b else [
            [1 if i == j else 0 for j in range(len(idx))] for i in range(len(idx))
        ]
        return [self._embed(idx, v) for v in ns]

    def coboundaries(self, deg: int) -> list[list[int]]:
        src = self.indices(deg - 1)
        vecs = []
        for j in src:
            vecs.append(self.apply([1 if i == j else 0 for i in range(self.n)]))
        vecs = [v for v in vecs if any(v)]
        return linalg.row_reduce_basis(self.ring, vecs, self.n) if vecs else []

    def _embed(self, idx, v):
        out = [0] * self.n
        for i, x in zip(idx, v):
            out[i] = x
        return out

    def cohomology_basis(self, deg: int) -> list[list[int]]:
        """Cocycles whose classes form a basis of cohomology in degree ``deg``."""
        B = self.coboundaries(deg)
        reps: list[list[int]] = []
        span = list(B)
        for z in self.cocycles(deg):
            if not linalg.in_span(self.ring, span, z, self.n):
                reps.append(z)
                span.append(z)
        return reps

    def class_of(self, vec: Sequence[int], deg: int, reps=None) -> list[int] | None:
        """Coordinates of the class of a cocycle in the basis ``cohomology_basis(deg)``."""
        reps = reps if reps is not None else self.cohomology_basis(deg)
        B = self.coboundaries(deg)
        gens = reps + B
        if not gens:
            return [] if not any(x % self.ring.p for x in vec) else None
        rows = linalg.transpose(gens, len(gens), self.n)
        sol = linalg.solve(self.ring, rows, list(vec), len(gens))
        if sol is None:
            return None
        return sol[: len(reps)]

    def is_coboundary(self, vec: Sequence[int], deg: int) -> bool:
        return linalg.in_span(self.ring, self.coboundaries(deg), vec, self.n)


# ---------------------------------------------------------------------------
# homotopy and isomorphism


def dga_homotopic(d: Dga, eps1: Augmentation, eps2: Augmentation) -> tuple[bool, dict[str, int] | None]:
    """Decide whether two augmentations are DGA homotopic; return a witness K on success."""
    ring = eps1.ring
    if ring.p is None:
        raise LegaugError("homotopy is decided over a field")
    dd = d.over(ring)
    for b in dd.basepoints:
        if eps1[b.name] != eps2[b.name]:
            return False, None
    unknowns = [g.name for g in dd.reeb if g.degree == -1]
    col = {n: i for i, n in enumerate(unknowns)}
    rows = []
    rhs = []
    for g in dd.reeb:
        if g.degree != 0:
            continue
        row = [0] * len(unknowns)
        for w, c in dd.differential[g.name].items():
            for i, x in enumerate(w):
                name = symbol_name(x)
                if name not in col:
                    continue
                coef = c
                for y in w[:i]:
                    coef = coef * eps1.letter(y) % ring.p
                for y in w[i + 1 :]:
                    coef = coef * eps2.letter(y) % ring.p
                row[col[name]] += coef
        rows.append([v % ring.p for v in row])
        rhs.append((eps1[g.name] - eps2[g.name]) % ring.p)
    if not unknowns:
        ok = not any(rhs)
        return ok, ({} if ok else None)
    sol = linalg.solve(ring, rows, rhs, len(unknowns))
    if sol is None:
        return False, None
    return True, dict(zip(unknowns, sol))


@dataclass
class IsoWitness:
    alpha: HomElement
    beta: HomElement | None


def is_isomorphic_augplus(
    cat: AugCategory, eps1: Augmentation, eps2: Augmentation, construct_inverse: bool = False
) -> tuple[bool, IsoWitness | None]:
    """Isomorphism in the positive category, decided by the homotopy linear system.

    With ``construct_inverse`` the cocycle ``alpha = e - sum K(b) b+`` and an
    inverse ``beta = e + B`` with ``B - m_2(B, A) = A`` are built and checked.
    """
    ok, K = dga_homotopic(cat.dga, eps1, eps2)
    if not ok or not construct_inverse:
        return ok, None
    ring = cat.ring
    basis12 = cat.hom_basis(eps1, eps2, PLUS)
    basis21 = cat.hom_basis(eps2, eps1, PLUS)
    e12 = {("y", y): -1 for y in cat.plan.y_labels}
    A = HomElement(basis12, {("a", n): v for n, v in K.items()})
    alpha = HomElement(basis12, e12) - A
    # B in the span of degree-0 a+ of hom(eps2, eps1): solve B - m2(B, A) = A
    deg0 = [("a", g.name) for g in cat.dga.reeb if g.degree == -1]
    cols = []
    for key in deg0:
        Bk = HomElement(basis21, {key: 1})
        img = Bk - cat.m2(Bk, A)
        cols.append(img.vector())
    target = A.vector()
    n = len(basis21)
    rows = [[cols[j][i] for j in range(len(deg0))] for i in range(n)]
    sol = linalg.solve(ring, rows, target, len(deg0)) if deg0 else ([] if not any(target) else None)
    if sol is None:
        raise LegaugError("inverse cocycle equation has no solution")
    B = HomElement(basis21, dict(zip(deg0, sol)))
    beta = HomElement(basis21, e12) + B
    unit1 = cat.unit(eps1)
    if cat.m2(beta, alpha) != unit1 or not cat.m1(beta).is_zero() or not cat.m1(alpha).is_zero():
        raise LegaugError("constructed inverse failed verification")
    return True, IsoWitness(alpha, beta)


def isomorphic_in_cohomology(cat: AugCategory, eps1: Augmentation, eps2: Augmentation, limit: int = 4096) -> bool:
    """Search for mutually inverse degree-0 classes directly in cohomology."""
    c12 = cat.complex(eps1, eps2, PLUS)
    c21 = cat.complex(eps2, eps1, PLUS)
    h12 = c12.cohomology_basis(0)
    h21 = c21.cohomology_basis(0)
    if not h12 or not h21:
        return False
    p = cat.ring.p
    if p ** (len(h12) + len(h21)) > limit:
        raise LegaugError("cohomology search space too large")
    c11 = cat.complex(eps1, eps1, PLUS)
    c22 = cat.complex(eps2, eps2, PLUS)
    u1 = cat.unit(eps1).vector()
    u2 = cat.unit(eps2).vector()

    def comb(reps, coefs):
        v = [0] * len(reps[0])
        for r, c in zip(reps, coefs):
            v = [(a + c * b) % p for a, b in zip(v, r)]
        return v

    b12, b21 = c12.basis, c21.basis
    for ca in itertools.product(range(p), repeat=len(h12)):
        if not any(ca):
            continue
        alpha = HomElement.from_vector(b12, comb(h12, ca))
        for cb in itertools.product(range(p), repeat=len(h21)):
            if not any(cb):
                continue
            beta = HomElement.from_vector(b21, comb(h21, cb))
            ba = [(x - y) % p for x, y in zip(cat.m2(beta, alpha).vector(), u1)]
            ab = [(x - y) % p for x, y in zip(cat.m2(alpha, beta).vector(), u2)]
            if c11.is_coboundary(ba, 0) and c22.is_coboundary(ab, 0):
                return True
    return False


# ---------------------------------------------------------------------------
# structural checks


def duality_check(cat: AugCategory, eps1: Augmentation, eps2: Augmentation) -> Report:
    plus = cat.cohomology(eps1, eps2, PLUS)
    minus = cat.cohomology(eps2, eps1, MINUS)
    degs = set(plus) | {2 - k for k in minus}
    ok = all(plus.get(k, 0) == minus.get(2 - k, 0) for k in degs)
    return Report(ok, {"plus": plus, "minus": minus})


def exact_sequence_check(cat: AugCategory, eps1: Augmentation, eps2: Augmentation) -> Report:
    """Check 0 -> Hom_-(eps1, eps2) -> hom(eps1, eps2) -> C(x+, y+) -> 0 and its long exact sequence."""
    for b in cat.plan.bps:
        if eps1[b] != eps2[b]:
            return Report(False, {"hypothesis": "base point values differ"}, ["hypothesis fails: reported only"])
    ring = cat.ring
    p = ring.p
    plusB, Mp = cat.m1_matrix(eps1, eps2, PLUS)
    minusB, Mm = cat.m1_matrix(eps1, eps2, MINUS)
    msgs = []
    apos = [i for i, k in enumerate(plusB.keys) if k[0] == "a"]
    qpos = [i for i, k in enumerate(plusB.keys) if k[0] != "a"]
    # sub-complex: images of a+ have no x, y components
    for j in apos:
        if any(Mp[i][j] % p for i in qpos):
            msgs.append(f"m1({plusB.labels[j]}) leaves the a+ span")
    # restriction agrees with the negative differential
    mpos = {k: i for i, k in enumerate(minusB.keys)}
    for j in apos:
        for i in apos:
            if (Mp[i][j] - Mm[mpos[plusB.keys[i]]][mpos[plusB.keys[j]]]) % p:
                msgs.append(f"m1 block mismatch at ({plusB.labels[i]}, {plusB.labels[j]})")
    A = Cochain(ring, minusB.degrees, Mm)
    B = Cochain(ring, plusB.degrees, Mp)
    Cq = Cochain(ring, [plusB.degrees[i] for i in qpos], [[Mp[i][j] for j in qpos] for i in qpos])
    hA, hB, hC = A.betti(), B.betti(), Cq.betti()
    degs = sorted(set(hA) | set(hB) | set(hC) | {d + 1 for d in hC})
    # connecting map H^i(C) -> H^{i+1}(A): lift, apply m1, read off a-part
    delta_rank: dict[int, int] = {}
    for deg in sorted(set(hC)):
        reps = Cq.cohomology_basis(deg)
        images = []
        for z in reps:
            lift = [0] * len(plusB)
            for zi, i in zip(z, qpos):
                lift[i] = zi
            img = B.apply(lift)
            if any(img[i] % p for i in qpos):
                msgs.append("lift of a quotient cocycle is not a cocycle mod the sub-complex")
            images.append([img[i] for i in apos])
        # rank of images modulo coboundaries of A in degree deg+1
        cob = A.coboundaries(deg + 1)
        r_all = linalg.rank(ring, cob + images, len(apos)) if (cob or images) else 0
        r_cob = linalg.rank(ring, cob, len(apos)) if cob else 0
        delta_rank[deg] = r_all - r_cob
    exact = True
    for deg in degs:
        lhs = hB.get(deg, 0)
        rhs = (hA.get(deg, 0) - delta_rank.get(deg - 1, 0)) + (hC.get(deg, 0) - delta_rank.get(deg, 0))
        if lhs != rhs:
            exact = False
            msgs.append(f"dimension mismatch in degree {deg}: {lhs} != {rhs}")
    chi = lambda h: sum((-1) ** k * v for k, v in h.items())
    ok = exact and not msgs
    return Report(ok, {"minus": hA, "plus": hB, "quotient": hC, "delta_rank": delta_rank,
                       "chi_plus": chi(hB), "chi_minus": chi(hA)}, msgs)


def tb_from_minus(cat: AugCategory, eps: Augmentation) -> int:
    """Euler characteristic of H^* Hom_-(eps, eps); equals -tb for knots."""
    h = cat.cohomology(eps, eps, MINUS)
    return sum((-1) ** k * v for k, v in h.items())


def leverson_product(d: Dga, eps: Augmentation) -> int:
    ring = eps.ring
    prod = 1
    for b in d.basepoints:
        prod = prod * eps[b.name]
    return ring.reduce(prod)
