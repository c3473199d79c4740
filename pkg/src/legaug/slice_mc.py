"""Local categories of plat slices and their Morse complex models.

Matrices are lists of rows over F_p with 1-based bra-ket reading:
``<j|M|i>`` is ``M[j-1][i-1]`` (row ``j``, column ``i``).  An MC object on
a line with potentials ``mu`` is a strictly lower triangular square-zero
matrix ``d`` with ``<j|d|i> != 0`` only when ``mu(i) - mu(j) = 1``.

Hom elements of slice categories are dicts keyed by index pairs ``(i, j)``
with ``i <= j`` (standing for ``a_ij+``) and, for crossing slices, the key
``"c"`` for ``c+``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from . import linalg
from .bordered import crossing_corestriction, crossing_slice_dga, line_dga, line_matrix
from .dga import Augmentation, Dga, is_augmentation
from .errors import LegaugError
from .ncpoly import Ring

Matrix = list[list[int]]


# ---------------------------------------------------------------------------
# matrices


def zeros(n: int) -> Matrix:
    return [[0] * n for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    n = len(A)
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for k, a in enumerate(Ai):
            if a:
                Bk = B[k]
                for j in range(m):
                    if Bk[j]:
                        row[j] += a * Bk[j]
    return [[v % p for v in row] for row in out]


def madd(A: Matrix, B: Matrix, p: int, sign: int = 1) -> Matrix:
    return [[(a + sign * b) % p for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mscale(A: Matrix, c: int, p: int) -> Matrix:
    return [[(a * c) % p for a in row] for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


def inverse(A: Matrix, p: int) -> Matrix:
    n = len(A)
    ring = Ring(p)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        sol = linalg.solve(ring, A, e, n)
        if sol is None:
            raise LegaugError("matrix is not invertible")
        cols.append(sol)
    return transpose(cols)


def reduce(A: Matrix, p: int) -> Matrix:
    return [[v % p for v in row] for row in A]


def swap_matrix(n: int, k: int) -> Matrix:
    s = identity(n)
    s[k - 1][k - 1] = s[k][k] = 0
    s[k - 1][k] = s[k][k - 1] = 1
    return s


def unit_vector_map(n: int, j: int, i: int, c: int = 1) -> Matrix:
    """c |j><i|."""
    M = zeros(n)
    M[j - 1][i - 1] = c
    return M


def sigma(mu: Sequence[int], p_: int, q: int) -> int:
    """(-1)^((mu(p)+1) mu(q) + 1)."""
    return -1 if ((mu[p_ - 1] + 1) * mu[q - 1] + 1) % 2 else 1


# ---------------------------------------------------------------------------
# MC objects and morphisms


@dataclass(frozen=True)
class MCObject:
    mu: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]
    p: int

    @classmethod
    def make(cls, mu: Sequence[int], d: Matrix, p: int, check: bool = True) -> "MCObject":
        obj = cls(tuple(mu), tuple(tuple(v % p for v in row) for row in d), p)
        if check:
            problems = obj.problems()
            if problems:
                raise LegaugError("; ".join(problems))
        return obj

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def matrix(self) -> Matrix:
        return [list(r) for r in self.d]

    def problems(self) -> list[str]:
        n = self.n
        if len(self.d) != n or any(len(row) != n for row in self.d):
            return [f"d must be a {n}x{n} matrix"]
        out = []
        for j in range(n):
            for i in range(n):
                if self.d[j][i]:
                    if j <= i:
                        out.append(f"<{j + 1}|d|{i + 1}> is not strictly below the diagonal")
                    elif self.mu[i] - self.mu[j] != 1:
                        out.append(f"<{j + 1}|d|{i + 1}> breaks the grading")
        if any(any(r) for r in matmul(self.matrix, self.matrix, self.p)):
            out.append("d does not square to zero")
        return out

    def entry(self, j: int, i: int) -> int:
        return self.d[j - 1][i - 1]


@dataclass(frozen=True)
class MCMorphism:
    source: MCObject
    target: MCObject
    phi: tuple[tuple[int, ...], ...]
    degree: int

    @classmethod
    def make(cls, source: MCObject, target: MCObject, phi: Matrix, degree: int, check: bool = True) -> "MCMorphism":
        p = source.p
        mor = cls(source, target, tuple(tuple(v % p for v in row) for row in phi), degree)
        if check:
            problems = mor.problems()
            if problems:
                raise LegaugError("; ".join(problems))
        return mor

    @property
    def matrix(self) -> Matrix:
        return [list(r) for r in self.phi]

    def problems(self) -> list[str]:
        out = []
        mu = self.source.mu
        n = len(mu)
        for j in range(n):
            for i in range(n):
                if self.phi[j][i]:
                    if j < i:
                        out.append(f"<{j + 1}|phi|{i + 1}> is above the diagonal")
                    elif mu[i] - mu[j] != self.degree:
                        out.append(f"<{j + 1}|phi|{i + 1}> has the wrong degree")
        return out


def mc_differential(f: MCMorphism) -> MCMorphism:
    """D phi = d' phi - (-1)^|phi| phi d."""
    p = f.source.p
    left = matmul(f.target.matrix, f.matrix, p)
    right = matmul(f.matrix, f.source.matrix, p)
    sign = -1 if f.degree % 2 == 0 else 1
    return MCMorphism.make(f.source, f.target, madd(left, right, p, sign), f.degree + 1)


def compose(g: MCMorphism, f: MCMorphism) -> MCMorphism:
    return MCMorphism.make(f.source, g.target, matmul(g.matrix, f.matrix, f.source.p), f.degree + g.degree)


# ---------------------------------------------------------------------------
# line slices


def line_augmentation(mu: Sequence[int], ring: Ring, values: Mapping[tuple[int, int], int]) -> Augmentation:
    n = len(mu)
    vals = {f"a{i}_{j}": values.get((i, j), 0) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return Augmentation(ring, vals)


def line_value(eps: Augmentation, i: int, j: int) -> int:
    return eps.get(f"a{i}_{j}", 0)


def h_line_object(eps: Augmentation, mu: Sequence[int], check: bool = True) -> MCObject:
    """d = (-1)^mu eps(A)^T: <j|d|i> = (-1)^mu(j) eps(a_ij)."""
    n = len(mu)
    p = eps.ring.p
    d = zeros(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = line_value(eps, i, j)
            if v:
                d[j - 1][i - 1] = -v if mu[j - 1] % 2 else v
    return MCObject.make(mu, d, p, check)


def h_line_object_inverse(obj: MCObject, ring: Ring) -> Augmentation:
    n = obj.n
    vals = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = obj.entry(j, i)
            vals[(i, j)] = -v if obj.mu[j - 1] % 2 else v
    return line_augmentation(obj.mu, ring, vals)


def line_keys(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def line_degree(mu: Sequence[int], key) -> int:
    i, j = key
    return mu[i - 1] - mu[j - 1]


def _clean(x: Mapping, p: int) -> dict:
    return {k: v % p for k, v in x.items() if v % p}


def _add(acc: dict, key, v: int) -> None:
    acc[key] = acc.get(key, 0) + v


def line_m1(mu: Sequence[int], e1: Augmentation, e2: Augmentation, xi: Mapping) -> dict:
    """Differential of hom(e1, e2) in the line category."""
    n = len(mu)
    p = e1.ring.p
    acc: dict = {}
    for (r, s), c in xi.items():
        for i in range(1, r):
            v = line_value(e1, i, r)
            if v:
                _add(acc, (i, s), -c * v)
        sg = -1 if (mu[r - 1] + mu[s - 1]) % 2 else 1
        for j in range(s + 1, n + 1):
            v = line_value(e2, s, j)
            if v:
                _add(acc, (r, j), sg * c * v)
    return _clean(acc, p)


def line_m2(mu: Sequence[int], xi: Mapping, eta: Mapping, p: int) -> dict:
    """m2(xi, eta) for eta: e1 -> e2 and xi: e2 -> e3."""
    acc: dict = {}
    for (k, j), a in xi.items():
        dk = mu[k - 1] - mu[j - 1]
        for (i, k2), b in eta.items():
            if k2 != k:
                continue
            de = mu[i - 1] - mu[k - 1]
            sg = -1 if (dk * de + 1) % 2 else 1
            _add(acc, (i, j), sg * a * b)
    return _clean(acc, p)


def h_line_morphism(mu: Sequence[int], xi: Mapping, source: MCObject, target: MCObject) -> MCMorphism:
    """a_ij+ -> sigma_ij |j><i|."""
    n = len(mu)
    p = source.p
    M = zeros(n)
    degree = None
    for (i, j), c in xi.items():
        M[j - 1][i - 1] += sigma(mu, i, j) * c
        dd = mu[i - 1] - mu[j - 1]
        if degree is not None and degree != dd:
            raise LegaugError("h needs a homogeneous hom element")
        degree = dd
    return MCMorphism.make(source, target, reduce(M, p), 0 if degree is None else degree)


# ---------------------------------------------------------------------------
# crossing slices


@dataclass(frozen=True)
class CrossAug:
    """Augmentation of a crossing slice: a line augmentation with eps(a_{k,k+1}) = 0, plus eps(c)."""

    mu: tuple[int, ...]
    k: int
    line: Augmentation
    c: int

    @property
    def p(self) -> int:
        return self.line.ring.p

    def as_augmentation(self) -> Augmentation:
        vals = dict(self.line.values)
        vals["c"] = self.c
        return Augmentation(self.line.ring, vals)


def make_cross_aug(mu: Sequence[int], k: int, line: Augmentation, c: int) -> CrossAug:
    ca = CrossAug(tuple(mu), k, line, c % line.ring.p)
    dga = crossing_slice_dga(len(mu), k, mu, line.ring)
    if not is_augmentation(dga, ca.as_augmentation()):
        raise LegaugError("not an augmentation of the crossing slice")
    return ca


def cross_keys(n: int) -> list:
    return line_keys(n) + ["c"]


def cross_degree(mu: Sequence[int], k: int, key) -> int:
    if key == "c":
        return mu[k - 1] - mu[k] + 1
    return line_degree(mu, key)


def cross_m1(e1: CrossAug, e2: CrossAug, xi: Mapping) -> dict:
    mu, k, p = e1.mu, e1.k, e1.p
    n = len(mu)
    k1 = k + 1
    acc: dict = {}
    plain = {key: c for key, c in xi.items() if key != "c" and not (key[0] in (k, k1) and key[1] in (k, k1))}
    for key, v in line_m1(mu, e1.line, e2.line, plain).items():
        _add(acc, key, v)
    for key, c in xi.items():
        if key == (k, k):
            _add(acc, "c", c * e2.c)
            for i in range(1, k):
                _add(acc, (i, k), -c * line_value(e1.line, i, k))
            for j in range(k + 1, n + 1):
                _add(acc, (k, j), c * line_value(e2.line, k, j))
        elif key == (k, k1):
            _add(acc, "c", c)
            for i in range(1, k):
                _add(acc, (i, k1), -c * line_value(e1.line, i, k))
            sg = -1 if (mu[k - 1] + mu[k]) % 2 else 1
            for j in range(k1 + 1, n + 1):
                _add(acc, (k, j), sg * c * line_value(e2.line, k1, j))
        elif key == (k1, k1):
            _add(acc, "c", -c * e1.c)
            for i in range(1, k1):
                _add(acc, (i, k1), -c * line_value(e1.line, i, k1))
            for j in range(k1 + 1, n + 1):
                _add(acc, (k1, j), c * line_value(e2.line, k1, j))
    return _clean(acc, p)


def cross_m2(mu: Sequence[int], k: int, xi: Mapping, eta: Mapping, p: int) -> dict:
    acc = line_m2(mu, {a: v for a, v in xi.items() if a != "c"}, {a: v for a, v in eta.items() if a != "c"}, p)
    cx, ce = xi.get("c", 0), eta.get("c", 0)
    if cx and eta.get((k, k)):
        _add(acc, "c", -cx * eta[(k, k)])
    if ce and xi.get((k + 1, k + 1)):
        _add(acc, "c", -xi[(k + 1, k + 1)] * ce)
    return _clean(acc, p)


def right_mu(mu: Sequence[int], k: int) -> tuple[int, ...]:
    m = list(mu)
    m[k - 1], m[k] = m[k], m[k - 1]
    return tuple(m)


def eps_right(e: CrossAug) -> Augmentation:
    """Restriction of a crossing-slice augmentation to the right boundary line."""
    n = len(e.mu)
    ring = e.line.ring
    M = line_matrix(n, ring, "a")
    R = crossing_corestriction(M, e.k, "c", e.mu[e.k - 1] - e.mu[e.k])
    full = e.as_augmentation()
    vals = {(i, j): full.evaluate(R[i, j]) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return line_augmentation(right_mu(e.mu, e.k), ring, vals)


def rho_R(e1: CrossAug, e2: CrossAug, xi: Mapping) -> dict:
    """First-order restriction of a crossing-slice morphism to the right line (keys are b_ij+)."""
    mu, k, p = e1.mu, e1.k, e1.p
    n = len(mu)
    k1 = k + 1
    cdeg = mu[k - 1] - mu[k]
    acc: dict = {}
    for key, c in xi.items():
        if key == "c":
            for i in range(1, k):
                _add(acc, (i, k), c * line_value(e1.line, i, k))
            sg = 1 if cdeg % 2 else -1
            for j in range(k1 + 1, n + 1):
                _add(acc, (k1, j), sg * c * line_value(e2.line, k1, j))
            continue
        i, j = key
        if j == k and i < k:
            _add(acc, (i, k1), c)
            _add(acc, (i, k), c * e2.c)
        elif key == (k, k):
            _add(acc, (k1, k1), c)
        elif i == k and j > k1:
            _add(acc, (k1, j), c)
        elif j == k1 and i < k:
            _add(acc, (i, k), c)
        elif key == (k1, k1):
            _add(acc, (k, k), c)
        elif i == k1 and j > k1:
            _add(acc, (k, j), c)
            _add(acc, (k1, j), -c * e1.c)
        elif key == (k, k1):
            pass
        else:
            _add(acc, key, c)
    return _clean(acc, p)


def rho_R2(e1: CrossAug, xi: Mapping, eta: Mapping) -> dict:
    """Second-order term F_2(xi, eta) of the right restriction."""
    mu, k, p = e1.mu, e1.k, e1.p
    k1 = k + 1
    acc: dict = {}
    cx = xi.get("c", 0)
    if cx:
        dc = cross_degree(mu, k, "c")
        for key, b in eta.items():
            if key != "c" and key[1] == k and key[0] < k:
                da = line_degree(mu, key)
                sg = -1 if (dc * da + da + 1) % 2 else 1
                _add(acc, key, sg * cx * b)
    ce = eta.get("c", 0)
    if ce:
        dc = cross_degree(mu, k, "c")
        for key, a in xi.items():
            if key != "c" and key[0] == k1 and key[1] > k1:
                da = line_degree(mu, key)
                sg = -1 if (da * dc + 1) % 2 else 1
                _add(acc, key, sg * a * ce)
    return _clean(acc, p)


@dataclass(frozen=True)
class MCCrossObject:
    d: MCObject
    z: int
    k: int

    def problems(self) -> list[str]:
        out = self.d.problems()
        if self.z % self.d.p and self.d.mu[self.k - 1] != self.d.mu[self.k]:
            out.append("z must vanish unless the two crossing strands have equal potential")
        if self.d.entry(self.k + 1, self.k):
            out.append("<k+1|d|k> must vanish")
        return out


def h_cross(e: CrossAug) -> MCCrossObject:
    obj = MCCrossObject(h_line_object(e.line, e.mu), (-e.c) % e.p, e.k)
    probs = obj.problems()
    if probs:
        raise LegaugError("; ".join(probs))
    return obj


def _phi(n: int, k: int, c: int, p: int) -> Matrix:
    M = identity(n)
    M[k][k - 1] = c % p
    return M


def theta(n: int, k: int, z: int, p: int) -> Matrix:
    M = identity(n)
    M[k - 1][k - 1] = (-z) % p
    M[k - 1][k] = 1
    M[k][k - 1] = 1
    M[k][k] = 0
    return M


def h_cross_morphism(e1: CrossAug, e2: CrossAug, xi: Mapping) -> Matrix:
    """(phi')^-1 s_k h(xi_R) s_k phi as a matrix on the left line."""
    n, k, p = len(e1.mu), e1.k, e1.p
    muR = right_mu(e1.mu, k)
    xr = rho_R(e1, e2, xi)
    src = h_line_object(eps_right(e1), muR)
    tgt = h_line_object(eps_right(e2), muR)
    hR = h_line_morphism(muR, xr, src, tgt).matrix
    s = swap_matrix(n, k)
    phi1 = _phi(n, k, e1.c, p)
    phi2inv = _phi(n, k, -e2.c, p)
    return matmul(matmul(matmul(matmul(phi2inv, s, p), hR, p), s, p), phi1, p)


def homotopy_H(e1: CrossAug, xi: Mapping) -> Matrix:
    n, k, p = len(e1.mu), e1.k, e1.p
    M = zeros(n)
    c = xi.get("c", 0)
    if c:
        M[k][k - 1] = (sigma(e1.mu, k, k + 1) * c) % p
    return M


# ---------------------------------------------------------------------------
# cusps


def cusp_category_membership(d: MCObject, side: str = "right") -> bool:
    """Right-cusp objects: every cusp pair entry <2k|d|2k-1> is a unit."""
    if side not in ("left", "right"):
        raise LegaugError("side must be left or right")
    n = d.n
    if n % 2:
        return False
    for k in range(1, n // 2 + 1):
        if d.mu[2 * k - 2] != d.mu[2 * k - 1] + 1:
            raise LegaugError(f"cusp constraint fails at cusp {k}")
        if not d.entry(2 * k, 2 * k - 1) % d.p:
            return False
    return True


def standard_cusp_object(mu: Sequence[int], p: int) -> MCObject:
    n = len(mu)
    d = zeros(n)
    for k in range(1, n // 2 + 1):
        d[2 * k - 1][2 * k - 2] = 1
    return MCObject.make(mu, d, p)


def cusp_iso(d: MCObject, d0: MCObject | None = None) -> Matrix:
    """u = d0 d0^T + d0^T d, an invertible lower-triangular intertwiner d0 u = u d."""
    if not cusp_category_membership(d):
        raise LegaugError("object is not in the cusp category")
    p = d.p
    d0 = d0 or standard_cusp_object(d.mu, p)
    D0 = d0.matrix
    D0t = transpose(D0)
    return madd(matmul(D0, D0t, p), matmul(D0t, d.matrix, p), p)


def is_lower_triangular(M: Matrix) -> bool:
    return all(M[j][i] == 0 for j in range(len(M)) for i in range(len(M)) if i > j)


def is_invertible(M: Matrix, p: int) -> bool:
    return linalg.rank(Ring(p), M, len(M)) == len(M)


# ---------------------------------------------------------------------------
# random data


def random_mc_object(mu: Sequence[int], p: int, rng: random.Random, forbid: tuple[int, int] | None = None) -> MCObject:
    """s^-1 d0 s with d0 a random graded matching and s random filtered of degree 0."""
    n = len(mu)
    free = list(range(1, n + 1))
    rng.shuffle(free)
    d0 = zeros(n)
    used: set[int] = set()
    for i in free:
        if i in used or rng.random() < 0.3:
            continue
        cands = [j for j in range(i + 1, n + 1) if j not in used and mu[i - 1] - mu[j - 1] == 1]
        if cands:
            j = rng.choice(cands)
            d0[j - 1][i - 1] = rng.randrange(1, p)
            used |= {i, j}
    s = identity(n)
    for j in range(n):
        s[j][j] = rng.randrange(1, p)
        for i in range(j):
            if mu[i] == mu[j]:
                s[j][i] = rng.randrange(p)
    d = matmul(matmul(inverse(s, p), d0, p), s, p)
    return MCObject.make(mu, d, p)


def random_line_augmentation(mu: Sequence[int], ring: Ring, rng: random.Random) -> Augmentation:
    return h_line_object_inverse(random_mc_object(mu, ring.p, rng), ring)


def random_cross_aug(mu: Sequence[int], k: int, ring: Ring, rng: random.Random, tries: int = 200) -> CrossAug:
    for _ in range(tries):
        obj = random_mc_object(mu, ring.p, rng)
        if obj.entry(k + 1, k) == 0:
            break
    else:
        raise LegaugError("could not sample a crossing-slice object")
    c = rng.randrange(ring.p) if mu[k - 1] == mu[k] else 0
    return make_cross_aug(mu, k, h_line_object_inverse(obj, ring), c)


def random_element(keys: Sequence, degree_of, degree: int, p: int, rng: random.Random) -> dict:
    pool = [k for k in keys if degree_of(k) == degree]
    out = {k: rng.randrange(p) for k in pool}
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# verification


@dataclass
class SliceReport:
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, name: str) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1

    def fail(self, msg: str) -> None:
        if len(self.failures) < 50:
            self.failures.append(msg)


def _as_matrix_morphism(n: int, xi: Mapping, mu, p) -> Matrix:
    M = zeros(n)
    for (i, j), c in xi.items():
        M[j - 1][i - 1] = (M[j - 1][i - 1] + sigma(mu, i, j) * c) % p
    return M


def verify_line(mu: Sequence[int], ring: Ring, rng: random.Random, rep: SliceReport) -> None:
    p = ring.p
    n = len(mu)
    dga = line_dga(n, mu, ring)
    keys = line_keys(n)
    degs = sorted({line_degree(mu, k) for k in keys})
    e = [random_line_augmentation(mu, ring, rng) for _ in range(3)]
    objs = [h_line_object(x, mu) for x in e]
    for x, o in zip(e, objs):
        rep.count("line-object-bijection")
        if h_line_object_inverse(o, ring) != x or not is_augmentation(dga, x):
            rep.fail(f"line object bijection fails for mu={mu}")
    # d^2 = 0 iff eps kills the differential, on arbitrary graded data
    vals = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if mu[i - 1] - mu[j - 1] == 1:
                vals[(i, j)] = rng.randrange(p)
    raw = line_augmentation(mu, ring, vals)
    rep.count("line-square-zero")
    if (not h_line_object(raw, mu, check=False).problems()) != is_augmentation(dga, raw):
        rep.fail(f"d^2 = 0 and eps o d = 0 disagree for mu={mu}")
    # differential
    for deg in degs:
        xi = random_element(keys, lambda k: line_degree(mu, k), deg, p, rng)
        if not xi:
            continue
        h = h_line_morphism(mu, xi, objs[0], objs[1])
        lhs = _as_matrix_morphism(n, line_m1(mu, e[0], e[1], xi), mu, p)
        rhs = mc_differential(h).matrix
        rep.count("line-differential")
        if lhs != rhs:
            rep.fail(f"h(m1 xi) != D h(xi) on the line, mu={mu}, xi={xi}")
    # composition
    for d1 in degs:
        for d2 in degs:
            eta = random_element(keys, lambda k: line_degree(mu, k), d1, p, rng)
            xi = random_element(keys, lambda k: line_degree(mu, k), d2, p, rng)
            if not eta or not xi:
                continue
            prod = _as_matrix_morphism(n, line_m2(mu, xi, eta, p), mu, p)
            hx = h_line_morphism(mu, xi, objs[1], objs[2])
            he = h_line_morphism(mu, eta, objs[0], objs[1])
            rep.count("line-composition")
            if prod != compose(hx, he).matrix:
                rep.fail(f"h(m2) != h h on the line, mu={mu}")


def verify_crossing(mu: Sequence[int], k: int, ring: Ring, rng: random.Random, rep: SliceReport) -> None:
    p = ring.p
    n = len(mu)
    e1 = random_cross_aug(mu, k, ring, rng)
    e2 = random_cross_aug(mu, k, ring, rng)
    e3 = random_cross_aug(mu, k, ring, rng)
    keys = cross_keys(n)
    degf = lambda key: cross_degree(mu, k, key)
    degs = sorted({degf(x) for x in keys})
    muR = right_mu(mu, k)
    # objects: right restriction is theta_z d theta_z^-1
    for e in (e1, e2):
        X = h_cross(e)
        th = theta(n, k, X.z, p)
        lhs = matmul(matmul(th, X.d.matrix, p), inverse(th, p), p)
        rep.count("cross-object-right")
        if lhs != h_line_object(eps_right(e), muR).matrix:
            rep.fail(f"right restriction of crossing object fails, mu={mu}, k={k}")
        rep.count("theta-identity")
        if theta(n, k, X.z, p) != matmul(swap_matrix(n, k), _phi(n, k, e.c, p), p):
            rep.fail("s_k phi != theta_z")
    L1, L2 = h_line_object(e1.line, mu), h_line_object(e2.line, mu)
    R1, R2 = h_line_object(eps_right(e1), muR), h_line_object(eps_right(e2), muR)
    z1, z2 = (-e1.c) % p, (-e2.c) % p
    for deg in degs:
        xi = random_element(keys, degf, deg, p, rng)
        if not xi:
            continue
        m1xi = cross_m1(e1, e2, xi)
        # rho_R is a chain map
        rep.count("rho-chain-map")
        if rho_R(e1, e2, m1xi) != line_m1(muR, eps_right(e1), eps_right(e2), rho_R(e1, e2, xi)):
            rep.fail(f"rho_R does not commute with m1, mu={mu}, k={k}, xi={xi}")
        hx = h_cross_morphism(e1, e2, xi)
        # right restriction: theta_z' h(xi) theta_z^-1 = h(xi_R)
        lhs = matmul(matmul(theta(n, k, z2, p), hx, p), inverse(theta(n, k, z1, p), p), p)
        rhs = h_line_morphism(muR, rho_R(e1, e2, xi), R1, R2).matrix
        rep.count("cross-right-strict")
        if lhs != rhs:
            rep.fail(f"right restriction not strict, mu={mu}, k={k}")
        # left homotopy: h(xi_L) - h(xi) = D H xi + H m1 xi
        xl = {a: v for a, v in xi.items() if a != "c"}
        hl = h_line_morphism(mu, xl, L1, L2).matrix if xl else zeros(n)
        Hxi = MCMorphism.make(L1, L2, homotopy_H(e1, xi), deg - 1)
        DH = mc_differential(Hxi).matrix
        Hm1 = homotopy_H(e1, m1xi)
        rep.count("cross-left-homotopy")
        if madd(hl, hx, p, -1) != madd(DH, Hm1, p):
            rep.fail(f"left homotopy identity fails, mu={mu}, k={k}, xi={xi}")
    # functor relation at arity two
    for da in degs:
        for db in degs:
            a1 = random_element(keys, degf, da, p, rng)
            a2 = random_element(keys, degf, db, p, rng)
            if not a1 or not a2:
                continue
            lhs = rho_R(e1, e3, cross_m2(mu, k, a1, a2, p))
            r1 = line_m2(muR, rho_R(e2, e3, a1), rho_R(e1, e2, a2), p)
            r2 = line_m1(muR, eps_right(e1), eps_right(e3), rho_R2(e1, a1, a2))
            r3 = rho_R2(e1, cross_m1(e2, e3, a1), a2)
            r4 = rho_R2(e1, a1, cross_m1(e1, e2, a2))
            tot: dict = {}
            for part, sg in ((r1, 1), (r2, 1), (r3, 1), (r4, -1 if da % 2 else 1)):
                for key, v in part.items():
                    _add(tot, key, sg * v)
            rep.count("functor-relation")
            if _clean(tot, p) != lhs:
                rep.fail(f"A-infinity functor relation fails, mu={mu}, k={k}")


def verify_cusp(mu: Sequence[int], ring: Ring, rng: random.Random, rep: SliceReport) -> None:
    p = ring.p
    for _ in range(10):
        obj = random_mc_object(mu, p, rng)
        if cusp_category_membership(obj):
            break
    else:
        return
    u = cusp_iso(obj)
    d0 = standard_cusp_object(mu, p)
    rep.count("cusp-iso")
    if matmul(d0.matrix, u, p) != matmul(u, obj.matrix, p) or not is_lower_triangular(u) or not is_invertible(u, p):
        rep.fail(f"cusp iso fails for mu={mu}")


def verify_transfer(mu: Sequence[int], ring: Ring, rng: random.Random, rep: SliceReport) -> None:
    """Conjugate objects agree on vanishing of <k+1|d|k> at every k."""
    p = ring.p
    n = len(mu)
    obj = random_mc_object(mu, p, rng)
    g = identity(n)
    for j in range(n):
        g[j][j] = rng.randrange(1, p)
        for i in range(j):
            if mu[i] == mu[j]:
                g[j][i] = rng.randrange(p)
    other = MCObject.make(mu, matmul(matmul(g, obj.matrix, p), inverse(g, p), p), p)
    for k in range(1, n):
        rep.count("transfer")
        if (obj.entry(k + 1, k) == 0) != (other.entry(k + 1, k) == 0):
            rep.fail(f"transfer lemma fails at k={k}, mu={mu}")


def random_cusp_mu(n: int, rng: random.Random, spread: int = 2) -> list[int]:
    mu = []
    for _ in range(n // 2):
        low = rng.randint(0, spread)
        mu += [low + 1, low]
    return mu


def verify_slice_equivalences(n: int, mu: Sequence[int] | None, trials: int, ring: Ring, seed: int = 0) -> SliceReport:
    """Randomized checks of the line, crossing, cusp and transfer identities."""
    if ring.p is None:
        raise LegaugError("slice checks need a finite field")
    rng = random.Random(seed)
    rep = SliceReport()
    for _ in range(trials):
        m = list(mu) if mu is not None else [rng.randint(0, 2) for _ in range(n)]
        if len(m) != n:
            raise LegaugError("need one potential per strand")
        verify_line(m, ring, rng, rep)
        if n >= 2:
            verify_crossing(m, rng.randint(1, n - 1), ring, rng, rep)
        verify_transfer(m, ring, rng, rep)
        if n % 2 == 0:
            verify_cusp(random_cusp_mu(n, rng), ring, rng, rep)
    return rep


def right_cusp_object_image(mu: Sequence[int], sigma_: Sequence[int], ring: Ring) -> tuple[set, set]:
    """Left restrictions of right-cusp augmentations, and line augmentations with unit cusp entries."""
    from .augcat import enumerate_augmentations
    from .bordered import right_cusp_slice_dga

    n = len(mu)
    dga = right_cusp_slice_dga(n, mu, sigma_, ring)
    line = line_dga(n, mu, ring)
    restricted = set()
    for e in enumerate_augmentations(dga, ring):
        restricted.add(tuple(e[g.name] for g in line.generators))
    expected = set()
    for e in enumerate_augmentations(line, ring):
        if all(e[f"a{2 * k - 1}_{2 * k}"] for k in range(1, n // 2 + 1)):
            expected.add(tuple(e[g.name] for g in line.generators))
    return restricted, expected


# ---------------------------------------------------------------------------
# slice DGAs with point gradings, for the m-copy categories


def _point_graded(dga: Dga, grade) -> Dga:
    return Dga(dga.ring, [replace(g, r=grade(g)[0], c=grade(g)[1]) for g in dga.generators], dict(dga.differential))


def _pair(name: str) -> tuple[int, int]:
    i, j = name[1:].split("_")
    return int(i), int(j)


def graded_line_dga(n: int, mu: Sequence[int], ring: Ring) -> Dga:
    """Line algebra whose generator a_ij runs from point i to point j."""
    return _point_graded(line_dga(n, mu, ring), lambda g: _pair(g.name))


def graded_crossing_dga(n: int, k: int, mu: Sequence[int], ring: Ring) -> Dga:
    return _point_graded(crossing_slice_dga(n, k, mu, ring), lambda g: (k, k + 1) if g.name == "c" else _pair(g.name))


def graded_right_cusp_dga(n: int, mu: Sequence[int], sigma_: Sequence[int], ring: Ring) -> Dga:
    """Right-cusp slice: x_k runs from 2k-1 to 2k, and t_k follows the orientation through cusp k."""
    from .bordered import right_cusp_slice_dga

    def grade(g):
        if g.name.startswith("a"):
            return _pair(g.name)
        k = int(g.name[1:])
        if g.name.startswith("x") or sigma_[k - 1] == 1:
            return 2 * k - 1, 2 * k
        return 2 * k, 2 * k - 1

    return _point_graded(right_cusp_slice_dga(n, mu, sigma_, ring), grade)


def point_families(n: int, cusps: int = 0) -> dict:
    """CopyPlan options naming the y family of point i ``a{i}_{i}`` and the x family of t_k ``u{k}``."""
    opts: dict = {"arc_families": {i: f"a{i}_{i}" for i in range(1, n + 1)}}
    if cusps:
        opts["x_families"] = {f"t{k}": f"u{k}" for k in range(1, cusps + 1)}
    return opts


def slice_key(key) -> "tuple[str, str]":
    """m-copy key of a slice hom basis key."""
    if key == "c":
        return ("a", "c")
    i, j = key
    return ("y", f"a{i}_{i}") if i == j else ("a", f"a{i}_{j}")


def from_slice_key(key) -> "tuple[int, int] | str":
    if key == ("a", "c"):
        return "c"
    return _pair(key[1])


def right_cusp_restriction_check(mu: Sequence[int], sigma_: Sequence[int], ring: Ring) -> tuple[int, int]:
    """Compare hom cohomology of the right-cusp slice with that of its left line restriction.

    Returns (matching pairs, total pairs) over all pairs of augmentations.
    """
    from .augcat import AugCategory, enumerate_augmentations

    n = len(mu)
    cusp = AugCategory(graded_right_cusp_dga(n, mu, sigma_, ring), ring, point_families(n, n // 2))
    line = AugCategory(graded_line_dga(n, mu, ring), ring, point_families(n))
    names = [g.name for g in line.dga.generators]
    augs = enumerate_augmentations(cusp.dga, ring)
    restrict = {e: Augmentation(ring, {x: e[x] for x in names}) for e in augs}
    good = 0
    for e1 in augs:
        for e2 in augs:
            h1 = {k: v for k, v in cusp.cohomology(e1, e2).items() if v}
            h2 = {k: v for k, v in line.cohomology(restrict[e1], restrict[e2]).items() if v}
            good += h1 == h2
    return good, len(augs) ** 2
