"""Bordered DGAs of plat slices and the left-to-right assembly of the global DGA.

The DGA of a plat is never found by searching for disks.  Instead a boundary
matrix ``M`` records, for each pair of positions ``i < j`` on a vertical
line, the polynomial counting disks that reach that line from the left.
Crossings update ``M`` by a fixed substitution and right cusps read off the
differential of their Reeb chord from ``M``.

Generator names in assembled DGAs: crossing chords ``a1, a2, ...`` in
left-to-right order, right cusp chords ``c1, ..., c_{n/2}`` top to bottom,
base points ``t1, ..., t_{n/2}``, and left-boundary line generators
``p{i}_{j}`` for sections that do not start at the left edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .dga import BASEPOINT, REEB, Augmentation, Dga, GenInfo
from .errors import LegaugError
from .ncpoly import NcPoly, Ring, ZZ, extend_hom
from .plat import KnotTrace, MaslovAssignment, PlatDiagram, solve_maslov, trace_knot


def line_sign(mu: Sequence[int], i: int, k: int) -> int:
    """(-1)^(|a_ik| + 1) for the line algebra with potentials ``mu`` (1-based)."""
    return -1 if (mu[i - 1] - mu[k - 1]) % 2 else 1


def line_dga(
    n: int,
    mu: Sequence[int],
    ring: Ring = ZZ,
    prefix: str = "a",
    grading: Sequence[int] | None = None,
) -> Dga:
    """The line algebra on pairs of points of a vertical line, named ``{prefix}{i}_{j}``."""
    if len(mu) != n:
        raise LegaugError("need one potential per point")
    grading = grading or [1] * n
    gens = []
    diff = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            name = f"{prefix}{i}_{j}"
            gens.append(GenInfo(name, mu[i - 1] - mu[j - 1] - 1, REEB, grading[i - 1], grading[j - 1]))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            acc = NcPoly.zero(ring)
            for k in range(i + 1, j):
                term = NcPoly.gen(ring, f"{prefix}{i}_{k}") * NcPoly.gen(ring, f"{prefix}{k}_{j}")
                acc = acc + term.scale(line_sign(mu, i, k))
            diff[f"{prefix}{i}_{j}"] = acc
    return Dga(ring, gens, diff)


def crossing_slice_dga(n: int, k: int, mu: Sequence[int], ring: Ring = ZZ, prefix: str = "a") -> Dga:
    """Line algebra plus a crossing chord ``c`` between positions k and k+1."""
    if not 1 <= k <= n - 1:
        raise LegaugError(f"crossing index {k} out of range")
    line = line_dga(n, mu, ring, prefix)
    gens = list(line.generators) + [GenInfo("c", mu[k - 1] - mu[k], REEB)]
    diff = dict(line.differential)
    diff["c"] = NcPoly.gen(ring, f"{prefix}{k}_{k + 1}")
    return Dga(ring, gens, diff)


def right_cusp_slice_dga(
    n: int, mu: Sequence[int], sigma: Sequence[int], ring: Ring = ZZ, prefix: str = "a"
) -> Dga:
    """Line algebra plus cusp chords ``x_k`` with d x_k = t_k^sigma_k + a_{2k-1,2k}."""
    if n % 2:
        raise LegaugError("right cusp slice needs an even number of points")
    for k in range(1, n // 2 + 1):
        if mu[2 * k - 2] != mu[2 * k - 1] + 1:
            raise LegaugError(f"cusp constraint violated at cusp {k}")
    line = line_dga(n, mu, ring, prefix)
    gens = list(line.generators)
    diff = dict(line.differential)
    for k in range(1, n // 2 + 1):
        gens.append(GenInfo(f"x{k}", 1, REEB))
    for k in range(1, n // 2 + 1):
        gens.append(GenInfo(f"t{k}", 0, BASEPOINT))
        diff[f"x{k}"] = NcPoly.gen(ring, f"t{k}", sigma[k - 1]) + NcPoly.gen(ring, f"{prefix}{2 * k - 1}_{2 * k}")
    return Dga(ring, gens, diff)


# ---------------------------------------------------------------------------
# boundary matrices


@dataclass(frozen=True)
class BoundaryMatrix:
    """Strictly upper triangular matrix of polynomials, stored sparsely (1-based keys)."""

    n: int
    ring: Ring
    entries: Mapping[tuple[int, int], NcPoly] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> NcPoly:
        i, j = ij
        if not (1 <= i < j <= self.n):
            raise LegaugError(f"entry {ij} outside the strictly upper triangle")
        return self.entries.get(ij) or NcPoly.zero(self.ring)

    def degree_defects(self, mu: Sequence[int], degrees: Mapping[str, int]) -> list[tuple[int, int]]:
        from .ncpoly import symbol_name

        bad = []
        for (i, j), p in self.entries.items():
            want = mu[i - 1] - mu[j - 1] - 1
            for w, _ in p.items():
                if sum(degrees[symbol_name(x)] for x in w if x > 0) != want:
                    bad.append((i, j))
                    break
        return bad

    def chain_defects(self, d: Dga, mu: Sequence[int]) -> list[tuple[int, int]]:
        """Entries where the prefix differential disagrees with the line-algebra relation."""
        bad = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                want = NcPoly.zero(self.ring)
                for k in range(i + 1, j):
                    want = want + (self[i, k] * self[k, j]).scale(line_sign(mu, i, k))
                if d.apply(self[i, j]) != want:
                    bad.append((i, j))
        return bad


def left_cusp_matrix(n: int, ring: Ring = ZZ) -> BoundaryMatrix:
    if n % 2:
        raise LegaugError("left cusps need an even number of strands")
    one = NcPoly.one(ring)
    return BoundaryMatrix(n, ring, {(2 * k - 1, 2 * k): one for k in range(1, n // 2 + 1)})


def line_matrix(n: int, ring: Ring, prefix: str) -> BoundaryMatrix:
    return BoundaryMatrix(
        n,
        ring,
        {(i, j): NcPoly.gen(ring, f"{prefix}{i}_{j}") for i in range(1, n + 1) for j in range(i + 1, n + 1)},
    )


def crossing_corestriction(M: BoundaryMatrix, k: int, c: NcPoly | str, c_degree: int) -> BoundaryMatrix:
    """Boundary matrix just right of a crossing between positions k and k+1."""
    n, ring = M.n, M.ring
    if not 1 <= k <= n - 1:
        raise LegaugError(f"crossing index {k} out of range")
    if isinstance(c, str):
        c = NcPoly.gen(ring, c)
    odd = c_degree % 2 == 1
    k1 = k + 1
    out: dict[tuple[int, int], NcPoly] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) == (k, k1):
                continue
            if j == k:  # b_ik
                v = M[i, k1] + M[i, k] * c
            elif i == k:  # b_kj, j > k+1
                v = M[k1, j]
            elif j == k1:  # b_{i,k+1}, i < k
                v = M[i, k]
            elif i == k1:  # b_{k+1,j}
                v = M[k, j] + (c * M[k1, j] if odd else -(c * M[k1, j]))
            else:
                v = M[i, j]
            if v:
                out[(i, j)] = v
    return BoundaryMatrix(n, ring, out)


# ---------------------------------------------------------------------------
# sections and assembly


@dataclass(frozen=True)
class Section:
    """Bordered DGA of the slices ``start..stop`` (0 = left cusps, N+1 = right cusps)."""

    diagram: PlatDiagram
    start: int
    stop: int
    dga: Dga
    right_matrix: BoundaryMatrix | None
    line_prefix: str = "p"

    @property
    def left_boundary(self) -> int | None:
        """Boundary index (number of crossings to its left) of the left edge, if any."""
        return None if self.start == 0 else self.start - 1

    @property
    def right_boundary(self) -> int | None:
        return None if self.stop == len(self.diagram.crossings) + 1 else self.stop


@dataclass(frozen=True)
class Assembly:
    diagram: PlatDiagram
    maslov: MaslovAssignment
    trace: KnotTrace
    dga: Dga
    matrices: tuple[BoundaryMatrix, ...]  # at boundaries 0..N
    slices: tuple[Dga, ...]  # slice DGAs, left cusps through right cusps


class _Context:
    def __init__(self, d: PlatDiagram, ring: Ring, flip: Iterable[int]):
        self.d = d
        self.ring = ring
        self.maslov = solve_maslov(d)
        self.trace = trace_knot(d, flip)
        self.N = len(d.crossings)


def _crossing_gen(ctx: _Context, e: int) -> GenInfo:
    r, c = ctx.trace.crossing_grade(e)
    return GenInfo(f"a{e}", ctx.maslov.crossing_degree(e), REEB, r, c)


def _fold(ctx: _Context, M: BoundaryMatrix, e_from: int, e_to: int, gens: list, diff: dict, keep=None):
    for e in range(e_from, e_to + 1):
        g = _crossing_gen(ctx, e)
        k = ctx.d.crossings[e - 1]
        gens.append(g)
        diff[g.name] = M[k, k + 1]
        M = crossing_corestriction(M, k, g.name, g.degree)
        if keep is not None:
            keep.append(M)
    return M


def _cusps(ctx: _Context, M: BoundaryMatrix, gens: list, diff: dict) -> None:
    ring = ctx.ring
    tr = ctx.trace
    cusp_gens = []
    bp_gens = []
    for i in range(1, ctx.d.cusps + 1):
        r, c = tr.right_cusp_grade(i)
        cusp_gens.append(GenInfo(f"c{i}", 1, REEB, r, c))
        br, bc = tr.basepoint_grade(i)
        bp_gens.append(GenInfo(f"t{i}", 0, BASEPOINT, br, bc))
        diff[f"c{i}"] = NcPoly.gen(ring, f"t{i}", tr.sigma[i - 1]) + M[2 * i - 1, 2 * i]
    gens.extend(cusp_gens)
    gens.extend(bp_gens)


def _boundary_line(ctx: _Context, b: int, prefix: str, gens: list, diff: dict) -> BoundaryMatrix:
    mu = ctx.maslov.at(b)
    arcs = ctx.trace.arcs_at(b)
    line = line_dga(ctx.d.n, mu, ctx.ring, prefix, arcs)
    gens.extend(line.generators)
    diff.update(line.differential)
    return line_matrix(ctx.d.n, ctx.ring, prefix)


def sections(
    d: PlatDiagram,
    start: int,
    stop: int,
    ring: Ring = ZZ,
    flip: Iterable[int] = (),
    prefix: str = "p",
) -> Section:
    """Bordered DGA of a contiguous range of slices."""
    N = len(d.crossings)
    if not (0 <= start <= stop <= N + 1):
        raise LegaugError(f"bad slice range {start}..{stop} for a plat with {N} crossings")
    ctx = _Context(d, ring, flip)
    gens: list[GenInfo] = []
    diff: dict[str, NcPoly] = {}
    if start == 0:
        M = left_cusp_matrix(d.n, ring)
    else:
        M = _boundary_line(ctx, start - 1, prefix, gens, diff)
    M = _fold(ctx, M, max(start, 1), min(stop, N), gens, diff)
    right: BoundaryMatrix | None = M
    if stop == N + 1:
        _cusps(ctx, M, gens, diff)
        right = None
    dga = Dga(ring, gens, diff, ctx.trace.component_count)
    return Section(d, start, stop, dga, right, prefix)


def assemble(d: PlatDiagram, ring: Ring = ZZ, flip: Iterable[int] = ()) -> Assembly:
    """Global DGA of the plat closure, with the per-slice trace."""
    ctx = _Context(d, ring, flip)
    gens: list[GenInfo] = []
    diff: dict[str, NcPoly] = {}
    M0 = left_cusp_matrix(d.n, ring)
    mats = [M0]
    M = _fold(ctx, M0, 1, ctx.N, gens, diff, mats)
    _cusps(ctx, M, gens, diff)
    # order: crossings, cusps, then base points
    dga = Dga(ring, gens, diff, ctx.trace.component_count)
    slices = [Dga(ring, [], {})]
    for e in range(1, ctx.N + 1):
        slices.append(crossing_slice_dga(d.n, d.crossings[e - 1], ctx.maslov.at(e - 1), ring))
    slices.append(right_cusp_slice_dga(d.n, ctx.maslov.at(ctx.N), ctx.trace.sigma, ring))
    return Assembly(d, ctx.maslov, ctx.trace, dga, tuple(mats), tuple(slices))


def glue(left: Section, right: Section) -> Section:
    """Pushout of two adjacent sections over the line algebra of their common boundary."""
    if left.diagram != right.diagram or left.stop + 1 != right.start or left.right_matrix is None:
        raise LegaugError("sections are not adjacent")
    M = left.right_matrix
    n = left.diagram.n
    pre = right.line_prefix
    values = {f"{pre}{i}_{j}": M[i, j] for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    gens = list(left.dga.generators)
    diff = dict(left.dga.differential)
    for g in right.dga.generators:
        if g.name in values:
            continue
        gens.append(g)
        if g.kind == REEB:
            diff[g.name] = extend_hom(values, right.dga.differential[g.name], identity_on_missing=True)
    dga = Dga(left.dga.ring, gens, diff, max(left.dga.component_count, right.dga.component_count))
    rm = right.right_matrix
    if rm is not None:
        rm = BoundaryMatrix(
            n, rm.ring, {ij: extend_hom(values, p, identity_on_missing=True) for ij, p in rm.entries.items()}
        )
    return Section(left.diagram, left.start, right.stop, dga, rm, left.line_prefix)


def restrict_augmentation(
    asm: Assembly, eps: Augmentation, start: int, stop: int, prefix: str = "p"
) -> Augmentation:
    """Pull an augmentation of the whole plat back to the section ``start..stop``."""
    sec = sections(asm.diagram, start, stop, asm.dga.ring, _flips(asm), prefix)
    vals = {}
    for g in sec.dga.generators:
        if g.name in asm.dga:
            vals[g.name] = eps[g.name]
    if start > 0:
        M = asm.matrices[start - 1]
        ring = eps.ring
        for i in range(1, M.n + 1):
            for j in range(i + 1, M.n + 1):
                vals[f"{prefix}{i}_{j}"] = eps.evaluate(M[i, j].change_ring(ring))
    return Augmentation(eps.ring, vals)


def glue_augmentations(
    left: Section, right: Section, eps_left: Augmentation, eps_right: Augmentation
) -> Augmentation | None:
    """The unique global augmentation restricting to the pair, or None if incompatible."""
    M = left.right_matrix
    if M is None:
        raise LegaugError("left section has no right boundary")
    ring = eps_left.ring
    pre = right.line_prefix
    vals = dict(eps_left.values)
    for g in right.dga.generators:
        if g.name.startswith(pre) and "_" in g.name:
            i, j = (int(x) for x in g.name[len(pre):].split("_"))
            if eps_left.evaluate(M[i, j].change_ring(ring)) != eps_right[g.name]:
                return None
        else:
            vals[g.name] = eps_right[g.name]
    return Augmentation(ring, vals)


def boundary_values(left: Section, eps_left: Augmentation, prefix: str) -> dict[str, int]:
    """Values that a compatible right augmentation must take on the shared line generators."""
    M = left.right_matrix
    if M is None:
        raise LegaugError("left section has no right boundary")
    ring = eps_left.ring
    return {
        f"{prefix}{i}_{j}": eps_left.evaluate(M[i, j].change_ring(ring))
        for i in range(1, M.n + 1)
        for j in range(i + 1, M.n + 1)
    }


def compatible_right_augmentations(left: Section, right: Section, eps_left: Augmentation) -> list[Augmentation]:
    """All augmentations of ``right`` that agree with ``eps_left`` on the shared boundary line."""
    from .augcat import enumerate_augmentations

    ring = eps_left.ring
    fixed = boundary_values(left, eps_left, right.line_prefix)
    present = {g.name for g in right.dga.generators}
    fixed = {k: v for k, v in fixed.items() if k in present}
    rest = right.dga.over(ring).substitute({k: NcPoly.const(ring, v) for k, v in fixed.items()}, drop=fixed)
    return [Augmentation(ring, {**e.values, **fixed}) for e in enumerate_augmentations(rest, ring)]


def _flips(asm: Assembly) -> tuple[int, ...]:
    default = trace_knot(asm.diagram)
    out = []
    for comp in range(1, asm.trace.component_count + 1):
        strand = asm.trace.component.index(comp)
        if default.direction[strand] != asm.trace.direction[strand]:
            out.append(comp)
    return tuple(out)
