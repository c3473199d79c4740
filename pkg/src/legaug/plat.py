"""Plat-position fronts: parsing, Maslov potentials, orientations and arcs.

Strands are labelled by their height position at the far left (1 = top).
Crossing ``k`` swaps the strands occupying positions ``k`` and ``k+1``.
Left cusps join positions ``(2i-1, 2i)`` at the left edge, right cusps join
the same positions at the right edge, and right cusp ``i`` carries base
point ``t_i``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import LegaugError


class PlatParseError(LegaugError):
    pass


@dataclass(frozen=True)
class PlatDiagram:
    n: int
    crossings: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n <= 0 or self.n % 2:
            raise LegaugError(f"plat needs a positive even strand count, got {self.n}")
        for k in self.crossings:
            if not 1 <= k <= self.n - 1:
                raise LegaugError(f"crossing index {k} out of range for {self.n} strands")

    @property
    def cusps(self) -> int:
        return self.n // 2

    def perms(self) -> list[list[int]]:
        """``perms()[b][q-1]`` is the strand at position q after ``b`` crossings."""
        return self._perms

    @cached_property
    def _perms(self) -> list[list[int]]:
        cur = list(range(1, self.n + 1))
        out = [cur[:]]
        for k in self.crossings:
            cur[k - 1], cur[k] = cur[k], cur[k - 1]
            out.append(cur[:])
        return out

    def to_text(self) -> str:
        return "\n".join([f"strands {self.n}"] + [f"cross {k}" for k in self.crossings]) + "\n"


def parse_plat(text: str) -> PlatDiagram:
    n = None
    crossings: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        toks = line.split()
        if len(toks) != 2 or toks[0] not in ("strands", "cross"):
            raise PlatParseError(f"line {lineno}, column {col}: malformed token {line.strip()!r}")
        try:
            val = int(toks[1])
        except ValueError:
            raise PlatParseError(f"line {lineno}, column {col + len(toks[0]) + 1}: expected integer, got {toks[1]!r}")
        if toks[0] == "strands":
            if n is not None:
                raise PlatParseError(f"line {lineno}, column {col}: strand count given twice")
            if val <= 0 or val % 2:
                raise PlatParseError(f"line {lineno}, column {col}: odd or non-positive strand count {val}")
            n = val
        else:
            if n is None:
                raise PlatParseError(f"line {lineno}, column {col}: crossing before strand count")
            if not 1 <= val <= n - 1:
                raise PlatParseError(f"line {lineno}, column {col}: crossing {val} out of range 1..{n - 1}")
            crossings.append(val)
    if n is None:
        raise PlatParseError("missing 'strands <n>' line")
    return PlatDiagram(n, tuple(crossings))


def random_plat(rng: random.Random, max_n: int = 8, max_crossings: int = 12) -> PlatDiagram:
    n = rng.choice(range(2, max_n + 1, 2))
    if n == 2:
        return PlatDiagram(2, ())
    count = rng.randint(0, max_crossings)
    return PlatDiagram(n, tuple(rng.randint(1, n - 1) for _ in range(count)))


# ---------------------------------------------------------------------------
# Maslov potential


class MaslovError(LegaugError):
    """The cusp constraints have no integer solution (nonzero rotation number)."""


@dataclass(frozen=True)
class MaslovAssignment:
    diagram: PlatDiagram
    strand: tuple[int, ...]  # potential of strand s at index s-1

    def at(self, boundary: int) -> list[int]:
        """Potentials by position after ``boundary`` crossings."""
        perm = self.diagram.perms()[boundary]
        return [self.strand[s - 1] for s in perm]

    def crossing_degree(self, e: int) -> int:
        """Degree of the Reeb chord at crossing ``e`` (1-based)."""
        k = self.diagram.crossings[e - 1]
        mu = self.at(e - 1)
        return mu[k - 1] - mu[k]


def _cusp_constraints(d: PlatDiagram) -> list[tuple[int, int]]:
    """Pairs (upper strand, lower strand) with mu(upper) = mu(lower) + 1."""
    right = d.perms()[-1]
    out = []
    for i in range(d.cusps):
        out.append((2 * i + 1, 2 * i + 2))
        out.append((right[2 * i], right[2 * i + 1]))
    return out


def solve_maslov(d: PlatDiagram) -> MaslovAssignment:
    adj: dict[int, list[tuple[int, int]]] = {s: [] for s in range(1, d.n + 1)}
    for up, low in _cusp_constraints(d):
        adj[up].append((low, -1))
        adj[low].append((up, 1))
    mu: dict[int, int] = {}
    for start in range(2, d.n + 1, 2):
        # lower strand of each left cusp, top to bottom; first unseen one roots a component
        if start in mu:
            continue
        comp = [start]
        mu[start] = 0
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for t, delta in adj[s]:
                want = mu[s] + delta
                if t in mu:
                    if mu[t] != want:
                        raise MaslovError("Maslov potential constraints are inconsistent (nonzero rotation number)")
                else:
                    mu[t] = want
                    comp.append(t)
                    queue.append(t)
        lows = [mu[s] for s in comp if s % 2 == 0]
        shift = min(lows)
        for s in comp:
            mu[s] -= shift
    return MaslovAssignment(d, tuple(mu[s] for s in range(1, d.n + 1)))


# ---------------------------------------------------------------------------
# orientation and arcs


@dataclass(frozen=True)
class KnotTrace:
    diagram: PlatDiagram
    component: tuple[int, ...]  # component index of strand s (1-based)
    direction: tuple[int, ...]  # +1 rightward, -1 leftward, per strand
    arc: tuple[int, ...]  # arc index (= base point starting it) per strand
    sigma: tuple[int, ...]  # per right cusp: +1 downward, -1 upward
    basepoint_component: tuple[int, ...]
    preceding_arc: tuple[int, ...]  # per base point: arc ending at it

    @property
    def component_count(self) -> int:
        return max(self.component)

    def crossing_strands(self, e: int) -> tuple[int, int]:
        """(upper, lower) strands at crossing ``e``: upper is the one entering at position k."""
        k = self.diagram.crossings[e - 1]
        perm = self.diagram.perms()[e - 1]
        return perm[k - 1], perm[k]

    def crossing_grade(self, e: int) -> tuple[int, int]:
        up, low = self.crossing_strands(e)
        return self.arc[up - 1], self.arc[low - 1]

    def crossing_components(self, e: int) -> tuple[int, int]:
        up, low = self.crossing_strands(e)
        return self.component[up - 1], self.component[low - 1]

    def crossing_sign(self, e: int) -> int:
        up, low = self.crossing_strands(e)
        return 1 if self.direction[up - 1] == self.direction[low - 1] else -1

    def right_cusp_strands(self, i: int) -> tuple[int, int]:
        right = self.diagram.perms()[-1]
        return right[2 * i - 2], right[2 * i - 1]

    def right_cusp_grade(self, i: int) -> tuple[int, int]:
        up, low = self.right_cusp_strands(i)
        return self.arc[up - 1], self.arc[low - 1]

    def basepoint_grade(self, i: int) -> tuple[int, int]:
        """(r, c) of t_i: the arc before the base point, then the arc after it."""
        return self.preceding_arc[i - 1], i

    def arcs_at(self, boundary: int) -> list[int]:
        perm = self.diagram.perms()[boundary]
        return [self.arc[s - 1] for s in perm]


def trace_knot(d: PlatDiagram, flip: Iterable[int] = ()) -> KnotTrace:
    """Trace components, orient them and cut them into arcs at the base points.

    Each component is first oriented so that its topmost left-cusp strand
    runs rightward; components listed in ``flip`` are then reversed.
    """
    flip = set(flip)
    n = d.n
    right = d.perms()[-1]
    right_pos = {s: q + 1 for q, s in enumerate(right)}
    at_right = {q + 1: s for q, s in enumerate(right)}

    def partner(q: int) -> int:
        return q + 1 if q % 2 else q - 1

    component = [0] * (n + 1)
    direction = [0] * (n + 1)
    cycles: list[list[tuple[int, int]]] = []
    for start in range(1, n + 1, 2):
        if component[start]:
            continue
        idx = len(cycles) + 1
        cyc: list[tuple[int, int]] = []
        s, dirn = start, 1
        while True:
            cyc.append((s, dirn))
            component[s] = idx
            if dirn == 1:
                s, dirn = at_right[partner(right_pos[s])], -1
            else:
                s, dirn = partner(s), 1
            if s == start and dirn == 1:
                break
        cycles.append(cyc)
    unknown = flip - set(range(1, len(cycles) + 1))
    if unknown:
        raise LegaugError(f"no component numbered {sorted(unknown)}")
    for idx, cyc in enumerate(cycles, 1):
        if idx in flip:
            cyc[:] = [(s, -dirn) for s, dirn in reversed(cyc)]
        for s, dirn in cyc:
            direction[s] = dirn

    sigma = [0] * (d.cusps + 1)
    for i in range(1, d.cusps + 1):
        up = at_right[2 * i - 1]
        sigma[i] = 1 if direction[up] == 1 else -1

    arc = [0] * (n + 1)
    preceding = [0] * (d.cusps + 1)
    bp_comp = [0] * (d.cusps + 1)
    for idx, cyc in enumerate(cycles, 1):
        # a rightward strand ends at a right cusp, where the base point sits
        L = len(cyc)
        cusp_after = {pos: (right_pos[s] + 1) // 2 for pos, (s, dirn) in enumerate(cyc) if dirn == 1}
        first = min(cusp_after)
        current = cusp_after[first]
        for step in range(1, L + 1):
            pos = (first + step) % L
            s, _ = cyc[pos]
            arc[s] = current
            if pos in cusp_after:
                nxt = cusp_after[pos]
                preceding[nxt] = current
                bp_comp[nxt] = idx
                current = nxt
    return KnotTrace(
        d,
        tuple(component[1:]),
        tuple(direction[1:]),
        tuple(arc[1:]),
        tuple(sigma[1:]),
        tuple(bp_comp[1:]),
        tuple(preceding[1:]),
    )


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    writhe: int
    rotation: tuple[int, ...]
    tb_per_component: tuple[int, ...]


def classical_invariants(d: PlatDiagram, trace: KnotTrace | None = None) -> ClassicalInvariants:
    trace = trace or trace_knot(d)
    ncomp = trace.component_count
    writhe = 0
    self_writhe = [0] * (ncomp + 1)
    for e in range(1, len(d.crossings) + 1):
        sgn = trace.crossing_sign(e)
        writhe += sgn
        a, b = trace.crossing_components(e)
        if a == b:
            self_writhe[a] += sgn
    cusps_per = [0] * (ncomp + 1)
    down = [0] * (ncomp + 1)
    up = [0] * (ncomp + 1)
    right = d.perms()[-1]
    for i in range(1, d.cusps + 1):
        comp = trace.component[right[2 * i - 2] - 1]
        cusps_per[comp] += 1
        # right cusp: downward when entering on the upper strand
        if trace.sigma[i - 1] == 1:
            down[comp] += 1
        else:
            up[comp] += 1
        # left cusp i: downward when leaving on the lower strand
        lcomp = trace.component[2 * i - 2]
        if trace.direction[2 * i - 1] == 1:
            down[lcomp] += 1
        else:
            up[lcomp] += 1
    rotation = tuple((down[c] - up[c]) // 2 for c in range(1, ncomp + 1))
    return ClassicalInvariants(
        tb=writhe - d.cusps,
        writhe=writhe,
        rotation=rotation,
        tb_per_component=tuple(self_writhe[c] - cusps_per[c] for c in range(1, ncomp + 1)),
    )
