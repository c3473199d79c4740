"""Structural checks run by the ``legaug verify`` command and by the test suite.

Each check returns a :class:`CheckResult`; a failing result carries
human-readable messages naming the offending input.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .augcat import MINUS, PLUS, AugCategory, HomElement, duality_check, enumerate_augmentations, exact_sequence_check, leverson_product, tb_from_minus
from .bordered import Assembly, compatible_right_augmentations, glue, glue_augmentations, restrict_augmentation, sections
from .dga import Augmentation, Dga, check_dga
from .errors import LegaugError
from .mcopy import build_mcopy
from .ncpoly import Ring
from .plat import classical_invariants


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    checked: int = 0
    skipped: str | None = None
    messages: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        if len(self.messages) < 20:
            self.messages.append(msg)

    def as_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "skipped": self.skipped, "messages": self.messages}


@dataclass
class Workspace:
    """A DGA under study, optionally with the plat assembly that produced it."""

    dga: Dga
    ring: Ring
    assembly: Assembly | None = None
    max_arity: int = 4
    sample: int = 60
    seed: int = 0
    _augs: list[Augmentation] | None = None
    _cat: AugCategory | None = None

    @property
    def augs(self) -> list[Augmentation]:
        if self._augs is None:
            self._augs = enumerate_augmentations(self.dga, self.ring)
        return self._augs

    @property
    def cat(self) -> AugCategory:
        if self._cat is None:
            self._cat = AugCategory(self.dga, self.ring)
        return self._cat


def _needs_field(ws: Workspace, res: CheckResult) -> bool:
    if ws.ring.p is None:
        res.skipped = "needs a finite field"
        return False
    return True


def _pairs(augs: Sequence[Augmentation]):
    return [(a, b) for a in augs for b in augs]


def check_differential(ws: Workspace) -> CheckResult:
    res = CheckResult("dga")
    rep = check_dga(ws.dga)
    res.checked = len(ws.dga.reeb)
    for issue in rep.issues:
        res.fail(str(issue))
    for m in (2, 3):
        if not ws.dga.basepoints:
            break
        res.checked += 1
        if not check_dga(build_mcopy(ws.dga, m, check=False)).ok:
            res.fail(f"the {m}-copy fails the DGA checks")
    return res


def check_ainfty(ws: Workspace) -> CheckResult:
    """Sampled A-infinity relations up to the arity cap, in both categories."""
    res = CheckResult("ainfty")
    if not _needs_field(ws, res):
        return res
    if not ws.augs:
        res.skipped = "no augmentations"
        return res
    cat = ws.cat
    rng = random.Random(ws.seed)
    for k in range(1, ws.max_arity + 1):
        for direction in (PLUS, MINUS):
            for _ in range(ws.sample):
                objs = [rng.choice(ws.augs) for _ in range(k + 1)]
                path = list(range(1, k + 2)) if direction == PLUS else list(range(k + 1, 0, -1))
                args = []
                for i in range(k):
                    basis = cat.hom_basis(objs[i], objs[i + 1], direction)
                    args.append(HomElement(basis, {rng.choice(basis.keys): rng.randrange(1, ws.ring.p)}))
                args.reverse()
                res.checked += 1
                defect = cat.ainfty_defect(objs, path, args)
                if not defect.is_zero():
                    res.fail(f"A-infinity relation fails at arity {k} ({direction}): {[str(a) for a in args]}")
    return res


def check_unit(ws: Workspace) -> CheckResult:
    """m_1(e) = 0, m_2(e, a) = a = m_2(a, e), and higher products with e vanish."""
    res = CheckResult("unit")
    if not _needs_field(ws, res):
        return res
    if not ws.augs:
        res.skipped = "no augmentations"
        return res
    cat = ws.cat
    rng = random.Random(ws.seed + 1)
    for e in ws.augs:
        res.checked += 1
        if not cat.m1(cat.unit(e)).is_zero():
            res.fail("m1 of the unit is nonzero")
    for e1, e2 in _pairs(ws.augs)[: ws.sample]:
        basis = cat.hom_basis(e1, e2)
        u1, u2 = cat.unit(e1), cat.unit(e2)
        for key in basis.keys:
            a = HomElement(basis, {key: 1})
            res.checked += 1
            if cat.m2(u2, a) != a or cat.m2(a, u1) != a:
                res.fail(f"unit fails on {basis.label(key)}")
    for k in range(3, ws.max_arity + 1):
        for _ in range(ws.sample):
            objs = [rng.choice(ws.augs) for _ in range(k + 1)]
            slot = rng.randrange(k)
            objs[slot + 1] = objs[slot]
            args = []
            for i in range(k):
                if i == slot:
                    args.append(cat.unit(objs[i]))
                else:
                    basis = cat.hom_basis(objs[i], objs[i + 1])
                    args.append(HomElement(basis, {rng.choice(basis.keys): 1}))
            args.reverse()
            res.checked += 1
            if not cat.m_plus(objs, args).is_zero():
                res.fail(f"m{k} with a unit argument is nonzero")
    return res


def check_duality(ws: Workspace) -> CheckResult:
    res = CheckResult("duality")
    if not _needs_field(ws, res):
        return res
    for e1, e2 in _pairs(ws.augs):
        res.checked += 1
        rep = duality_check(ws.cat, e1, e2)
        if not rep.ok:
            res.fail(f"duality fails: {rep.details}")
    return res


def check_exact_sequence(ws: Workspace) -> CheckResult:
    res = CheckResult("les")
    if not _needs_field(ws, res):
        return res
    bps = [b.name for b in ws.dga.basepoints]
    for e1, e2 in _pairs(ws.augs):
        if any(e1[b] != e2[b] for b in bps):
            continue
        res.checked += 1
        rep = exact_sequence_check(ws.cat, e1, e2)
        if not rep.ok:
            res.fail("; ".join(rep.messages) or "exact sequence fails")
    return res


def check_cosheaf(ws: Workspace) -> CheckResult:
    """Gluing sections at every split reproduces the assembled DGA; boundary matrices are chain-like."""
    res = CheckResult("cosheaf")
    asm = ws.assembly
    if asm is None:
        res.skipped = "needs a plat input"
        return res
    N = len(asm.diagram.crossings)
    ring = asm.dga.ring
    flips = _assembly_flips(asm)
    for s in range(0, N + 1):
        res.checked += 1
        left = sections(asm.diagram, 0, s, ring, flips)
        right = sections(asm.diagram, s + 1, N + 1, ring, flips)
        if not glue(left, right).dga.same_as(asm.dga):
            res.fail(f"pushout at split {s} differs from the assembled DGA")
    for b, M in enumerate(asm.matrices):
        res.checked += 1
        if M.chain_defects(asm.dga, asm.maslov.at(b)):
            res.fail(f"boundary matrix {b} fails the chain relation")
    return res


def check_sheaf(ws: Workspace) -> CheckResult:
    """Global augmentations biject with compatible pairs of section augmentations."""
    res = CheckResult("sheaf")
    asm = ws.assembly
    if asm is None:
        res.skipped = "needs a plat input"
        return res
    if not _needs_field(ws, res):
        return res
    N = len(asm.diagram.crossings)
    flips = _assembly_flips(asm)
    want = {tuple(sorted(e.values.items())) for e in ws.augs}
    for s in range(0, N + 1):
        res.checked += 1
        left = sections(asm.diagram, 0, s, ws.ring, flips)
        right = sections(asm.diagram, s + 1, N + 1, ws.ring, flips)
        glued = set()
        for eL in enumerate_augmentations(left.dga, ws.ring):
            for eR in compatible_right_augmentations(left, right, eL):
                g = glue_augmentations(left, right, eL, eR)
                if g is None:
                    res.fail(f"compatible pair at split {s} failed to glue")
                    continue
                glued.add(tuple(sorted(g.values.items())))
        if glued != want:
            res.fail(f"gluing at split {s} gives {len(glued)} augmentations, expected {len(want)}")
        for e in ws.augs:
            back = glue_augmentations(left, right, restrict_augmentation(asm, e, 0, s), restrict_augmentation(asm, e, s + 1, N + 1))
            if back != e:
                res.fail(f"restricting and regluing at split {s} does not recover an augmentation")
                break
    return res


def check_leverson(ws: Workspace) -> CheckResult:
    res = CheckResult("leverson")
    if ws.dga.component_count != 1:
        res.skipped = "only for knots"
        return res
    if not _needs_field(ws, res):
        return res
    minus_one = ws.ring.reduce(-1)
    for e in ws.augs:
        res.checked += 1
        if leverson_product(ws.dga, e) != minus_one:
            res.fail(f"product of base point values is not -1 for {e.as_dict()}")
    return res


def check_tb(ws: Workspace) -> CheckResult:
    res = CheckResult("tb")
    asm = ws.assembly
    if asm is None:
        res.skipped = "needs a plat input"
        return res
    if not _needs_field(ws, res):
        return res
    tb = classical_invariants(asm.diagram, asm.trace).tb
    for e in ws.augs:
        res.checked += 1
        chi = tb_from_minus(ws.cat, e)
        if chi != -tb:
            res.fail(f"Euler characteristic {chi} of Hom_-(e, e) is not -tb = {-tb}")
    return res


def _assembly_flips(asm: Assembly) -> tuple[int, ...]:
    from .bordered import _flips

    return _flips(asm)


CHECKS: dict[str, Callable[[Workspace], CheckResult]] = {
    "dga": check_differential,
    "ainfty": check_ainfty,
    "unit": check_unit,
    "duality": check_duality,
    "les": check_exact_sequence,
    "cosheaf": check_cosheaf,
    "sheaf": check_sheaf,
    "leverson": check_leverson,
    "tb": check_tb,
}


def thread_count() -> int:
    raw = os.environ.get("LEGAUG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_checks(ws: Workspace, names: Sequence[str]) -> list[CheckResult]:
    """Run the named checks; results come back sorted by name whatever the thread count."""
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise LegaugError(f"unknown check {unknown[0]!r}; choose from {', '.join(sorted(CHECKS))}")
    # warm shared caches before fanning out
    if ws.ring.p is not None:
        ws.augs
        ws.cat
    workers = min(thread_count(), len(names))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda n: CHECKS[n](ws), names))
    else:
        results = [CHECKS[n](ws) for n in names]
    return sorted(results, key=lambda r: r.name)
