"""Differential check of every fast algorithm against the subset oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .closure import compute_closure, compute_closure_naive
from .detect import DETECTORS, PRECONDITIONS, detect_gem
from .enumeration import enumerators_for, subset_census
from .graph import Graph
from .patterns import PATTERN_IDS, induced_pattern, resolve_pattern


@dataclass
class Check:
    pattern: str
    algo: str
    kind: str  # "enumerate", "detect" or "closure"
    expected: int
    got: int
    ok: bool
    note: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def mismatches(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_text(self) -> str:
        lines = ["kind\tpattern\talgo\texpected\tgot\tstatus"]
        for c in self.checks:
            status = "ok" if c.ok else "MISMATCH"
            if c.note:
                status += f" ({c.note})"
            lines.append(f"{c.kind}\t{c.pattern}\t{c.algo}\t{c.expected}\t{c.got}\t{status}")
        lines.append("all agree" if self.all_agree else f"{len(self.mismatches)} mismatch(es)")
        return "\n".join(lines) + "\n"


def verify_graph(g: Graph, patterns: Optional[Iterable[str]] = None,
                 enumerators: Optional[dict] = None, detectors: Optional[dict] = None,
                 cap: Optional[int] = None) -> VerifyReport:
    """Run every enumerator and detector for ``patterns`` and compare with the oracle.

    ``enumerators`` / ``detectors`` override the registries per pattern
    (``{pattern: {algo: fn}}``), which is how tests inject faults.
    """
    census = subset_census(g, cap)
    pids = PATTERN_IDS if patterns is None else [resolve_pattern(p) for p in patterns]
    report = VerifyReport()

    fast, naive = compute_closure(g).c, compute_closure_naive(g).c
    report.checks.append(Check("-", "closure", "closure", naive, fast, fast == naive))

    gem_free = None
    for pid in pids:
        expected = census[pid]
        reference = set(expected)
        algos = (enumerators or {}).get(pid) or {
            name: fn for name, fn in enumerators_for(pid).items() if name != "oracle"}
        for name, fn in algos.items():
            got: list[tuple[int, ...]] = []
            fn(g, visitor=lambda occ: got.append(occ.vertices))
            ok = len(got) == len(set(got)) and set(got) == reference
            note = "" if ok else _diff_note(got, reference)
            report.checks.append(Check(pid, name, "enumerate", len(expected), len(got), ok, note))
        for name, fn in ((detectors or {}).get(pid) or DETECTORS[pid]).items():
            if PRECONDITIONS.get((pid, name)) == "gem-free":
                if gem_free is None:
                    gem_free = not detect_gem(g).found
                if not gem_free:
                    continue
            res = fn(g)
            ok = res.found == bool(expected)
            note = ""
            if ok and res.found:
                vs = res.witness.vertices
                if tuple(vs) not in reference or induced_pattern(g, vs) != pid:
                    ok, note = False, f"bad witness {vs}"
            report.checks.append(Check(pid, name, "detect", int(bool(expected)), int(res.found), ok, note))
    return report


def _diff_note(got, reference) -> str:
    dupes = len(got) - len(set(got))
    missing = len(reference - set(got))
    extra = len(set(got) - reference)
    return f"missing={missing} extra={extra} duplicates={dupes}"
