"""Structured analysis reports with a stable JSON shape.

A report couples the algebraic verdicts with the lifted-graph oracle's; the
two girths must agree or the whole report is marked inconsistent (exit code
3 in the CLI) rather than silently reconciled.
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field
from typing import Any

from .chords import ChordFreeReport, ChordWitness, check_chordfree
from .cycles import algebraic_girth, four_cycle_free
from .errors import FourCyclePresentError
from .matrices import ExponentMatrix, serialize_text, validate
from .tanner import TannerGraph, bfs_girth, find_8wc

SCHEMA = "qclc-report/1"

# Oracle runs by default only up to this many lifted variable nodes.
ORACLE_AUTO_LIMIT = 10_000


@dataclass
class Report:
    """Everything the check pipeline learned about one matrix."""

    digest: str
    rows: int
    cols: int
    lifting_degree: int
    single_edge: bool
    validation_ok: bool
    violations: list[str] = field(default_factory=list)
    four_cycle_free: bool | None = None
    girth_algebraic: int | None = None
    girth_cap: int = 12
    oracle_ran: bool = False
    girth_oracle: int | None = None  # None = acyclic when oracle_ran
    chordfree: bool | None = None
    chord_witnesses: list[dict] = field(default_factory=list)
    eight_wc_count: int | None = None
    extras: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        if not self.oracle_ran:
            return True
        alg = self.girth_algebraic
        orc = self.girth_oracle
        if alg is None:
            ok_girth = orc is None or orc > self.girth_cap
        else:
            ok_girth = orc == alg
        ok_chord = True
        if self.chordfree is not None and self.eight_wc_count is not None:
            ok_chord = self.chordfree == (self.eight_wc_count == 0)
        return ok_girth and ok_chord

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "input": {
                "sha256": self.digest,
                "rows": self.rows,
                "cols": self.cols,
                "lifting_degree": self.lifting_degree,
                "single_edge": self.single_edge,
            },
            "validation": {"ok": self.validation_ok, "violations": self.violations},
            "four_cycle_free": self.four_cycle_free,
            "girth": {
                "algebraic": self.girth_algebraic,
                "cap": self.girth_cap,
                "oracle": self.girth_oracle if self.oracle_ran else None,
                "oracle_ran": self.oracle_ran,
            },
            "chordfree": {
                "passed": self.chordfree,
                "witnesses": self.chord_witnesses,
                "oracle_8wc": self.eight_wc_count,
            },
            "consistent": self.consistent,
            **self.extras,
            "timing": self.timing,
        }


def _witness_json(w: ChordWitness) -> dict:
    return {
        "term_row": w.term[0],
        "term_ends": [list(e) for e in w.term[1]],
        "walk_a": [list(s) for s in w.walk_a.segments],
        "walk_b": [list(s) for s in w.walk_b.segments],
        "reflected": w.reflected,
        "cycle_v": list(w.cycle.v_nodes),
        "cycle_c": list(w.cycle.c_nodes),
        "chord_check": w.chord_check,
        "chord_vs": list(w.chord_vs),
    }


def analyze(
    matrix: ExponentMatrix,
    oracle: str = "auto",
    girth_cap: int = 12,
    max_witnesses: int = 20,
) -> Report:
    """Run validation, algebraic girth, chord check, and (optionally) the
    lifted-graph oracle; ``oracle`` is "auto", "on" or "off"."""
    text = serialize_text(matrix)
    report = Report(
        digest=hashlib.sha256(text.encode()).hexdigest(),
        rows=matrix.rows,
        cols=matrix.cols,
        lifting_degree=matrix.n,
        single_edge=matrix.single_edge,
        validation_ok=True,
        girth_cap=girth_cap,
    )
    t0 = time.monotonic()
    check = validate(matrix)
    report.validation_ok = check.ok
    report.violations = [str(v) for v in check.violations]
    report.timing["validate"] = time.monotonic() - t0

    t0 = time.monotonic()
    report.four_cycle_free = four_cycle_free(matrix)
    report.girth_algebraic = algebraic_girth(matrix, cap=girth_cap)
    report.timing["algebraic"] = time.monotonic() - t0

    if report.four_cycle_free:
        t0 = time.monotonic()
        chord: ChordFreeReport = check_chordfree(matrix)
        report.chordfree = chord.passed
        report.chord_witnesses = [_witness_json(w) for w in chord.witnesses[:max_witnesses]]
        report.timing["chordfree"] = time.monotonic() - t0

    run_oracle = oracle == "on" or (
        oracle == "auto" and matrix.cols * matrix.n <= ORACLE_AUTO_LIMIT
    )
    if run_oracle:
        t0 = time.monotonic()
        graph = TannerGraph.from_exponent(matrix)
        girth = bfs_girth(graph)
        report.oracle_ran = True
        report.girth_oracle = None if girth is math.inf else int(girth)
        if report.four_cycle_free:
            try:
                report.eight_wc_count = len(find_8wc(graph))
            except FourCyclePresentError:
                report.eight_wc_count = None
        report.timing["oracle"] = time.monotonic() - t0
    return report
