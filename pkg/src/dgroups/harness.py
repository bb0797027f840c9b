"""Curated corpus, corpus verification, exhaustive S_n sweeps and report emission."""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable

from . import __version__
from .classify import ClassificationInconsistency, classify
from .deficiency import (
    PreconditionError,
    check_prop_A1,
    check_prop_A2,
    check_theorem_GH,
    defect,
    theorem_N_branch,
)
from .families import GroupSpec, parse_spec, symmetric
from .group import CapExceeded, Group, all_subgroups, conjugacy_classes, element_order_profile

__all__ = [
    "CorpusEntry",
    "SweepReport",
    "VerifyReport",
    "corpus",
    "evaluate",
    "verify_corpus",
    "sweep",
    "analyze",
    "to_json",
    "render_text",
]

PASS, FAIL, NA, NOT_EVALUATED = "pass", "fail", "n/a", "not evaluated"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: GroupSpec
    expected_defect: int
    expected_form: str | None = None
    # False: expected_defect is a lower bound
    exact: bool = True
    expected_deficient_orders: frozenset[int] | None = None
    provenance: str = ""


def _entry(name, text, j, form=None, provenance="", exact=True, orders=None) -> CorpusEntry:
    return CorpusEntry(name, parse_spec(text), j, form, exact,
                       frozenset(orders) if orders is not None else None, provenance)


def corpus() -> list[CorpusEntry]:
    T1 = "CITED: defect-0 classification"
    T2 = "CITED: defect-1 classification"
    A8 = "CITED: not of defect 1"
    return [
        _entry("C1", "cyclic:1", 0, "Trivial", T1 + "(1)"),
        _entry("C2", "cyclic:2", 0, "Cp(2)", T1 + "(1)"),
        _entry("C3", "cyclic:3", 0, "Cp(3)", T1 + "(1)"),
        _entry("C5", "cyclic:5", 0, "Cp(5)", T1 + "(1)"),
        _entry("C7", "cyclic:7", 0, "Cp(7)", T1 + "(1)"),
        _entry("C13", "cyclic:13", 0, "Cp(13)", T1 + "(1)"),
        _entry("S3", "frobenius:3,2", 0, "FrobeniusPQ(3,2)", T1 + "(2)"),
        _entry("F21", "frobenius:7,3", 0, "FrobeniusPQ(7,3)", "DERIVED: brute-force defect"),
        _entry("F55", "frobenius:11,5", 0, "FrobeniusPQ(11,5)", "DERIVED: brute-force defect"),
        _entry("F39", "frobenius:13,3", 0, "FrobeniusPQ(13,3)", T1 + "(2)"),
        _entry("C4", "cyclic:4", 1, "C4", T2 + "(1)"),
        _entry("Q8", "genq:8", 1, "Q8", T2 + "(1)"),
        _entry("A4", "mersenne:2", 1, "MersenneFrobenius(2,3)", T2 + "(2)"),
        _entry("E8xC7", "mersenne:3", 1, "MersenneFrobenius(3,7)", T2 + "(2)"),
        _entry("C5xC4", "c4frob:5", 1, "CqC4(5)", T2 + "(2)"),
        _entry("C13xC4", "c4frob:13", 1, "CqC4(13)", T2 + "(2)"),
        _entry("D18", "dihedral:9", 1, "D18", T2 + "(2)"),
        _entry("A5", "alt:5", 1, "A5", T2 + "(3)"),
        _entry("PSL2_7", "psl2:7", 1, "PSL27", T2 + "(3)"),
        _entry("C6", "cyclic:6", 3, None, "DERIVED: brute force over 6 elements"),
        _entry("C9", "cyclic:9", 2, None, "DERIVED: brute force over 9 elements"),
        _entry("S4", "sym:4", 2, None, "DERIVED: brute force over 24 elements"),
        _entry("Q16", "genq:16", 2, None, "DERIVED: not D(1)", exact=False),
        _entry("PSL2_8", "psl2:8", 2, None, A8, exact=False),
        _entry("PSL2_9", "psl2:9", 2, None, A8 + "; deficient elements of orders 2 and 3",
               exact=False, orders={2, 3}),
        _entry("PSL2_17", "psl2:17", 2, None, A8, exact=False),
    ]


# -- per-group evaluation ----------------------------------------------------

def _check(fn, G: Group) -> str:
    try:
        return PASS if fn(G) else FAIL
    except PreconditionError:
        return NA
    except CapExceeded:
        return NOT_EVALUATED


def _theorem_n(G: Group) -> bool:
    return theorem_N_branch(G)[1]


def _prop_a2(G: Group) -> bool:
    return check_prop_A2(G).passed


def evaluate(G: Group) -> dict[str, Any]:
    """Defect, verdict and property-suite results for one group, JSON-ready."""
    rep = defect(G)
    try:
        verdict = classify(G).label
    except ClassificationInconsistency as exc:
        verdict = f"INCONSISTENT: {exc}"
    checks = {
        "prop_A1": _check(check_prop_A1, G),
        "prop_A2": _check(_prop_a2, G) if rep.defect == 1 else NA,
        "theorem_N": _check(_theorem_n, G),
        "theorem_GH": _check(check_theorem_GH, G),
    }
    return {
        "order": G.order,
        "defect": rep.defect,
        "deficient_classes": [
            {
                "rep_cycles": c.representative.to_cycles(),
                "order": c.rep_order,
                "class_size": c.size,
                "centralizer_order": c.centralizer_order,
            }
            for c in rep.deficient_classes
        ],
        "verdict": verdict,
        "checks": checks,
    }


def _violations_of(result: dict[str, Any]) -> list[str]:
    out = []
    if result["verdict"].startswith("INCONSISTENT"):
        out.append(result["verdict"])
    for name, status in result["checks"].items():
        if status == FAIL:
            out.append(f"{name} failed")
    return out


def _expected_dict(e: CorpusEntry) -> dict[str, Any]:
    d: dict[str, Any] = {"defect": e.expected_defect if e.exact else f">={e.expected_defect}"}
    d["form"] = e.expected_form
    if e.expected_deficient_orders is not None:
        d["deficient_orders"] = sorted(e.expected_deficient_orders)
    return d


def _mismatches(e: CorpusEntry, result: dict[str, Any]) -> list[str]:
    out = []
    j = result["defect"]
    if e.exact and j != e.expected_defect:
        out.append(f"defect: expected {e.expected_defect}, got {j}")
    if not e.exact and j < e.expected_defect:
        out.append(f"defect: expected >= {e.expected_defect}, got {j}")
    if e.expected_form is not None and result["verdict"] != e.expected_form:
        out.append(f"form: expected {e.expected_form}, got {result['verdict']}")
    if e.expected_deficient_orders is not None:
        got = {c["order"] for c in result["deficient_classes"]}
        if got != set(e.expected_deficient_orders):
            out.append(f"deficient orders: expected {sorted(e.expected_deficient_orders)}, got {sorted(got)}")
    out.extend(_violations_of(result))
    return out


@dataclass
class VerifyReport:
    entries: list[dict[str, Any]]
    violations: list[dict[str, Any]]
    runtime_ms: int

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0


def verify_corpus(entries: Iterable[CorpusEntry] | None = None) -> VerifyReport:
    t0 = time.perf_counter()
    rows, violations = [], []
    for e in (corpus() if entries is None else entries):
        result = evaluate(e.spec.build())
        bad = _mismatches(e, result)
        row = {"name": e.name, **result, "expected": _expected_dict(e), "match": not bad}
        rows.append(row)
        for b in bad:
            violations.append({"name": e.name, "issue": b})
    return VerifyReport(rows, violations, int((time.perf_counter() - t0) * 1000))


# -- sweeps ------------------------------------------------------------------

@dataclass
class SweepReport:
    universe: str
    subgroup_count: int
    defect_histogram: dict[int, int]
    violations: list[dict[str, Any]]
    runtime_ms: int
    summary: list[dict[str, Any]] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0


def sweep(n: int) -> SweepReport:
    """Classify every subgroup of S_n and collect any disagreement with the theorems."""
    if not 3 <= n <= 6:
        raise ValueError("sweep needs 3 <= n <= 6")
    t0 = time.perf_counter()
    subs = all_subgroups(symmetric(n))
    hist: Counter[int] = Counter()
    agg: Counter[tuple[int, int, str]] = Counter()
    violations = []
    for H in subs:
        result = evaluate(H)
        hist[result["defect"]] += 1
        agg[(H.order, result["defect"], result["verdict"])] += 1
        for issue in _violations_of(result):
            violations.append({
                "order": H.order,
                "generators": [g.to_cycles() for g in H.generators],
                "issue": issue,
            })
    summary = [
        {"order": o, "defect": j, "verdict": v, "count": c}
        for (o, j, v), c in sorted(agg.items())
    ]
    return SweepReport(
        universe=f"S_{n}",
        subgroup_count=len(subs),
        defect_histogram=dict(sorted(hist.items())),
        violations=violations,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
        summary=summary,
    )


def analyze(spec: GroupSpec | str) -> dict[str, Any]:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    G = spec.build()
    result = evaluate(G)
    classes = conjugacy_classes(G)
    table = [
        {
            "rep_cycles": c.representative.to_cycles(),
            "order": c.rep_order,
            "class_size": c.size,
            "centralizer_order": c.centralizer_order,
            "deficient": c.deficient,
        }
        for c in classes
    ]
    return {
        "name": str(spec),
        **result,
        "order_profile": {str(k): v for k, v in element_order_profile(G).items()},
        "classes": table,
        "expected": None,
        "match": None,
    }


# -- serialization -----------------------------------------------------------

def to_json(command: str, entries: list[dict[str, Any]], violations: list[dict[str, Any]],
            runtime_ms: int | None, **extra: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline, no floats."""
    doc = {
        "artifact_version": __version__,
        "command": command,
        "entries": entries,
        "violations": violations,
        "runtime_ms": runtime_ms,
        **extra,
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _fmt_row(cells: list[str], widths: list[int]) -> str:
    return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = [_fmt_row(header, widths), _fmt_row(["-" * w for w in widths], widths)]
    lines += [_fmt_row(r, widths) for r in rows]
    return "\n".join(lines)


def render_text(command: str, entries: list[dict[str, Any]], violations: list[dict[str, Any]],
                runtime_ms: int | None = None, **extra: Any) -> str:
    out = []
    if command == "verify-corpus":
        rows = [[
            e["name"], str(e["order"]), str(e["defect"]), e["verdict"],
            e["checks"]["prop_A1"], e["checks"]["prop_A2"], e["checks"]["theorem_N"],
            e["checks"]["theorem_GH"], "ok" if e["match"] else "MISMATCH",
        ] for e in entries]
        out.append(_table(["name", "order", "j", "verdict", "A1", "A2", "N", "GH", "match"], rows))
    elif command == "analyze":
        for e in entries:
            out.append(f"group {e['name']}: order {e['order']}")
            prof = ", ".join(f"{k}:{v}" for k, v in e["order_profile"].items())
            out.append(f"element orders {{{prof}}}")
            rows = [[c["rep_cycles"], str(c["order"]), str(c["class_size"]),
                     str(c["centralizer_order"]), "yes" if c["deficient"] else "no"]
                    for c in e["classes"]]
            out.append(_table(["representative", "order", "size", "|C(x)|", "deficient"], rows))
            out.append(f"defect {e['defect']}")
            out.append(f"verdict {e['verdict']}")
            out.append("checks " + ", ".join(f"{k}={v}" for k, v in e["checks"].items()))
    elif command == "sweep":
        out.append(f"universe {extra['universe']}: {extra['subgroup_count']} subgroups")
        hist = ", ".join(f"j={k}: {v}" for k, v in extra["defect_histogram"].items())
        out.append(f"defect histogram {hist}")
        rows = [[str(r["order"]), str(r["defect"]), r["verdict"], str(r["count"])] for r in extra["summary"]]
        out.append(_table(["order", "j", "verdict", "count"], rows))
    out.append(f"violations: {len(violations)}")
    for v in violations:
        out.append("  " + ", ".join(f"{k}={v[k]}" for k in sorted(v)))
    if runtime_ms is not None:
        out.append(f"runtime_ms: {runtime_ms}")
    return "\n".join(out) + "\n"
