"""Cross-validation of every route to h*_{a,b} and its properties.

Each (a, b) cell runs a fixed list of checks. Polynomial-only checks always
run; enumeration-based ones are gated by the profile so deep symbolic runs
stay cheap. Failures and errors become report entries, never exceptions.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable

from .closed_forms import (
    check_recursion,
    gamma_closed,
    hstar_closed,
    hstar_double_sum,
    hstar_via_colorings,
)
from .complex import build_nevo_complex, check_balanced, f_polynomial
from .ehrhart import hstar_bipartite_interpolated
from .errors import SepolyError
from .facets import count_facets_bipartite, enumerate_facets, facet_volume_from_function
from .graph import make_complete_bipartite
from .poly import gamma_extract, interlaces, is_gamma_positive, is_palindromic, is_real_rooted
from .trees import enumerate_T, hstar_via_trees

# per profile: the largest cell each enumeration-based check is run on
PROFILES: dict[str, dict[str, int]] = {
    "closed": {},
    "fast": {
        "colorings": 8,  # a + b
        "trees": 2,  # max(a, b)
        "ehrhart-dp": 4,
        "ehrhart-box": 5,  # a + b + 2 vertices
        "facets": 6,  # a + b + 2 vertices
        "facet-volumes": 2,
        "nevo": 4,
    },
    "full": {
        "colorings": 12,
        "trees": 3,
        "ehrhart-dp": 8,
        "ehrhart-box": 6,
        "facets": 10,
        "facet-volumes": 3,
        "nevo": 5,
    },
}


@dataclass
class CheckResult:
    check: str
    a: int
    b: int
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


@dataclass
class Report:
    a_max: int
    b_max: int
    profile: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def to_json(self) -> dict:
        return {
            "a_max": self.a_max,
            "b_max": self.b_max,
            "profile": self.profile,
            "ok": self.ok,
            "counts": self.counts(),
            "results": [asdict(r) for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render(self) -> str:
        lines = []
        for r in self.results:
            if r.status == "skip":
                continue
            tail = f"  {r.detail}" if r.detail and r.status == "fail" else ""
            lines.append(f"{r.status.upper():4}  ({r.a},{r.b})  {r.check}{tail}")
        c = self.counts()
        lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skip']} skipped")
        return "\n".join(lines)


def _compare(name: str, got, want) -> tuple[bool, str]:
    if got == want:
        return True, ""
    return False, f"{name}: got {got}, expected {want}"


def _cell_checks(a: int, b: int, limits: dict[str, int]) -> list[tuple[str, Callable[[], tuple[bool, str]] | None]]:
    h = hstar_closed(a, b)
    d = a + b + 1
    checks: list[tuple[str, Callable | None]] = []

    def gate(name: str, size: int | None, fn, budget: str | None = None):
        budget = budget or name
        enabled = size is not None and budget in limits and size <= limits[budget]
        checks.append((name, fn if enabled else None))

    checks.append(("double-sum", lambda: _compare("double sum", hstar_double_sum(a, b), h)))
    checks.append(("palindromic", lambda: (is_palindromic(h, d), str(h))))

    def gamma_check():
        g = gamma_extract(h, d)
        if g != gamma_closed(a, b):
            return False, f"extracted {g}, expected {gamma_closed(a, b)}"
        return is_gamma_positive(g), f"gamma {g}"

    checks.append(("gamma", gamma_check))
    checks.append(("recursion", (lambda: (check_recursion(a, b), "")) if a >= 1 and b >= 1 else None))
    checks.append(("real-rooted", lambda: (is_real_rooted(h), str(h))))
    if b >= 1:
        prev = hstar_closed(a, b - 1)
        checks.append(("interlacing", lambda: (interlaces(prev, h), f"{prev} vs {h}")))
    else:
        checks.append(("interlacing", None))

    gate("colorings", a + b, lambda: _compare("colorings", hstar_via_colorings(a, b), h))
    gate("trees", max(a, b), lambda: _compare("trees", hstar_via_trees(a, b), h))
    gate("ehrhart-dp", max(a, b), lambda: _compare("DP counts", hstar_bipartite_interpolated(a, b, "bipartite"), h))
    gate("ehrhart-box", a + b + 2 if max(a, b) <= 2 else None, lambda: _compare(
        "box scan", hstar_bipartite_interpolated(a, b, "generic"), h))

    def facet_check():
        got = len(enumerate_facets(make_complete_bipartite(a + 1, b + 1)))
        return _compare("facet count", got, count_facets_bipartite(a + 1, b + 1))

    gate("facets", a + b + 2, facet_check)

    def volume_check():
        facets = enumerate_facets(make_complete_bipartite(a + 1, b + 1))
        total = sum(facet_volume_from_function(f, a, b) for f in facets)
        return _compare("facet volume sum", total, h(1))

    gate("facet-volumes", max(a, b), volume_check)

    def tree_count_check():
        return _compare("|T|", len(enumerate_T(a, b)), h(1))

    gate("tree-count", max(a, b), tree_count_check, budget="trees")

    def nevo_check():
        c = build_nevo_complex(a, b)
        if not check_balanced(c):
            return False, "complex is not balanced"
        return _compare("f-polynomial", f_polynomial(c), gamma_closed(a, b))

    gate("nevo", max(a, b) if min(a, b) >= 1 else None, nevo_check)
    return checks


def verify_all(a_max: int, b_max: int, profile: str = "fast") -> Report:
    """Run every check on 0 <= a <= a_max, 0 <= b <= b_max, cells in row order."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    if a_max < 0 or b_max < 0:
        raise ValueError("a_max and b_max must be non-negative")
    limits = PROFILES[profile]
    report = Report(a_max, b_max, profile)
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            for name, fn in _cell_checks(a, b, limits):
                if fn is None:
                    report.results.append(CheckResult(name, a, b, "skip"))
                    continue
                try:
                    ok, detail = fn()
                except SepolyError as exc:
                    ok, detail = False, f"{type(exc).__name__}: {exc}"
                report.results.append(CheckResult(name, a, b, "pass" if ok else "fail", "" if ok else detail))
    return report

