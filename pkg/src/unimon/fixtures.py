"""Reference fixtures with published expected values, and a runner comparing them."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources

from .coordinates import genus_bounds, thin_embedding_formula, thin_lower_bound
from .documents import matrix_from_literal, monoid_from_document
from .report import InvariantReport, analyze


def fixture_names() -> list[str]:
    root = resources.files("unimon") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    path = resources.files("unimon") / "fixtures" / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    return json.loads(path.read_text())


def _as_points(report: InvariantReport, items):
    amb = report.monoid.ambient
    out = set()
    for it in items:
        out.add(amb.to_point(matrix_from_literal(it)) if isinstance(it, dict) else tuple(it))
    return out


def _coords(rep, attr):
    return [getattr(c, attr) for c in rep.coordinates.coordinates]


def _generalized(rep, attr):
    gw = rep.verdict.generalized
    return None if gw is None else getattr(gw, attr)


ACTUAL = {
    "r": lambda rep: rep.r,
    "c": lambda rep: rep.c,
    "g": lambda rep: rep.g,
    "n": lambda rep: rep.nspor,
    "e": lambda rep: rep.e,
    "unipotent_lhs": lambda rep: rep.verdict.unipotent.lhs,
    "unipotent_rhs": lambda rep: rep.verdict.unipotent.rhs,
    "unipotent_holds": lambda rep: rep.verdict.unipotent.holds,
    "c_T": lambda rep: _generalized(rep, "c_T"),
    "n_T": lambda rep: _generalized(rep, "n_T"),
    "generalized_lhs": lambda rep: rep.verdict.generalized.inequality.lhs,
    "generalized_rhs": lambda rep: rep.verdict.generalized.inequality.rhs,
    "ratio_lhs": lambda rep: rep.verdict.ratio.lhs,
    "ratio_rhs": lambda rep: rep.verdict.ratio.rhs,
    "thin": lambda rep: rep.coordinates.is_thin,
    "thick": lambda rep: rep.coordinates.is_thick,
    "coordinate_genera": lambda rep: _coords(rep, "genus"),
    "coordinate_conductors": lambda rep: _coords(rep, "conductor"),
    "coordinate_edims": lambda rep: _coords(rep, "edim"),
    "coordinate_multiplicities": lambda rep: _coords(rep, "multiplicity"),
    "genus_bounds": lambda rep: list(genus_bounds(rep.monoid)),
    "thin_formula": lambda rep: thin_embedding_formula(rep.monoid),
    "thin_lower_bound": lambda rep: thin_lower_bound(rep.monoid),
    "min_gens": lambda rep: rep.min_gens.as_set(),
}


@dataclass(frozen=True)
class CheckResult:
    fixture: str
    case: str
    key: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def describe(self) -> str:
        if self.key == "min_gens" and not self.ok:
            extra = sorted(self.actual - self.expected)
            missing = sorted(self.expected - self.actual)
            return f"min_gens: extra {extra} missing {missing}"
        return f"{self.key}: expected {self.expected} got {self.actual}"


@dataclass(frozen=True)
class FixtureResult:
    name: str
    checks: tuple[CheckResult, ...]
    seconds: float
    reports: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]


def run_fixture(name: str) -> FixtureResult:
    doc = load_fixture(name)
    checks = []
    reports = []
    t0 = time.perf_counter()
    for case in doc["cases"]:
        rep = analyze(monoid_from_document(case["monoid"]))
        reports.append(rep)
        for key, want in case["expected"].items():
            got = ACTUAL[key](rep)
            if key == "min_gens":
                want = _as_points(rep, want)
            checks.append(CheckResult(name, case["label"], key, want, got))
    return FixtureResult(name, tuple(checks), time.perf_counter() - t0, tuple(reports))


def run_all(names=None) -> list[FixtureResult]:
    return [run_fixture(n) for n in (names or fixture_names())]
