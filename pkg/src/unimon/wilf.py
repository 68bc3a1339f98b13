"""Wilf-type inequalities and proved structural invariants, evaluated exactly.

Every comparison is an integer inequality lhs <= rhs; ratios are compared
by cross multiplication. Conjecture verdicts are findings, theorem verdicts
are consistency checks on this implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .coordinates import ThickThinVerdict, thick_thin
from .errors import WrongAmbient
from .mingen import minimal_generators
from .monoid import UnipotentMonoid, lower_points


@dataclass(frozen=True)
class Inequality:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class GeneralizedWilf:
    c_T: int
    n_T: int
    inequality: Inequality

    @property
    def holds(self) -> bool:
        return self.inequality.holds

    def to_json(self) -> dict:
        return {"c_T": self.c_T, "n_T": self.n_T, **self.inequality.to_json()}


def _embedding_dimension(S, e):
    return minimal_generators(S).e if e is None else e


def unipotent_wilf(S: UnipotentMonoid, e: int | None = None) -> Inequality:
    """d_G * c_M(S) <= e(S) * n_M(S)."""
    e = _embedding_dimension(S, e)
    _, c, _, n = S.invariants
    return Inequality(S.ambient.dim * c, e * n)


def hole_lower_set(S: UnipotentMonoid) -> set:
    """Points a with a <= h entrywise for some hole h."""
    holes = S.holes
    # only holes that are maximal for the entrywise order contribute
    top = [h for h in holes
           if not any(o != h and all(a <= b for a, b in zip(h, o)) for o in holes)]
    out = set()
    for h in top:
        out.update(lower_points(h))
    return out


def generalized_counts(S: UnipotentMonoid) -> tuple[int, int]:
    """(c(T), n(T)): size of the hole lower set and how many of its points lie in S."""
    if not S.ambient.is_first_row:
        raise WrongAmbient("c(T) and n(T) are defined for first-row ambients P(n, N) only")
    low = hole_lower_set(S)
    return len(low), sum(1 for p in low if p not in S.holes)


def generalized_wilf(S: UnipotentMonoid, e: int | None = None) -> GeneralizedWilf:
    """(n-1) * c(T) <= e(S) * n(T)."""
    c_T, n_T = generalized_counts(S)
    e = _embedding_dimension(S, e)
    return GeneralizedWilf(c_T, n_T, Inequality(S.ambient.dim * c_T, e * n_T))


def ratio_conjecture(S: UnipotentMonoid) -> Inequality | None:
    """c_M / c(T) <= n_M / n(T), as c_M * n(T) <= n_M * c(T); None when S = M."""
    c_T, n_T = generalized_counts(S)
    if not S.holes:
        return None
    _, c, _, n = S.invariants
    return Inequality(c * n_T, n * c_T)


def ordinary_wilf(coord) -> Inequality:
    """c <= e * n for one numerical semigroup."""
    return Inequality(coord.conductor, coord.edim * coord.sporadicity)


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one proved statement: applicable, and if so whether it held."""

    applicable: bool
    holds: bool = True
    detail: str = ""
    proved: bool = True

    @property
    def status(self) -> str:
        if not self.applicable:
            return "n/a"
        tag = "pass" if self.holds else "FAIL"
        return tag if self.proved else f"{tag} (conjectural)"

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds

    def to_json(self) -> dict:
        return {"status": self.status, "detail": self.detail}


def theorem_suite(S: UnipotentMonoid, e: int | None = None,
                  tt: ThickThinVerdict | None = None) -> dict[str, TheoremCheck]:
    """Check every proved statement whose hypotheses S satisfies."""
    amb = S.ambient
    e = _embedding_dimension(S, e)
    tt = thick_thin(S) if tt is None else tt
    r, c, g, n = S.invariants
    out = {}

    sandwich = r // 2 <= g < c
    out["genus_sandwich"] = TheoremCheck(True, sandwich, f"{r // 2} <= {g} < {c}",
                                         proved=amb.is_first_row or amb.is_full)

    first_row = amb.is_first_row and amb.dim >= 2
    uwc = unipotent_wilf(S, e)
    if not first_row:
        for name in ("thick_thin_rigidity", "thick_wilf", "thin_edim_bound", "thin_wilf"):
            out[name] = TheoremCheck(False)
        return out

    both = tt.is_thick and tt.is_thin
    out["thick_thin_rigidity"] = TheoremCheck(
        True, both == (not S.holes), f"thick={tt.is_thick} thin={tt.is_thin} g={g}")
    out["thick_wilf"] = TheoremCheck(
        tt.is_thick, uwc.holds, f"{uwc.lhs} <= {uwc.rhs}")
    bound = amb.dim * prod(cs.edim for cs in tt.coordinates)
    out["thin_edim_bound"] = TheoremCheck(tt.is_thin, bound <= e, f"{bound} <= {e}")

    full_conductors = prod(cs.conductor for cs in tt.coordinates) == r ** amb.dim
    coord_wilf = all(ordinary_wilf(cs).holds for cs in tt.coordinates)
    applies = tt.is_thin and full_conductors and coord_wilf
    if applies:
        gw = generalized_wilf(S, e)
        ok = uwc.holds and uwc.holds == gw.holds
        detail = f"{uwc.lhs} <= {uwc.rhs}; generalized {gw.inequality.lhs} <= {gw.inequality.rhs}"
    else:
        ok, detail = True, ""
    out["thin_wilf"] = TheoremCheck(applies, ok, detail)
    return out


@dataclass(frozen=True)
class WilfVerdict:
    unipotent: Inequality
    generalized: GeneralizedWilf | None
    ratio: Inequality | None
    ordinary: tuple[Inequality, ...]
    theorems: dict

    @property
    def conjecture_violations(self) -> list[str]:
        bad = []
        if not self.unipotent.holds:
            bad.append("unipotent")
        if self.generalized is not None and not self.generalized.holds:
            bad.append("generalized")
        if self.ratio is not None and not self.ratio.holds:
            bad.append("ratio")
        return bad

    @property
    def theorem_failures(self) -> list[str]:
        return [k for k, v in self.theorems.items() if v.failed]

    def to_json(self) -> dict:
        na = {"status": "n/a"}
        return {
            "unipotent": self.unipotent.to_json(),
            "generalized": self.generalized.to_json() if self.generalized else na,
            "ratio": ({"lhs_cross": self.ratio.lhs, "rhs_cross": self.ratio.rhs,
                       "holds": self.ratio.holds} if self.ratio else na),
            "ordinary": [o.to_json() for o in self.ordinary],
            "theorems": {k: v.to_json() for k, v in self.theorems.items()},
        }


def wilf_verdict(S: UnipotentMonoid, e: int | None = None,
                 tt: ThickThinVerdict | None = None) -> WilfVerdict:
    e = _embedding_dimension(S, e)
    tt = thick_thin(S) if tt is None else tt
    if S.ambient.is_first_row:
        gen, ratio = generalized_wilf(S, e), ratio_conjecture(S)
    else:
        gen = ratio = None
    return WilfVerdict(
        unipotent_wilf(S, e),
        gen,
        ratio,
        tuple(ordinary_wilf(cs) for cs in tt.coordinates),
        theorem_suite(S, e, tt),
    )
