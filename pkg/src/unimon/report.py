"""Full per-monoid analysis: invariants, minimal generators, coordinates, verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coordinates import (ThickThinVerdict, conductor_inequalities, genus_bounds,
                          thick_thin, thin_embedding_formula, thin_lower_bound)
from .mingen import MinimalGeneratingSet, minimal_generators
from .monoid import UnipotentMonoid
from .wilf import WilfVerdict, wilf_verdict


@dataclass(frozen=True)
class InvariantReport:
    monoid: UnipotentMonoid
    min_gens: MinimalGeneratingSet
    coordinates: ThickThinVerdict
    verdict: WilfVerdict

    @property
    def r(self):
        return self.monoid.invariants.r

    @property
    def c(self):
        return self.monoid.invariants.c

    @property
    def g(self):
        return self.monoid.invariants.g

    @property
    def nspor(self):
        return self.monoid.invariants.nspor

    @property
    def e(self):
        return self.min_gens.e

    def thin_formulas(self) -> dict | None:
        S = self.monoid
        if not (S.ambient.is_first_row and self.coordinates.is_thin):
            return None
        formula = thin_embedding_formula(S)
        return {"edim_formula": formula, "matches": formula == self.e,
                "lower_bound": thin_lower_bound(S)}

    def to_json(self) -> dict:
        S = self.monoid
        amb = S.ambient
        out = {
            "ambient": amb.to_json(),
            "dim": amb.dim,
            "r": self.r, "c": self.c, "g": self.g, "n": self.nspor, "e": self.e,
            "holes": [list(h) for h in S.sorted_holes],
            "min_gens": [list(p) for p in self.min_gens],
            "min_gens_matrices": [m.to_literal() for m in self.min_gens.matrices()],
            "coordinates": [cs.to_json() for cs in self.coordinates.coordinates],
            "flags": self.coordinates.to_json(),
            "verdicts": self.verdict.to_json(),
        }
        if amb.is_first_row:
            lo, hi = genus_bounds(S)
            out["genus_bounds"] = [lo, hi]
            out["conductor_inequalities"] = conductor_inequalities(S)
            thin = self.thin_formulas()
            if thin is not None:
                out["thin_formulas"] = thin
        return out

    def to_text(self) -> str:
        S = self.monoid
        lines = [
            f"ambient n={S.ambient.n} dim={S.ambient.dim} zero={sorted(S.ambient.zero_positions)}",
            f"r={self.r} c={self.c} g={self.g} n={self.nspor} e={self.e}",
            "min_gens: " + " ".join(str(p) for p in self.min_gens),
            "coordinates:",
        ]
        for cs in self.coordinates.coordinates:
            lines.append(f"  {cs.position}: F={cs.frobenius} c={cs.conductor} g={cs.genus} "
                         f"m={cs.multiplicity} e={cs.edim} n={cs.sporadicity}")
        tt = self.coordinates
        lines.append(f"thick={tt.is_thick} thin={tt.is_thin} box_thin={tt.is_box_thin}")
        v = self.verdict
        u = v.unipotent
        lines.append(f"unipotent wilf: {u.lhs} <= {u.rhs} {'holds' if u.holds else 'FAILS'}")
        if v.generalized is not None:
            gw = v.generalized
            lines.append(f"generalized wilf: c(T)={gw.c_T} n(T)={gw.n_T} "
                         f"{gw.inequality.lhs} <= {gw.inequality.rhs} "
                         f"{'holds' if gw.holds else 'FAILS'}")
        if v.ratio is not None:
            gw = v.generalized
            left = Fraction(self.c, gw.c_T)
            right = Fraction(self.nspor, gw.n_T)
            lines.append(f"ratio: {self.c}/{gw.c_T} <= {self.nspor}/{gw.n_T} "
                         f"(approx {float(left):.4f} <= {float(right):.4f}) "
                         f"cross {v.ratio.lhs} <= {v.ratio.rhs} "
                         f"{'holds' if v.ratio.holds else 'FAILS'}")
        for name, chk in v.theorems.items():
            lines.append(f"theorem {name}: {chk.status}")
        return "\n".join(lines)


def analyze(S: UnipotentMonoid) -> InvariantReport:
    mg = minimal_generators(S)
    tt = thick_thin(S)
    return InvariantReport(S, mg, tt, wilf_verdict(S, mg.e, tt))
