"""Coordinate numerical semigroups of a monoid and the formulas built on them.

For a free position p the coordinate monoid is S intersected with the powers
of the elementary matrix at p; it is an ordinary numerical semigroup whose
gaps are exactly the holes lying on that axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import prod

from .errors import NotThin, PositionError, WrongAmbient
from .matrix import Position
from .monoid import UnipotentMonoid


@dataclass(frozen=True)
class NumericalSemigroupSummary:
    """Classical invariants of a numerical semigroup given by its gaps.

    The gap-free semigroup N is reported with frobenius -1, conductor 1
    and sporadicity 1, so that its only "sporadic" element is 0.
    """

    position: Position | None
    gaps: tuple[int, ...]

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 1

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def sporadicity(self) -> int:
        return self.conductor - self.genus

    def __contains__(self, m: int) -> bool:
        return m >= 0 and m not in self._gapset

    @cached_property
    def _gapset(self) -> frozenset:
        return frozenset(self.gaps)

    @property
    def multiplicity(self) -> int:
        m = 1
        while m in self._gapset:
            m += 1
        return m

    def members_below(self, bound: int) -> list[int]:
        return [m for m in range(bound) if m not in self._gapset]

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        # every minimal generator lies in [m, F + m]; N itself is generated by 1
        gaps = self._gapset
        m = self.multiplicity
        out = []
        for s in range(m, max(self.frobenius, 0) + m + 1):
            if s in gaps:
                continue
            if not any(a not in gaps and (s - a) not in gaps for a in range(1, s // 2 + 1)):
                out.append(s)
        return tuple(out)

    @property
    def edim(self) -> int:
        return len(self.minimal_generators)

    def to_json(self) -> dict:
        return {
            "position": list(self.position) if self.position else None,
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "edim": self.edim,
            "sporadicity": self.sporadicity,
        }


def numerical_semigroup(gaps, position=None) -> NumericalSemigroupSummary:
    return NumericalSemigroupSummary(position, tuple(sorted(set(gaps))))


def coordinate_semigroup(S: UnipotentMonoid, position: Position) -> NumericalSemigroupSummary:
    amb = S.ambient
    position = tuple(position)
    if position not in amb.index:
        raise PositionError(f"{position} is not a free coordinate of the ambient")
    k = amb.index[position]
    gaps = [h[k] for h in S.holes if sum(h) == h[k]]
    return numerical_semigroup(gaps, position)


def coordinate_semigroups(S: UnipotentMonoid) -> list[NumericalSemigroupSummary]:
    return [coordinate_semigroup(S, p) for p in S.ambient.positions]


def elementary_symmetric(j: int, values) -> int:
    """e_j(values); e_0 = 1."""
    return sum(prod(c) for c in combinations(values, j))


@dataclass(frozen=True)
class ThickThinVerdict:
    coordinates: tuple[NumericalSemigroupSummary, ...]
    genus: int
    sporadicity: int
    box_sporadicity_product: int

    @property
    def genus_sum(self) -> int:
        return sum(c.genus for c in self.coordinates)

    @property
    def sporadicity_product(self) -> int:
        return prod(c.sporadicity for c in self.coordinates)

    @property
    def is_thick(self) -> bool:
        return self.genus_sum == self.genus

    @property
    def is_thin(self) -> bool:
        return self.sporadicity_product == self.sporadicity

    @property
    def is_box_thin(self) -> bool:
        """Thinness with coordinate sporadicity counted in [0, r-1] instead of [0, c_i - 1]."""
        return self.box_sporadicity_product == self.sporadicity

    def to_json(self) -> dict:
        return {
            "thick": self.is_thick,
            "thin": self.is_thin,
            "box_thin": self.is_box_thin,
            "genus_sum": self.genus_sum,
            "sporadicity_product": self.sporadicity_product,
        }


def thick_thin(S: UnipotentMonoid) -> ThickThinVerdict:
    coords = tuple(coordinate_semigroups(S))
    r, _, g, n = S.invariants
    box = prod(len(c.members_below(r)) for c in coords)
    return ThickThinVerdict(coords, g, n, box)


def _require_first_row(S: UnipotentMonoid):
    if not S.ambient.is_first_row:
        raise WrongAmbient("this formula is defined for first-row ambients P(n, N) only")


def genus_bounds(S: UnipotentMonoid) -> tuple[int, int]:
    """(e_1(g_i), sum_j (-1)^(j-1) k^(d-j) e_j(g_i)) bracketing the genus."""
    _require_first_row(S)
    gs = [c.genus for c in coordinate_semigroups(S)]
    d = len(gs)
    k = S.generating_number
    upper = sum((-1) ** (j - 1) * k ** (d - j) * elementary_symmetric(j, gs)
                for j in range(1, d + 1))
    return elementary_symmetric(1, gs), upper


def _require_thin(S: UnipotentMonoid) -> ThickThinVerdict:
    _require_first_row(S)
    v = thick_thin(S)
    if not v.is_thin:
        raise NotThin(f"product of coordinate sporadicities {v.sporadicity_product} "
                      f"differs from sporadicity {v.sporadicity}")
    return v


def thin_embedding_formula(S: UnipotentMonoid) -> int:
    """Closed-form embedding dimension of a thin monoid.

    sum e_i + sum over index sets I with |I| >= 2 of
    sum_{i in I} m_i * prod_{j in I, j != i} (m_j - 1).
    """
    v = _require_thin(S)
    es = [c.edim for c in v.coordinates]
    ms = [c.multiplicity for c in v.coordinates]
    total = sum(es)
    idx = range(len(ms))
    for size in range(2, len(ms) + 1):
        for I in combinations(idx, size):
            total += sum(ms[i] * prod(ms[j] - 1 for j in I if j != i) for i in I)
    return total


def thin_lower_bound(S: UnipotentMonoid) -> int:
    """(n-1) * prod e_i, a lower bound for e(S) when S is thin."""
    v = _require_thin(S)
    return len(v.coordinates) * prod(c.edim for c in v.coordinates)


def conductor_inequalities(S: UnipotentMonoid) -> dict:
    """Product and sum chains for the coordinate conductors against d * c_M."""
    _require_first_row(S)
    cs = [c.conductor for c in coordinate_semigroups(S)]
    d = len(cs)
    r, c_M, _, _ = S.invariants
    prod_c, sum_c = prod(cs), sum(cs)
    return {
        "conductors": cs,
        "generating_number": r,
        "product": prod_c,
        "product_bound": r ** d,
        "sum": sum_c,
        "sum_bound": d * r,
        "weighted_conductor": d * c_M,
        "product_chain_holds": prod_c <= r ** d and (d < 2 or r ** d < d * c_M),
        "sum_chain_holds": sum_c <= d * r and (d < 2 or d * r < d * c_M or r == 1),
        "max_minus_r": max(cs, default=1) - r,
    }
