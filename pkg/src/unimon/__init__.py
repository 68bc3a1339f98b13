"""Unipotent numerical monoids: complement-finite submonoids of unitriangular matrix monoids.

Typical use::

    from unimon import PatternAmbient, from_generators, analyze

    S = from_generators(PatternAmbient.first_row(3), [(0, 2), (2, 1)], 4)
    print(analyze(S).to_text())
"""

from .coordinates import (NumericalSemigroupSummary, conductor_inequalities, coordinate_semigroup,
                          coordinate_semigroups, genus_bounds, numerical_semigroup, thick_thin,
                          thin_embedding_formula, thin_lower_bound)
from .documents import load_monoid, monoid_from_document, monoid_to_document
from .enumeration import brute_force_oracle, enumerate_by_genus, sweep
from .errors import (BudgetExceeded, ClosureViolation, ConjectureCounterexample,
                     GeneratorOutsideAmbient, HoleOutsideAmbient, InvalidPattern, NotThin,
                     ParseError, PositionError, SizeMismatch, UnimonError, WrongAmbient)
from .matrix import (PatternAmbient, UnipotentMatrix, elementary, elementary_factorization,
                     inverse, multiply, validate_pattern)
from .mingen import fundamental_min_gens, is_irreducible, minimal_generators, verify_generates
from .monoid import (UnipotentMonoid, basic_invariants, contains, from_generators, from_holes,
                     from_vectors, fundamental_monoid, generating_number)
from .report import InvariantReport, analyze
from .wilf import (generalized_wilf, ratio_conjecture, theorem_suite, unipotent_wilf,
                   wilf_verdict)

__version__ = "0.1.0"
