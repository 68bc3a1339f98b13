"""Exhaustive enumeration of complement-finite submonoids of N^d by genus.

The tree: the root is N^d, and the children of a node S are S \\ {x} for
every minimal generator x of S that is larger than every hole of S in
graded-lexicographic order (coordinate sum first, then lexicographic).
Since graded-lex is compatible with addition, the parent of any S != N^d
is S together with its largest hole, so every monoid appears exactly once.

An independent brute-force oracle decides points of small coordinate sum
one at a time and is used to cross-check the tree.
"""

from __future__ import annotations

import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import prod

from .coordinates import thick_thin
from .errors import BudgetExceeded, ConjectureCounterexample
from .matrix import PatternAmbient
from .monoid import UnipotentMonoid
from .wilf import wilf_verdict

Vec = tuple[int, ...]


def graded_key(x: Vec):
    return (sum(x), x)


def _unit_vectors(d: int) -> tuple[Vec, ...]:
    return tuple(tuple(int(i == k) for i in range(d)) for k in range(d))


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(u + v for u, v in zip(a, b))


def _leq(a: Vec, b: Vec) -> bool:
    return all(u <= v for u, v in zip(a, b))


def is_irreducible_vec(y: Vec, holes) -> bool:
    """True iff y is a member with no decomposition into two nonzero members.

    Counts ordered pairs (a, y - a) with both parts nonzero members by
    inclusion-exclusion over the prod(y_i + 1) lattice points below y.
    """
    if y in holes:
        return False
    below = 0
    pairs = 0
    for h in holes:
        if _leq(h, y):
            below += 1
            if tuple(v - u for u, v in zip(h, y)) in holes:
                pairs += 1
    return prod(v + 1 for v in y) - 2 - 2 * below + pairs == 0


@dataclass(frozen=True)
class EnumerationNode:
    """A tree node; ``msg`` holds the minimal generators in graded-lex order."""

    dim: int
    holes: frozenset
    last_removed: Vec | None
    msg: tuple[Vec, ...]

    @property
    def genus(self) -> int:
        return len(self.holes)

    @property
    def frontier(self) -> tuple[Vec, ...]:
        """Minimal generators eligible for removal."""
        if self.last_removed is None:
            return self.msg
        lk = graded_key(self.last_removed)
        return tuple(x for x in self.msg if graded_key(x) > lk)

    @property
    def monoid(self) -> UnipotentMonoid:
        return UnipotentMonoid(PatternAmbient.first_row(self.dim + 1), self.holes)

    def canonical(self) -> tuple[Vec, ...]:
        return tuple(sorted(self.holes, key=graded_key))

    def children(self):
        for x in self.frontier:
            holes = self.holes | {x}
            gens = {m for m in self.msg if m != x}
            for y in [_add(x, m) for m in self.msg if m != x] + [_add(x, x), _add(x, _add(x, x))]:
                if y not in gens and is_irreducible_vec(y, holes):
                    gens.add(y)
            yield EnumerationNode(self.dim, holes, x, tuple(sorted(gens, key=graded_key)))

    def to_json(self) -> dict:
        return {"holes": [list(h) for h in self.canonical()],
                "last_removed": list(self.last_removed) if self.last_removed else None}


def root_node(d: int) -> EnumerationNode:
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return EnumerationNode(d, frozenset(), None, tuple(sorted(_unit_vectors(d), key=graded_key)))


def node_from_holes(d: int, holes) -> EnumerationNode:
    """Rebuild a node (minimal generators included) from its hole set."""
    holes = frozenset(tuple(h) for h in holes)
    last = max(holes, key=graded_key) if holes else None
    r = 1 + max((max(h) for h in holes), default=0)
    msg = [y for y in product(range(2 * r), repeat=d)
           if any(y) and is_irreducible_vec(y, holes)]
    return EnumerationNode(d, holes, last, tuple(sorted(msg, key=graded_key)))


def walk_tree(start, g_max: int, node_budget: int | None = None):
    """Depth-first walk from the given nodes, yielding every node of genus <= g_max.

    With a budget, raises BudgetExceeded after ``node_budget`` nodes; its
    ``frontier`` lists the nodes not yet visited.
    """
    stack = list(reversed(start))
    seen = 0
    while stack:
        if node_budget is not None and seen >= node_budget:
            raise BudgetExceeded(f"node budget {node_budget} exhausted",
                                 frontier=list(reversed(stack)))
        node = stack.pop()
        seen += 1
        yield node
        if node.genus < g_max:
            stack.extend(reversed(list(node.children())))


def enumerate_by_genus(d: int, g_max: int, node_budget: int | None = None):
    """Every submonoid of N^d with finite complement of size <= g_max, once each."""
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    for node in walk_tree([root_node(d)], g_max, node_budget):
        yield node.monoid


def tree_hole_sets(d: int, g: int) -> set:
    """Canonical hole sets of genus exactly g produced by the tree."""
    return {n.canonical() for n in walk_tree([root_node(d)], g) if n.genus == g}


def brute_force_oracle(d: int, g: int, node_budget: int | None = 5_000_000) -> set:
    """All genus-g hole sets in N^d, found without the tree.

    Every hole has coordinate sum <= 2g - 1, so only those points are
    decided, in graded order. A point that is the sum of two decided nonzero
    members is forced into S; otherwise both choices are explored.
    """
    if g == 0:
        return {()}
    pts = sorted((p for p in product(range(2 * g), repeat=d) if 0 < sum(p) <= 2 * g - 1),
                 key=graded_key)
    # members already decided that lie strictly below each point
    below = [[j for j in range(i) if _leq(pts[j], pts[i])] for i in range(len(pts))]
    index = {p: i for i, p in enumerate(pts)}
    complement = [[index.get(tuple(v - u for u, v in zip(pts[j], pts[i]))) for j in below[i]]
                  for i in range(len(pts))]
    out = set()
    member = [False] * len(pts)
    steps = 0

    def forced(i):
        for j, k in zip(below[i], complement[i]):
            if k is not None and member[j] and member[k]:
                return True
        return False

    def go(i, holes):
        nonlocal steps
        steps += 1
        if node_budget is not None and steps > node_budget:
            raise BudgetExceeded(f"oracle budget {node_budget} exhausted")
        if i == len(pts):
            if len(holes) == g:
                out.add(tuple(sorted(holes, key=graded_key)))
            return
        member[i] = True
        go(i + 1, holes)
        if len(holes) < g and not forced(i):
            member[i] = False
            holes.append(pts[i])
            go(i + 1, holes)
            holes.pop()
            member[i] = True

    go(0, [])
    return out


# -- sweep -------------------------------------------------------------------

CONJECTURES = ("unipotent", "generalized", "ratio")
THEOREMS = ("genus_sandwich", "thick_thin_rigidity", "thick_wilf", "thin_edim_bound", "thin_wilf")
IDENTITIES = ("box_count", "genus_sum", "sporadicity_product", "c_T", "n_T",
              "hole_sum_bound", "closure")
_RECORD_LIMIT = 20


def _holes_key(holes) -> list:
    return [list(h) for h in sorted(holes, key=graded_key)]


@dataclass
class EnumerationStats:
    """Aggregated sweep results. Merging is associative and commutative."""

    dim: int
    g_max: int
    counts: dict = field(default_factory=dict)
    thick: int = 0
    thin: int = 0
    thick_and_thin: int = 0
    theorem_applicable: dict = field(default_factory=lambda: dict.fromkeys(THEOREMS, 0))
    theorem_failures: dict = field(default_factory=lambda: dict.fromkeys(THEOREMS, 0))
    conjecture_violations: dict = field(default_factory=lambda: dict.fromkeys(CONJECTURES, 0))
    identity_failures: dict = field(default_factory=lambda: dict.fromkeys(IDENTITIES, 0))
    worst: dict = field(default_factory=dict)
    failure_records: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    nodes: int = 0
    seconds: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: EnumerationStats) -> EnumerationStats:
        for g, k in other.counts.items():
            self.counts[g] = self.counts.get(g, 0) + k
        self.thick += other.thick
        self.thin += other.thin
        self.thick_and_thin += other.thick_and_thin
        for mine, theirs in ((self.theorem_applicable, other.theorem_applicable),
                             (self.theorem_failures, other.theorem_failures),
                             (self.conjecture_violations, other.conjecture_violations),
                             (self.identity_failures, other.identity_failures)):
            for k, v in theirs.items():
                mine[k] = mine.get(k, 0) + v
        for name, rec in other.worst.items():
            self._offer_worst(name, rec)
        self.failure_records = sorted(self.failure_records + other.failure_records,
                                      key=lambda r: (r["check"], r["holes"]))[:_RECORD_LIMIT]
        self.rows.extend(other.rows)
        self.nodes += other.nodes
        self.seconds += other.seconds
        return self

    def _offer_worst(self, name, rec):
        cur = self.worst.get(name)
        if cur is None or (rec["slack"], rec["holes"]) < (cur["slack"], cur["holes"]):
            self.worst[name] = rec

    def _fail(self, check, holes, detail):
        self.failure_records.append({"check": check, "holes": _holes_key(holes), "detail": detail})
        self.failure_records.sort(key=lambda r: (r["check"], r["holes"]))
        del self.failure_records[_RECORD_LIMIT:]

    def sorted_rows(self) -> list:
        return sorted(self.rows, key=lambda r: (r["g"], r["holes"]))

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "dim": self.dim,
            "g_max": self.g_max,
            "counts_by_genus": [self.counts.get(g, 0) for g in range(self.g_max + 1)],
            "total": self.total,
            "thick": self.thick,
            "thin": self.thin,
            "thick_and_thin": self.thick_and_thin,
            "theorems": {k: {"applicable": self.theorem_applicable[k],
                             "failures": self.theorem_failures[k]} for k in THEOREMS},
            "conjecture_violations": dict(self.conjecture_violations),
            "identity_failures": dict(self.identity_failures),
            "worst_slack": {k: self.worst[k] for k in sorted(self.worst)},
            "failure_records": self.failure_records,
        }
        if timing:
            out["nodes"] = self.nodes
            out["seconds"] = round(self.seconds, 3)
        return out

    @classmethod
    def from_json(cls, doc) -> EnumerationStats:
        st = cls(doc["dim"], doc["g_max"])
        st.counts = {g: k for g, k in enumerate(doc["counts_by_genus"]) if k}
        st.thick, st.thin, st.thick_and_thin = doc["thick"], doc["thin"], doc["thick_and_thin"]
        for k, v in doc["theorems"].items():
            st.theorem_applicable[k] = v["applicable"]
            st.theorem_failures[k] = v["failures"]
        st.conjecture_violations.update(doc["conjecture_violations"])
        st.identity_failures.update(doc["identity_failures"])
        st.worst = dict(doc["worst_slack"])
        st.failure_records = list(doc["failure_records"])
        st.rows = list(doc.get("rows", []))
        return st


def _closure_ok(holes) -> bool:
    # no two nonzero members sum to a hole
    for h in holes:
        for a in product(*(range(v + 1) for v in h)):
            if not any(a) or a == h or a in holes:
                continue
            if tuple(v - u for u, v in zip(a, h)) not in holes:
                return False
    return True


def check_node(node: EnumerationNode, stats: EnumerationStats, halt: bool = True,
               keep_rows: bool = False, full_closure: bool = False):
    """Run every verdict on one node and fold it into ``stats``."""
    S = node.monoid
    holes = node.holes
    e = len(node.msg)
    r, c, g, n = S.invariants
    tt = thick_thin(S)
    v = wilf_verdict(S, e, tt)
    stats.counts[g] = stats.counts.get(g, 0) + 1
    stats.nodes += 1
    stats.thick += tt.is_thick
    stats.thin += tt.is_thin
    stats.thick_and_thin += tt.is_thick and tt.is_thin
    key = _holes_key(holes)

    for name, chk in v.theorems.items():
        if chk.applicable:
            stats.theorem_applicable[name] += 1
        if chk.failed:
            stats.theorem_failures[name] += 1
            stats._fail(name, holes, chk.detail)

    gw = v.generalized
    c_T, n_T = gw.c_T, gw.n_T
    in_box = sum(1 for p in product(range(r), repeat=node.dim) if p not in holes)
    identities = {
        "box_count": in_box == n and n + g == c,
        "genus_sum": tt.genus_sum <= g,
        "sporadicity_product": tt.sporadicity_product <= n,
        "c_T": c_T <= c,
        "n_T": n_T <= n,
        "hole_sum_bound": all(sum(h) <= 2 * g - 1 for h in holes),
        "closure": _closure_ok(holes) if full_closure else True,
    }
    for name, ok in identities.items():
        if not ok:
            stats.identity_failures[name] += 1
            stats._fail(name, holes, "")

    for name, ineq in (("unipotent", v.unipotent), ("generalized", gw.inequality),
                       ("ratio", v.ratio)):
        if ineq is None:
            continue
        if holes:
            stats._offer_worst(name, {"slack": ineq.slack, "holes": key,
                                      "lhs": ineq.lhs, "rhs": ineq.rhs})
        if not ineq.holds:
            stats.conjecture_violations[name] += 1
            stats._fail(name, holes, f"{ineq.lhs} > {ineq.rhs}")
            if halt:
                raise ConjectureCounterexample(name, S, {"lhs": ineq.lhs, "rhs": ineq.rhs})

    if keep_rows:
        stats.rows.append({
            "holes": key, "r": r, "c": c, "g": g, "n": n, "e": e,
            "thick": tt.is_thick, "thin": tt.is_thin,
            "unipotent": v.unipotent.holds, "generalized": gw.holds,
            "ratio": v.ratio.holds if v.ratio is not None else "",
            "c_T": c_T, "n_T": n_T,
        })


def _run_unit(args):
    """Worker entry point: sweep the subtrees below the given nodes."""
    d, g_max, holes_list, budget, halt, keep_rows = args
    starts = [node_from_holes(d, h) for h in holes_list]
    stats = EnumerationStats(d, g_max)
    t0 = time.perf_counter()
    frontier = []
    try:
        for node in walk_tree(starts, g_max, budget):
            check_node(node, stats, halt, keep_rows)
    except BudgetExceeded as exc:
        frontier = [n.to_json() for n in exc.frontier]
    stats.seconds = time.perf_counter() - t0
    return stats, frontier


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("UNIMON_WORKERS", "1")))
    except ValueError:
        return 1


SPLIT_GENUS = 3


def sweep(d: int, g_max: int, workers: int | None = None, node_budget: int | None = None,
          halt: bool = True, keep_rows: bool = False, resume: dict | None = None,
          split_genus: int = SPLIT_GENUS) -> EnumerationStats:
    """Run the full verdict suite on every monoid of genus <= g_max in N^d.

    Nodes of genus < split_genus are checked in the calling process; the
    subtrees rooted at genus split_genus form independent work units that
    may run in a process pool. Units run with the budget left after the
    prefix, so results do not depend on the worker count. On budget
    exhaustion BudgetExceeded carries the unvisited frontier and the partial
    statistics; pass ``{"frontier": ..., "stats": ...}`` as ``resume`` to
    continue.
    """
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("workers must be at least 1")
    t0 = time.perf_counter()
    if resume is not None:
        stats = EnumerationStats.from_json(resume["stats"])
        units = [[h["holes"]] for h in resume["frontier"]]
        spent = 0
    else:
        stats = EnumerationStats(d, g_max)
        units = []
        split = min(split_genus, g_max)
        spent = 0
        for node in walk_tree([root_node(d)], split):
            if node.genus == split:
                units.append([node.to_json()["holes"]])
            else:
                spent += 1
                check_node(node, stats, halt, keep_rows)
    budget = None if node_budget is None else max(node_budget - spent, 0)
    jobs = [(d, g_max, u, budget, halt, keep_rows) for u in units]
    if workers == 1 or len(jobs) < 2:
        results = map(_run_unit, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run_unit, jobs)
    frontier = []
    try:
        for part, front in results:
            stats.merge(part)
            frontier.extend(front)
    finally:
        if workers > 1 and len(jobs) >= 2:
            pool.shutdown(cancel_futures=True)
    stats.seconds = time.perf_counter() - t0
    if frontier:
        raise BudgetExceeded(f"node budget {node_budget} exhausted", frontier=frontier,
                             partial=stats)
    return stats


def write_checkpoint(path, d: int, g_max: int, exc: BudgetExceeded, keep_rows: bool = False):
    frontier = [f if isinstance(f, dict) else f.to_json() for f in exc.frontier]
    stats = exc.partial.to_json() if exc.partial is not None else EnumerationStats(d, g_max).to_json()
    if keep_rows and exc.partial is not None:
        stats["rows"] = exc.partial.rows
    with open(path, "w") as fh:
        json.dump({"dim": d, "g_max": g_max, "frontier": frontier, "stats": stats}, fh)


def read_checkpoint(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


CSV_FIELDS = ("holes", "r", "c", "g", "n", "e", "thick", "thin",
              "unipotent", "generalized", "ratio", "c_T", "n_T")


def write_csv(stats: EnumerationStats, fh):
    w = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for row in stats.sorted_rows():
        w.writerow({**row, "holes": json.dumps(row["holes"], separators=(",", ":"))})


def log_timing(stats: EnumerationStats, stream=sys.stderr):
    rate = stats.nodes / stats.seconds if stats.seconds else float("inf")
    print(f"swept {stats.nodes} nodes in {stats.seconds:.2f}s ({rate:.0f} nodes/s)", file=stream)
