"""Exact deciders: vertex splittability, linear quotients, componentwise linearity.

Vertex splittability and linear quotients are purely combinatorial and
field-independent; componentwise linearity consults the Betti engine
over an explicit field whenever a quotient order is not found quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .betti import FieldSpec, betti_table
from .monomials import Monomial, MonomialIdeal


@dataclass(frozen=True)
class SplitLeaf:
    kind: str  # "zero" | "unit" | "principal"


@dataclass(frozen=True)
class SplitNode:
    variable: str
    quotient: "SplitTree"  # the ideal of x-divisible generators, divided by x
    remainder: "SplitTree"  # the generators not divisible by x


SplitTree = Union[SplitLeaf, SplitNode]


@dataclass(frozen=True)
class VertexSplitResult:
    splittable: bool
    tree: SplitTree | None
    refutation: tuple[str, ...] | None


@dataclass(frozen=True)
class LinearQuotientResult:
    has_linear_quotients: bool
    order: tuple[int, ...] | None  # indices into the canonical generator list


@dataclass(frozen=True)
class ComponentReport:
    degree: int
    generator_count: int
    method: str  # "linear-quotients" | "betti" | "zero"
    linear: bool
    regularity: int | None


@dataclass(frozen=True)
class ComponentwiseResult:
    componentwise_linear: bool
    components: tuple[ComponentReport, ...]


@dataclass(frozen=True)
class CheckAllResult:
    componentwise_linear: bool
    linear_quotients: bool
    quotient_order: tuple[int, ...] | None
    vertex_splittable: bool
    split_tree: SplitTree | None
    regularity: int | None
    max_generator_degree: int | None
    components: tuple[ComponentReport, ...]
    implication_violation: str | None
    conjecture_counterexample: bool


def _leaf_for(ideal: MonomialIdeal) -> SplitLeaf | None:
    if ideal.is_zero:
        return SplitLeaf("zero")
    if len(ideal.generators) == 1:
        return SplitLeaf("unit" if ideal.is_unit else "principal")
    return None


def _split_search(ideal: MonomialIdeal, memo: dict) -> tuple[bool, SplitTree | None, list[str]]:
    leaf = _leaf_for(ideal)
    if leaf is not None:
        return True, leaf, []
    key = ideal.generators
    if key in memo:
        ok, tree = memo[key]
        return ok, tree, []
    gens = ideal.generators
    reasons = []
    for x in ideal.ambient:
        divisible = [g for g in gens if g.exponent(x) > 0]
        if not divisible:
            continue
        bad = next((g for g in divisible if g.exponent(x) != 1), None)
        if bad is not None:
            reasons.append(f"{x}: generator {bad} has {x}-exponent {bad.exponent(x)}")
            continue
        var = Monomial.variable(x)
        quotient = MonomialIdeal(ideal.ambient, (g / var for g in divisible))
        remainder = MonomialIdeal(ideal.ambient, (g for g in gens if g.exponent(x) == 0))
        if not quotient.contains_ideal(remainder):
            reasons.append(f"{x}: remainder not contained in quotient ideal")
            continue
        ok1, t1, _ = _split_search(quotient, memo)
        if not ok1:
            reasons.append(f"{x}: quotient ideal not vertex splittable")
            continue
        ok2, t2, _ = _split_search(remainder, memo)
        if not ok2:
            reasons.append(f"{x}: remainder ideal not vertex splittable")
            continue
        tree = SplitNode(x, t1, t2)
        memo[key] = (True, tree)
        return True, tree, []
    memo[key] = (False, None)
    if not reasons:
        reasons.append("no variable divides any generator with exponent exactly 1")
    return False, None, reasons


def is_vertex_splittable(ideal: MonomialIdeal) -> VertexSplitResult:
    """Decide vertex splittability with a split tree or refutation reasons.

    Candidate split variables are tried in ambient order; the recursion is
    memoized on the canonical generator tuple.
    """
    ok, tree, reasons = _split_search(ideal, {})
    return VertexSplitResult(ok, tree, None if ok else tuple(reasons))


def verify_split_tree(ideal: MonomialIdeal, tree: SplitTree) -> bool:
    """Re-check the recursive split conditions for a claimed witness."""
    if isinstance(tree, SplitLeaf):
        expected = _leaf_for(ideal)
        return expected is not None and expected.kind == tree.kind
    x = tree.variable
    gens = ideal.generators
    divisible = [g for g in gens if g.exponent(x) > 0]
    if not divisible or any(g.exponent(x) != 1 for g in divisible):
        return False
    var = Monomial.variable(x)
    quotient = MonomialIdeal(ideal.ambient, (g / var for g in divisible))
    remainder = MonomialIdeal(ideal.ambient, (g for g in gens if g.exponent(x) == 0))
    if len(quotient.generators) != len(divisible):
        return False
    if len(remainder.generators) != len(gens) - len(divisible):
        return False
    if not quotient.contains_ideal(remainder):
        return False
    return verify_split_tree(quotient, tree.quotient) and verify_split_tree(remainder, tree.remainder)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self) -> bool:
        if self.left is None:
            return True
        self.left -= 1
        return self.left >= 0


def _quotient_search(ideal: MonomialIdeal, budget_limit: int | None):
    """Backtracking search for a linear-quotient order.

    Returns ("yes", order), ("no", None) for an exhaustive refutation, or
    ("unknown", None) if the node budget ran out.  Candidates are tried in
    canonical (degree-nondecreasing) order; failed prefix sets are memoized
    since extendability depends only on the prefix set.
    """
    vecs = ideal.exponent_vectors()
    m = len(vecs)
    if m <= 1:
        return "yes", tuple(range(m))
    # quotient[j][i] = exponent vector of g_j / gcd(g_j, g_i); when it is a
    # single variable x with exponent 1, x*g_i lies in (g_j), which is the
    # only way a variable can enter a colon ideal
    n = len(ideal.ambient)
    quot = [[None] * m for _ in range(m)]
    quot_supp = [[None] * m for _ in range(m)]
    unit_var = [[None] * m for _ in range(m)]
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            q = tuple(max(vecs[j][t] - vecs[i][t], 0) for t in range(n))
            quot[j][i] = q
            supp = tuple(t for t in range(n) if q[t])
            quot_supp[j][i] = supp
            if len(supp) == 1 and q[supp[0]] == 1:
                unit_var[j][i] = supp[0]

    budget = _Budget(budget_limit)
    failed: set[frozenset[int]] = set()
    order: list[int] = []

    def colon_ok(prefix: list[int], cand: int) -> bool:
        allowed = {unit_var[k][cand] for k in prefix}
        allowed.discard(None)
        return all(
            any(t in allowed for t in quot_supp[j][cand]) for j in prefix
        )

    class _Out(Exception):
        pass

    def extend(used: frozenset) -> bool:
        if len(order) == m:
            return True
        if used in failed:
            return False
        for cand in range(m):
            if cand in used:
                continue
            if not budget.spend():
                raise _Out
            if order and not colon_ok(order, cand):
                continue
            order.append(cand)
            if extend(used | {cand}):
                return True
            order.pop()
        failed.add(used)
        return False

    try:
        if extend(frozenset()):
            return "yes", tuple(order)
        return "no", None
    except _Out:
        return "unknown", None


def is_linear_quotient(ideal: MonomialIdeal) -> LinearQuotientResult:
    """Exact decision, with a witness generator order when one exists."""
    status, order = _quotient_search(ideal, None)
    return LinearQuotientResult(status == "yes", order)


def verify_quotient_order(ideal: MonomialIdeal, order: tuple[int, ...]) -> bool:
    """Check that successive colon ideals are generated by variables."""
    gens = ideal.generators
    if sorted(order) != list(range(len(gens))):
        return False
    for i in range(1, len(order)):
        prefix = MonomialIdeal(ideal.ambient, (gens[j] for j in order[:i]))
        col = prefix.colon(gens[order[i]])
        if not all(g.is_variable for g in col.generators):
            return False
    return True


def is_componentwise_linear(
    ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0)
) -> ComponentwiseResult:
    """Check d-linearity of every component from min to max generator degree.

    Each component is first attacked with a budgeted quotient-order search
    (sufficient when it succeeds); the Betti engine settles the rest.  The
    scan stops at the first non-linear component.
    """
    if ideal.is_zero:
        raise ValueError("componentwise-linearity test needs a nonzero ideal")
    reports = []
    overall = True
    for d in range(ideal.min_degree, ideal.max_degree + 1):
        component = ideal.component_ideal(d)
        if component.is_zero:
            reports.append(ComponentReport(d, 0, "zero", True, None))
            continue
        m = len(component.generators)
        status, _ = _quotient_search(component, max(500, 10 * m))
        if status == "yes":
            reports.append(ComponentReport(d, m, "linear-quotients", True, None))
            continue
        reg = betti_table(component, field).regularity()
        linear = reg == d
        reports.append(ComponentReport(d, m, "betti", linear, reg))
        if not linear:
            overall = False
            break
    return ComponentwiseResult(overall, tuple(reports))


def check_all(ideal: MonomialIdeal, field: FieldSpec = FieldSpec(0)) -> CheckAllResult:
    """Run all three deciders plus regularity and cross-check implications.

    An implication violation (vertex splittable without linear quotients,
    or linear quotients without componentwise linearity) indicates a bug
    in this package, never a counterexample; it is surfaced as a field in
    the result for the caller to escalate.
    """
    if ideal.is_zero:
        return CheckAllResult(
            componentwise_linear=True,
            linear_quotients=True,
            quotient_order=(),
            vertex_splittable=True,
            split_tree=SplitLeaf("zero"),
            regularity=None,
            max_generator_degree=None,
            components=(),
            implication_violation=None,
            conjecture_counterexample=False,
        )
    vs = is_vertex_splittable(ideal)
    lq = is_linear_quotient(ideal)
    cw = is_componentwise_linear(ideal, field)
    reg = betti_table(ideal, field).regularity()
    violation = None
    if vs.splittable and not lq.has_linear_quotients:
        violation = "vertex splittable but no linear quotients"
    elif lq.has_linear_quotients and not cw.componentwise_linear:
        violation = "linear quotients but not componentwise linear"
    counterexample = cw.componentwise_linear and not (
        lq.has_linear_quotients and vs.splittable
    )
    return CheckAllResult(
        componentwise_linear=cw.componentwise_linear,
        linear_quotients=lq.has_linear_quotients,
        quotient_order=lq.order,
        vertex_splittable=vs.splittable,
        split_tree=vs.tree,
        regularity=reg,
        max_generator_degree=ideal.max_degree,
        components=cw.components,
        implication_violation=violation,
        conjecture_counterexample=counterexample,
    )
