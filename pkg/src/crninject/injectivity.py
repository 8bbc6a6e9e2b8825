"""Injectivity criteria for interaction networks.

Every check reduces to sign analysis of the exact symbolic determinant of
the modified Jacobian factor, or of its minor-product decomposition.  A
verdict of ``injective`` precludes multiple positive (and non-overlapping
boundary) steady states for every kinetics in the covered family; the
degenerate verdict means the determinant vanishes identically, so every
positive steady state of every covered kinetics is degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import NetworkError, PreconditionError
from .influence import (
    InfluenceSpecification,
    SignPattern,
    influence_from_rows,
    influence_leq,
    reactant_restricted,
    reaction_influence,
    sign_pattern,
)
from .network import Network, StoichInfo, build_stoich, conservation_analysis
from .ratmat import Matrix, det as rat_det, rank as rat_rank, submatrix, to_fraction
from .sympoly import (
    ALL_NEGATIVE,
    ALL_POSITIVE,
    MIXED,
    ZERO_TAG,
    SignClass,
    SignedPolynomial,
    cauchy_binet_terms,
    det_symbolic,
    modified_matrix,
    sign_classify,
    var,
)

INJECTIVE = "injective"
NOT_INJECTIVE = "not_injective"
DEGENERATE = "all_steady_states_degenerate"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one injectivity criterion.

    ``kinetics_class`` names the kinetics family the verdict covers;
    ``witness`` carries the sign-classification evidence; ``notes`` names
    the criterion that produced the verdict.
    """

    result: str
    kinetics_class: str
    witness: SignClass | None = None
    notes: str = ""

    @property
    def injective(self) -> bool:
        return self.result == INJECTIVE


def _verdict_from_class(cls: SignClass, kinetics_class: str, notes: str) -> Verdict:
    if cls.tag in (ALL_POSITIVE, ALL_NEGATIVE):
        result = INJECTIVE
    elif cls.tag == ZERO_TAG:
        result = DEGENERATE
    else:
        result = NOT_INJECTIVE
    return Verdict(result, kinetics_class, cls, notes)


@dataclass(frozen=True)
class KineticOrder:
    """Per-reaction exponent vectors of a power-law kinetics (exact)."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "KineticOrder":
        return KineticOrder(tuple(tuple(to_fraction(x) for x in row) for row in rows))

    @staticmethod
    def mass_action(net: Network) -> "KineticOrder":
        rows = []
        for r in net.reactions:
            rows.append(tuple(r.reactant.coefficient(s.id) for s in net.species))
        return KineticOrder(tuple(rows))

    @property
    def num_reactions(self) -> int:
        return len(self.entries)

    @property
    def num_species(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def influence(self) -> InfluenceSpecification:
        """Associated influence: the entrywise sign structure."""
        return influence_from_rows(
            tuple(tuple(1 if x > 0 else (-1 if x < 0 else 0) for x in row) for row in self.entries)
        )

    def magnitude_assignment(self) -> dict[int, Fraction]:
        """Map each non-zero entry's variable id to its absolute value."""
        out = {}
        for i, row in enumerate(self.entries, start=1):
            for j, x in enumerate(row, start=1):
                if x:
                    out[var(i, j)] = abs(x)
        return out

    def matrix(self) -> Matrix:
        return [list(row) for row in self.entries]

    def restrict(self, reaction_ids: Sequence[int]) -> "KineticOrder":
        return KineticOrder(tuple(self.entries[rid - 1] for rid in sorted(reaction_ids)))


def check_order_consistency(order: KineticOrder, infl: InfluenceSpecification) -> None:
    """Require sign(order entry) == influence entry everywhere."""
    if (order.num_reactions, order.num_species) != (infl.num_reactions, infl.num_species):
        raise NetworkError("kinetic order and influence have mismatched dimensions")
    for i in range(1, order.num_reactions + 1):
        for j in range(1, order.num_species + 1):
            x = order.entries[i - 1][j - 1]
            s = 1 if x > 0 else (-1 if x < 0 else 0)
            if s != infl.sign(i, j):
                raise NetworkError(
                    f"kinetic order sign at reaction {i}, species {j} is {s}, "
                    f"inconsistent with influence {infl.sign(i, j)}"
                )


def determinant_polynomial(net: Network, infl: InfluenceSpecification,
                           stoich: StoichInfo | None = None) -> SignedPolynomial:
    """Symbolic determinant of the modified Jacobian factor for an influence."""
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    return det_symbolic(modified_matrix(stoich, sign_pattern(infl)))


def has_signed_determinant(net: Network, infl: InfluenceSpecification,
                           stoich: StoichInfo | None = None) -> tuple[bool, int]:
    """Whether the determinant sign is constant over all magnitudes.

    Returns ``(signed, delta)`` with delta the common sign (0 when the
    polynomial vanishes identically, and also 0 when not signed).
    """
    cls = sign_classify(determinant_polynomial(net, infl, stoich))
    if cls.tag == MIXED:
        return False, 0
    return True, cls.delta or 0


_SNS_CLASS = "all kinetics strictly monotonic / differentiable / power-law for the influence"


def check_sns(net: Network, infl: InfluenceSpecification,
              stoich: StoichInfo | None = None) -> Verdict:
    """Master criterion: sign-nonsingularity of the symbolic determinant.

    Injective exactly when every monomial coefficient of the determinant
    shares one non-zero sign; the verdict then covers every kinetics that
    is strictly monotonic with respect to the influence.
    """
    cls = sign_classify(determinant_polynomial(net, infl, stoich))
    return _verdict_from_class(cls, _SNS_CLASS, "sign-nonsingular symbolic determinant")


@dataclass(frozen=True)
class FixedOrderVerdict(Verdict):
    """Verdict for one fixed kinetic order, with the offending minor pairs.

    ``products`` holds every non-zero minor product, keyed by (species set,
    reaction set); for a not-injective verdict ``positive_pair`` and
    ``negative_pair`` name two products of opposite sign.
    """

    products: tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], Fraction], ...] = ()
    positive_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    negative_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def fixed_order_products(net: Network, order: KineticOrder,
                         stoich: StoichInfo | None = None):
    """All non-zero exact products det(A[J,C]) * det(Zv[C,J]) at a fixed order."""
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    a = stoich.matrix
    n, m, s = len(a), net.num_reactions, stoich.rank
    zv = order.matrix()
    products = []
    for c_set in combinations(range(m), s):
        for j_set in combinations(range(n), s):
            a_minor = rat_det(submatrix(a, j_set, c_set))
            if a_minor == 0:
                continue
            z_minor = rat_det([[zv[i][j] for j in j_set] for i in c_set])
            if z_minor == 0:
                continue
            key = (tuple(j + 1 for j in j_set), tuple(i + 1 for i in c_set))
            products.append((key, a_minor * z_minor))
    return products


_FIXED_CLASS = "power-law kinetics with the given kinetic order, over all rate constants"


def check_fixed_order(net: Network, order: KineticOrder,
                      stoich: StoichInfo | None = None) -> FixedOrderVerdict:
    """Injectivity over all rate constants for one fixed kinetic order.

    The network is injective exactly when the non-zero minor products share
    one sign and at least one is non-zero; all products zero means the
    modified Jacobian determinant vanishes identically.
    """
    if order.num_reactions != net.num_reactions or order.num_species != net.num_species:
        raise NetworkError("kinetic order dimensions do not match the network")
    products = fixed_order_products(net, order, stoich)
    notes = "determinant sign test over minor products"
    pos = [key for key, value in products if value > 0]
    neg = [key for key, value in products if value < 0]
    if not products:
        cls = SignClass(ZERO_TAG, ())
        return FixedOrderVerdict(DEGENERATE, _FIXED_CLASS, cls, notes, tuple(products))
    if pos and neg:
        witness = SignClass(MIXED, _product_witnesses(products))
        return FixedOrderVerdict(
            NOT_INJECTIVE, _FIXED_CLASS, witness, notes, tuple(products),
            positive_pair=pos[0], negative_pair=neg[0],
        )
    tag = ALL_POSITIVE if pos else ALL_NEGATIVE
    witness = SignClass(tag, _product_witnesses(products))
    return FixedOrderVerdict(INJECTIVE, _FIXED_CLASS, witness, notes, tuple(products))


def _product_witnesses(products) -> tuple[tuple[int, object], ...]:
    """Sign-class witnesses encoded as monomial masks over (C, J) variables."""
    pos = next(((k, v) for k, v in products if v > 0), None)
    neg = next(((k, v) for k, v in products if v < 0), None)
    out = []
    for item in (pos, neg):
        if item is None:
            continue
        (j_set, c_set), value = item
        mask = 0
        for i, j in zip(c_set, j_set):
            mask |= 1 << var(i, j)
        out.append((mask, value))
    return tuple(out)


def fixed_order_determinant(net: Network, order: KineticOrder,
                            stoich: StoichInfo | None = None
                            ) -> dict[tuple[int, ...], dict[tuple[Fraction, ...], Fraction]]:
    """Exact expansion of the modified Jacobian determinant at a fixed order.

    The determinant is linear in each rate constant: for each reaction set
    C of size s, the coefficient of the rate-constant monomial over C is a
    finite sum of concentration powers.  Returned as
    ``{C: {exponent vector: coefficient}}`` with every entry exact, which
    gives a monomial-for-monomial normal form of the determinant.
    """
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    a = stoich.matrix
    n, m, s = len(a), net.num_reactions, stoich.rank
    zv = order.matrix()
    out: dict[tuple[int, ...], dict[tuple[Fraction, ...], Fraction]] = {}
    for c_set in combinations(range(m), s):
        offset = [Fraction(-1)] * n
        for i in c_set:
            for j in range(n):
                offset[j] += zv[i][j]
        bucket: dict[tuple[Fraction, ...], Fraction] = {}
        for j_set in combinations(range(n), s):
            a_minor = rat_det(submatrix(a, j_set, c_set))
            if a_minor == 0:
                continue
            z_minor = rat_det([[zv[i][j] for j in j_set] for i in c_set])
            if z_minor == 0:
                continue
            expo = list(offset)
            for j in range(n):
                if j not in j_set:
                    expo[j] += 1
            key = tuple(expo)
            val = bucket.get(key, Fraction(0)) + a_minor * z_minor
            if val:
                bucket[key] = val
            else:
                bucket.pop(key, None)
        if bucket:
            out[tuple(i + 1 for i in c_set)] = bucket
    return out


_UNION_CLASS = "all kinetics strictly monotonic for an influence between the given bounds"


def check_bounded_union(net: Network, lower: InfluenceSpecification,
                        upper: InfluenceSpecification,
                        stoich: StoichInfo | None = None) -> Verdict:
    """Injectivity over the union of families between two ordered influences.

    Holds exactly when the upper influence has a signed determinant and the
    determinant does not vanish at the lower influence (equivalently: both
    endpoints pass the sign-nonsingularity check).
    """
    if not influence_leq(lower, upper):
        raise PreconditionError("lower influence is not below the upper influence")
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    p_upper = determinant_polynomial(net, upper, stoich)
    cls_upper = sign_classify(p_upper)
    notes = "signed determinant at the upper bound, non-vanishing at the lower bound"
    if cls_upper.tag == MIXED:
        return Verdict(NOT_INJECTIVE, _UNION_CLASS, cls_upper, notes)
    # Zero the variables absent from the lower influence; what remains is
    # the lower influence's determinant polynomial.
    dead = [
        var(i, j)
        for i in range(1, upper.num_reactions + 1)
        for j in range(1, upper.num_species + 1)
        if upper.sign(i, j) != 0 and lower.sign(i, j) == 0
    ]
    cls_lower = sign_classify(p_upper.zero_variables(dead))
    if cls_lower.tag == ZERO_TAG:
        return Verdict(DEGENERATE, _UNION_CLASS, cls_lower, notes)
    return Verdict(INJECTIVE, _UNION_CLASS, cls_lower, notes)


_WEAK_CLASS = "all kinetics weakly monotonic for the influence"


def check_weakly_monotonic(net: Network, infl: InfluenceSpecification,
                           stoich: StoichInfo | None = None) -> Verdict:
    """Injectivity over weakly monotonic kinetics.

    Equivalent to injectivity over the interval of influences between the
    reactant-restricted influence and the influence itself.  Requires every
    reactant species to carry a non-zero influence on its reaction.
    """
    for r in net.reactions:
        missing = [j for j in sorted(r.reactant.support) if infl.sign(r.id, j) == 0]
        if missing:
            names = ", ".join(net.species[j - 1].name for j in missing)
            raise PreconditionError(
                f"reaction {r.label or r.id}: reactant species {names} have zero "
                "influence, outside the scope of the weakly monotonic criterion"
            )
    lower = reactant_restricted(infl, net)
    inner = check_bounded_union(net, lower, infl, stoich)
    return Verdict(inner.result, _WEAK_CLASS, inner.witness,
                   "reactant-restricted interval reduction: " + inner.notes)


SKIPPED = "skipped"
ONLY_DEGENERATE = "only_degenerate"


@dataclass(frozen=True)
class RestrictionVerdict:
    """Classification of one size-s reaction subset."""

    reaction_ids: tuple[int, ...]
    result: str  # injective | only_degenerate | skipped
    detail: str = ""


def analyze_restrictions(net: Network, infl: InfluenceSpecification,
                         stoich: StoichInfo | None = None,
                         cap: int = 10 ** 5) -> Iterator[RestrictionVerdict]:
    """Classify every restriction to s reactions of an injective network.

    For each reaction subset of size s whose columns still span an
    s-dimensional space, the restricted network is injective with only
    non-degenerate steady states when some minor product survives, and has
    only degenerate steady states when all products vanish.  Rank-deficient
    subsets fall outside the dichotomy and are skipped.
    """
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    base = check_sns(net, infl, stoich)
    if not base.injective:
        raise PreconditionError(
            "restriction analysis requires the full network to be injective "
            f"for the influence (got {base.result})"
        )
    a = stoich.matrix
    n, m, s = len(a), net.num_reactions, stoich.rank
    from math import comb

    total = comb(m, s)
    if total > cap:
        raise PreconditionError(
            f"{total} reaction subsets exceed the cap of {cap}; raise the cap to proceed"
        )
    zp = sign_pattern(infl)
    for c_set in combinations(range(m), s):
        ids = tuple(i + 1 for i in c_set)
        cols = submatrix(a, range(n), c_set)
        r = rat_rank(cols)
        if r < s:
            yield RestrictionVerdict(
                ids, SKIPPED,
                f"restricted stoichiometric dimension {r} < {s}; dichotomy does not apply",
            )
            continue
        found = False
        for j_set in combinations(range(n), s):
            a_minor = rat_det(submatrix(a, j_set, c_set))
            if a_minor == 0:
                continue
            z_minor = det_symbolic([[zp.entries[i][j] for j in j_set] for i in c_set])
            if not z_minor.is_zero():
                found = True
                break
        if found:
            yield RestrictionVerdict(ids, INJECTIVE, "non-degenerate steady states")
        else:
            yield RestrictionVerdict(ids, ONLY_DEGENERATE, "all minor products vanish")


@dataclass(frozen=True)
class PMatrixReport:
    """Result of the principal-minor route to injectivity.

    ``p_matrix_for_all_orders`` states whether, after reordering species
    (zero-influence species first) and flipping the sign of the species
    rows, every principal minor of the modified matrix is a polynomial
    with exclusively positive coefficients.  The equivalence with the
    determinant criterion is only guaranteed when the influence lies below
    the reaction-dependent one (``hypothesis_met``); outside that range
    the principal-minor test can fail on an injective network.
    ``minor_condition_holds`` reports the stricter all-dimensions minor
    condition used by the open-network route; it too can fail while the
    network is injective.
    """

    verdict: Verdict
    hypothesis_met: bool
    p_matrix_for_all_orders: bool
    species_order: tuple[int, ...]
    failing_minor: tuple[int, ...] | None
    minor_condition_holds: bool
    minor_condition_violation: tuple[int, tuple[int, ...], tuple[int, ...]] | None
    agrees_with_determinant_criterion: bool


def _pmatrix_species_order(net: Network, infl: InfluenceSpecification) -> list[int]:
    """Zero-influence species first (ascending), then the rest (ascending)."""
    zero_influence = [
        s.id for s in net.species
        if all(infl.sign(r.id, s.id) == 0 for r in net.reactions)
    ]
    rest = [s.id for s in net.species if s.id not in zero_influence]
    return zero_influence + rest


def check_p_matrix(net: Network, infl: InfluenceSpecification,
                   stoich: StoichInfo | None = None) -> PMatrixReport:
    """Principal-minor (P-matrix) characterization of injectivity.

    Builds the modified matrix in the order that puts zero-influence
    species first, negates the species rows, and classifies every
    principal minor symbolically.  Also evaluates the minor condition of
    the open-network route for comparison.  The equivalence with the
    determinant criterion holds when the influence lies below the
    reaction-dependent influence; the test still runs (and the report
    flags the unmet hypothesis) otherwise.
    """
    hypothesis_met = influence_leq(infl, reaction_influence(net))
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    verdict = check_sns(net, infl, stoich)

    # Reorder species: zero-influence ones first, then re-run the
    # conservation analysis on the permuted matrix so a reduced basis
    # exists for the combined order.
    pre_order = _pmatrix_species_order(net, infl)
    a = stoich.matrix
    a_perm = [a[idx - 1] for idx in pre_order]
    inner = conservation_analysis(a_perm)
    order = tuple(pre_order[p - 1] for p in inner.species_order)

    n = len(a)
    d = inner.num_conservation_laws
    # The species occupying positions d+1..n must each influence a reaction.
    tail_ok = all(
        any(infl.sign(r.id, order[pos]) != 0 for r in net.reactions)
        for pos in range(d, n)
    )

    zp = sign_pattern(infl)
    mm = modified_matrix(
        StoichInfo(a, inner.rank,
                   species_order=order,
                   conservation_laws=inner.conservation_laws),
        zp,
    )
    hat = [row[:] for row in mm]
    for p in range(d, n):
        hat[p] = [-e for e in hat[p]]

    p_matrix = tail_ok
    failing: tuple[int, ...] | None = None
    if tail_ok:
        for size in range(1, n + 1):
            for subset in combinations(range(n), size):
                minor = det_symbolic([[hat[p][q] for q in subset] for p in subset])
                if sign_classify(minor).tag != ALL_POSITIVE:
                    p_matrix = False
                    failing = tuple(q + 1 for q in subset)
                    break
            if not p_matrix:
                break

    minor_ok, violation = _banaji_minor_condition(stoich, zp)
    return PMatrixReport(
        verdict=verdict,
        hypothesis_met=hypothesis_met,
        p_matrix_for_all_orders=p_matrix,
        species_order=order,
        failing_minor=failing,
        minor_condition_holds=minor_ok,
        minor_condition_violation=violation,
        agrees_with_determinant_criterion=(p_matrix == verdict.injective),
    )


def _banaji_minor_condition(stoich: StoichInfo, zp: SignPattern):
    """Sign condition on all square minor products of A and Z.

    Requires (-1)^k * det(Z[C,J]) * det(A[J,C]) to be non-negative for
    every minor size k and all index sets of that cardinality, which makes
    the negated Jacobian a P0-matrix.  Checked symbolically: the product
    polynomial must be zero or uniformly signed with the prescribed sign.
    """
    a = stoich.matrix
    n = len(a)
    m = len(a[0]) if a else 0
    for k in range(n, 0, -1):
        want = ALL_POSITIVE if k % 2 == 0 else ALL_NEGATIVE
        for c_set in combinations(range(m), k):
            for j_set in combinations(range(n), k):
                a_minor = rat_det(submatrix(a, j_set, c_set))
                if a_minor == 0:
                    continue
                z_minor = det_symbolic(
                    [[zp.entries[i][j] for j in j_set] for i in c_set]
                )
                tag = sign_classify(z_minor.scale(a_minor)).tag
                if tag not in (ZERO_TAG, want):
                    return False, (k, tuple(j + 1 for j in j_set), tuple(i + 1 for i in c_set))
    return True, None
