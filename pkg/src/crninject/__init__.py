"""Exact injectivity analysis of interaction networks.

Decides whether a reaction network with an influence specification is
injective (and therefore cannot exhibit multiple positive steady states)
over families of kinetics, via sign analysis of the exact symbolic
determinant of the modified Jacobian, with a species-reaction graph engine
and a numeric oracle as independent cross-checks.
"""

from .errors import (
    CircuitCapExceeded,
    CrnInjectError,
    EvaluationDomainError,
    NetworkError,
    ParseError,
    PreconditionError,
)
from .network import (
    Complex,
    Network,
    Reaction,
    Species,
    StoichInfo,
    build_stoich,
    conservation_analysis,
    make_network,
    restrict_network,
)
from .influence import (
    InfluenceSpecification,
    SignPattern,
    complex_influence,
    influence_from_rows,
    influence_leq,
    lint_reactant_coverage,
    reactant_restricted,
    reaction_influence,
    sign_pattern,
)
from .sympoly import (
    SignClass,
    SignedPolynomial,
    cauchy_binet_sum,
    cauchy_binet_terms,
    det_symbolic,
    modified_matrix,
    sign_classify,
    specialize,
    var,
)
from .injectivity import (
    KineticOrder,
    PMatrixReport,
    RestrictionVerdict,
    Verdict,
    analyze_restrictions,
    check_bounded_union,
    check_fixed_order,
    check_p_matrix,
    check_sns,
    check_weakly_monotonic,
    determinant_polynomial,
    fixed_order_determinant,
    has_signed_determinant,
)
from .dsr import Circuit, DsrGraph, build_dsr, enumerate_circuits, export_dot, nucleus_determinant
from .interaction_graph import (
    InteractionGraph,
    NucleiVerdict,
    Partition,
    default_partition,
    graph_from_rows,
    interaction_sign_matrix,
    msns_check,
    network_from_graph,
    nuclei_verdict,
)
from .oracle import (
    AgreementReport,
    CounterexampleWitness,
    HillKinetics,
    PowerLawKinetics,
    counterexample_search,
    eval_jacobian_det,
    eval_rate_function,
    hill_transfer,
    power_law_from_hill,
    symbolic_numeric_agreement,
)
from .parser import format_network, parse_influence, parse_kinetic_order, parse_network

__version__ = "0.1.0"
