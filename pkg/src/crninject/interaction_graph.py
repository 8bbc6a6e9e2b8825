"""Signed interaction graphs and the nucleus-coherence criterion.

An interaction graph records the sign of each Jacobian entry of a
dynamical system: entry (j, i) is the label of the edge from node j to
node i.  Such a graph generates a family of inflow/outflow networks whose
injectivity is equivalent to all its maximal nuclei sharing one sign; a
square sign matrix whose determinant sign is forced by the pattern alone
(mSNS) is the special case where only inflow reactions are needed.

Note the sign convention for nuclei here differs from the species-reaction
graph engine: a circuit's sign is the product of its edge labels, and a
nucleus with p positive circuits has sign (-1)**(p+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import networkx as nx

from .errors import CrnInjectError, NetworkError
from .influence import InfluenceSpecification, sign_pattern
from .network import Network, make_network
from .sympoly import (
    MIXED,
    ZERO_TAG,
    SignedPolynomial,
    det_symbolic,
    sign_classify,
    var,
)


@dataclass(frozen=True)
class InteractionGraph:
    """Square sign matrix; entry (j, i) labels the edge j -> i."""

    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.signs)
        for row in self.signs:
            if len(row) != n:
                raise NetworkError("interaction graph matrix must be square")
            for x in row:
                if x not in (-1, 0, 1):
                    raise NetworkError(f"interaction graph entries must be -1, 0, +1, got {x}")

    @property
    def num_nodes(self) -> int:
        return len(self.signs)

    def edge(self, source: int, target: int) -> int:
        return self.signs[source - 1][target - 1]

    def nodes_with_incoming(self) -> tuple[int, ...]:
        n = self.num_nodes
        return tuple(
            i for i in range(1, n + 1)
            if any(self.signs[j - 1][i - 1] != 0 for j in range(1, n + 1))
        )

    def incoming(self, i: int) -> tuple[int, ...]:
        return tuple(
            j for j in range(1, self.num_nodes + 1) if self.signs[j - 1][i - 1] != 0
        )


def graph_from_rows(rows) -> InteractionGraph:
    return InteractionGraph(tuple(tuple(int(x) for x in row) for row in rows))


@dataclass(frozen=True)
class Partition:
    """Split of each in-neighborhood between inflow and outflow influence.

    For every node i with incoming edges, ``inflow_side[i]`` and
    ``outflow_side[i]`` partition its in-neighborhood: sources on the
    inflow side influence the production reaction of i, those on the
    outflow side influence its degradation reaction (with flipped sign).
    """

    inflow_side: Mapping[int, frozenset[int]]
    outflow_side: Mapping[int, frozenset[int]]


def default_partition(g: InteractionGraph) -> Partition:
    """All influence on the inflow reactions, none on the outflow ones."""
    h1 = {i: frozenset(g.incoming(i)) for i in g.nodes_with_incoming()}
    h2 = {i: frozenset() for i in g.nodes_with_incoming()}
    return Partition(h1, h2)


def network_from_graph(g: InteractionGraph, p: Partition | None = None
                       ) -> tuple[Network, InfluenceSpecification]:
    """Inflow/outflow network realizing the interaction graph.

    Every node with an incoming edge gets a production and a degradation
    reaction; the chosen partition decides which of the two carries each
    incoming influence.  A graph with no edges generates no reactions and
    is rejected.
    """
    if p is None:
        p = default_partition(g)
    targets = g.nodes_with_incoming()
    if not targets:
        raise NetworkError("no reactions: the interaction graph has no edges")
    n = g.num_nodes
    for i in targets:
        h = set(g.incoming(i))
        h1 = set(p.inflow_side.get(i, frozenset()))
        h2 = set(p.outflow_side.get(i, frozenset()))
        if h1 & h2:
            raise NetworkError(f"partition for node {i} is not disjoint")
        if h1 | h2 != h:
            extra = (h1 | h2) - h
            if extra:
                raise NetworkError(
                    f"partition for node {i} references nodes {sorted(extra)} "
                    "without an edge into it"
                )
            raise NetworkError(f"partition for node {i} does not cover its sources")

    names = [f"S{i}" for i in range(1, n + 1)]
    reactions = []
    rows = []
    for i in targets:
        # Production reaction 0 -> S_i.
        reactions.append(({}, {i: 1}))
        row = [0] * n
        for j in p.inflow_side.get(i, frozenset()):
            row[j - 1] = g.edge(j, i)
        rows.append(tuple(row))
        # Degradation reaction S_i -> 0.
        reactions.append(({i: 1}, {}))
        row = [0] * n
        for j in p.outflow_side.get(i, frozenset()):
            row[j - 1] = -g.edge(j, i)
        rows.append(tuple(row))
    labels = [f"r{k}" for k in range(1, len(reactions) + 1)]
    net = make_network(names, reactions, labels)
    infl = InfluenceSpecification(tuple(rows))
    return net, infl


NUCLEI_OK = "ok"
NUCLEI_MIXED = "mixed"
NUCLEI_NONE = "none"


@dataclass(frozen=True)
class NucleiVerdict:
    status: str  # ok | mixed | none
    sign: int | None
    count: int

    @property
    def coherent(self) -> bool:
        return self.status == NUCLEI_OK


def nuclei_verdict(g: InteractionGraph) -> NucleiVerdict:
    """Sign coherence of the maximal nuclei of the graph.

    Nuclei live on the subgraph induced by the nodes with incoming edges
    (others cannot sit on a circuit); a nucleus is a vertex-disjoint union
    of circuits covering all of them.  Status ``ok`` requires at least one
    nucleus and a common sign.
    """
    targets = g.nodes_with_incoming()
    s = len(targets)
    if s == 0:
        return NucleiVerdict(NUCLEI_NONE, None, 0)
    dg = nx.DiGraph()
    dg.add_nodes_from(targets)
    for j in targets:
        for i in targets:
            if g.edge(j, i) != 0:
                dg.add_edge(j, i)
    circuits = []
    for cycle in nx.simple_cycles(dg):
        mask = 0
        sign = 1
        for k, node in enumerate(cycle):
            succ = cycle[(k + 1) % len(cycle)]
            sign *= g.edge(node, succ)
            mask |= 1 << node
        circuits.append((mask, sign))
    circuits.sort()

    target_mask = 0
    for i in targets:
        target_mask |= 1 << i

    signs_seen: set[int] = set()
    count = 0

    def extend(start: int, mask: int, positives: int):
        nonlocal count
        if mask == target_mask:
            count += 1
            signs_seen.add(-1 if positives % 2 == 0 else 1)
            return
        for k in range(start, len(circuits)):
            cmask, csign = circuits[k]
            if cmask & mask:
                continue
            extend(k + 1, mask | cmask, positives + (1 if csign > 0 else 0))

    extend(0, 0, 0)
    if count == 0:
        return NucleiVerdict(NUCLEI_NONE, None, 0)
    if len(signs_seen) > 1:
        return NucleiVerdict(NUCLEI_MIXED, None, count)
    return NucleiVerdict(NUCLEI_OK, signs_seen.pop(), count)


def msns_check(g: InteractionGraph) -> bool:
    """Whether the sign pattern alone forces a non-zero determinant sign.

    Classifies the symbolic determinant of the matrix with entry
    sign(j, i) * z[j, i]; true exactly when the polynomial is non-zero
    and uniformly signed.
    """
    n = g.num_nodes
    entries = []
    for j in range(1, n + 1):
        row = []
        for i in range(1, n + 1):
            s = g.edge(j, i)
            row.append(
                SignedPolynomial.variable(var(j, i), coeff=s) if s
                else SignedPolynomial.zero()
            )
        entries.append(row)
    cls = sign_classify(det_symbolic(entries))
    return cls.tag not in (MIXED, ZERO_TAG)


def interaction_sign_matrix(net: Network, infl: InfluenceSpecification,
                            stoich=None) -> InteractionGraph:
    """Entrywise sign of the symbolic Jacobian factor, as a graph matrix.

    Every entry of the symbolic product A*Z must have a determinate sign;
    entries mixing positive and negative contributions are reported as an
    error, naming the offending (species row, species column) pairs.
    """
    from .network import build_stoich, conservation_analysis

    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    a = stoich.matrix
    zp = sign_pattern(infl)
    n = net.num_species
    m = net.num_reactions
    signs = [[0] * n for _ in range(n)]
    ambiguous = []
    for i in range(n):
        for j in range(n):
            acc = SignedPolynomial.zero()
            for u in range(m):
                if a[i][u]:
                    e = zp.entries[u][j]
                    if e:
                        acc = acc + e.scale(a[i][u])
            cls = sign_classify(acc)
            if cls.tag == MIXED:
                ambiguous.append((i + 1, j + 1))
            else:
                # Edge j -> i carries the sign of d f_i / d c_j.
                signs[j][i] = cls.delta or 0
    if ambiguous:
        pairs = ", ".join(f"({i},{j})" for i, j in ambiguous)
        raise CrnInjectError(
            f"Jacobian entries with sign-indeterminate linear forms: {pairs}"
        )
    return InteractionGraph(tuple(tuple(row) for row in signs))
