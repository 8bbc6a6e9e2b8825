"""Bipartite species-reaction graph engine.

The graph has a directed edge from a species to every reaction it
influences (labeled with the signed magnitude variable) and from a
reaction to every species whose net stoichiometry it changes (labeled
with the rational net coefficient).  Summing signed labels over all
vertex-disjoint circuit collections that cover s species nodes recomputes
the symbolic determinant, term for term, independently of the Laplace
engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .errors import CircuitCapExceeded, CrnInjectError
from .influence import InfluenceSpecification, sign_pattern
from .network import Network, StoichInfo, build_stoich, conservation_analysis
from .sympoly import SignedPolynomial, var

SPECIES = "S"
REACTION = "r"


@dataclass(frozen=True)
class DsrGraph:
    """Labeled bipartite digraph between species and reaction nodes.

    ``species_edges`` maps (species, reaction) to the influence sign;
    ``reaction_edges`` maps (reaction, species) to the net stoichiometric
    coefficient.  Node ids are 1-based.
    """

    num_species: int
    num_reactions: int
    species_edges: tuple[tuple[int, int, int], ...]  # (species, reaction, sign)
    reaction_edges: tuple[tuple[int, int, Fraction], ...]  # (reaction, species, coeff)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for j in range(1, self.num_species + 1):
            g.add_node((SPECIES, j))
        for u in range(1, self.num_reactions + 1):
            g.add_node((REACTION, u))
        for j, u, sign in self.species_edges:
            g.add_edge((SPECIES, j), (REACTION, u), sign=sign, vid=var(u, j))
        for u, j, coeff in self.reaction_edges:
            g.add_edge((REACTION, u), (SPECIES, j), coeff=coeff)
        return g


def build_dsr(net: Network, infl: InfluenceSpecification,
              stoich: StoichInfo | None = None) -> DsrGraph:
    """Construct the graph from the influence signs and the stoichiometry."""
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    a = stoich.matrix
    sp_edges = []
    for j in range(1, net.num_species + 1):
        for u in range(1, net.num_reactions + 1):
            s = infl.sign(u, j)
            if s:
                sp_edges.append((j, u, s))
    rx_edges = []
    for u in range(1, net.num_reactions + 1):
        for j in range(1, net.num_species + 1):
            c = a[j - 1][u - 1]
            if c:
                rx_edges.append((u, j, c))
    return DsrGraph(net.num_species, net.num_reactions, tuple(sp_edges), tuple(rx_edges))


@dataclass(frozen=True)
class Circuit:
    """A simple cycle, alternating species and reaction nodes.

    ``label`` is the product of edge labels with the circuit sign applied
    (negative when the species count is even).  The node masks support
    fast disjointness tests when assembling nuclei.
    """

    nodes: tuple[tuple[str, int], ...]
    species_count: int
    label: SignedPolynomial
    species_mask: int
    reaction_mask: int

    def disjoint(self, other: "Circuit") -> bool:
        return not (self.species_mask & other.species_mask
                    or self.reaction_mask & other.reaction_mask)


def _canonical_rotation(nodes: list[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    k = nodes.index(min(nodes))
    return tuple(nodes[k:] + nodes[:k])


def enumerate_circuits(graph: DsrGraph, max_circuits: int = 100_000,
                       species_cap: int | None = None) -> list[Circuit]:
    """All simple circuits, with signed labels, grouped deterministically.

    ``species_cap`` bounds the number of species nodes per circuit (longer
    circuits cannot enter an s-species nucleus, so the determinant engine
    prunes them).  Raises when more than ``max_circuits`` circuits exist.
    """
    g = graph.to_networkx()
    bound = None if species_cap is None else 2 * species_cap
    circuits = []
    count = 0
    for cycle in nx.simple_cycles(g, length_bound=bound):
        count += 1
        if count > max_circuits:
            raise CircuitCapExceeded(max_circuits, count - 1)
        circuits.append(_make_circuit(g, cycle))
    circuits.sort(key=lambda c: (c.species_count, c.nodes))
    return circuits


def _make_circuit(g: nx.DiGraph, cycle: list[tuple[str, int]]) -> Circuit:
    nodes = _canonical_rotation(cycle)
    species = [n[1] for n in nodes if n[0] == SPECIES]
    coeff = Fraction(1)
    mask = 0
    smask = rmask = 0
    for k, node in enumerate(nodes):
        succ = nodes[(k + 1) % len(nodes)]
        data = g.edges[node, succ]
        if node[0] == SPECIES:
            coeff *= data["sign"]
            mask |= 1 << data["vid"]
            smask |= 1 << node[1]
        else:
            coeff *= data["coeff"]
            rmask |= 1 << node[1]
    # Circuit sign: -1 when the number of species nodes is even.
    if len(species) % 2 == 0:
        coeff = -coeff
    return Circuit(
        nodes=nodes,
        species_count=len(species),
        label=SignedPolynomial({mask: coeff}),
        species_mask=smask,
        reaction_mask=rmask,
    )


def nucleus_determinant(graph: DsrGraph, s: int,
                        max_circuits: int = 100_000) -> SignedPolynomial:
    """Determinant terms recomputed from vertex-disjoint circuit collections.

    Combines disjoint circuits whose species counts sum to s (discarding
    any combination that repeats a species or reaction node) and merges
    monomials.  Agrees exactly with the symbolic Laplace determinant of
    the modified matrix.
    """
    if s == 0:
        return SignedPolynomial.constant(1)
    circuits = [c for c in enumerate_circuits(graph, max_circuits, species_cap=s)
                if 0 < c.species_count <= s]
    total = SignedPolynomial.zero()

    def extend(start: int, remaining: int, smask: int, rmask: int,
               label: SignedPolynomial):
        nonlocal total
        if remaining == 0:
            total = total + label
            return
        for k in range(start, len(circuits)):
            c = circuits[k]
            if c.species_count > remaining:
                continue
            if smask & c.species_mask or rmask & c.reaction_mask:
                continue
            extend(k + 1, remaining - c.species_count,
                   smask | c.species_mask, rmask | c.reaction_mask,
                   label * c.label)

    extend(0, s, 0, 0, SignedPolynomial.constant(1))
    return total


def export_dot(graph: DsrGraph) -> str:
    """Deterministic Graphviz rendering of the graph.

    Species are ellipses, reactions are boxes; edges whose label is
    negative are dashed, mirroring the usual convention for inhibiting
    influences.  Layout is left to Graphviz.
    """
    lines = ["digraph dsr {"]
    for j in range(1, graph.num_species + 1):
        lines.append(f'  S{j} [shape=ellipse];')
    for u in range(1, graph.num_reactions + 1):
        lines.append(f'  r{u} [shape=box];')
    for j, u, sign in sorted(graph.species_edges):
        label = f"z[{u},{j}]" if sign > 0 else f"-z[{u},{j}]"
        style = ', style=dashed' if sign < 0 else ""
        lines.append(f'  S{j} -> r{u} [label="{label}"{style}];')
    for u, j, coeff in sorted(graph.reaction_edges):
        style = ', style=dashed' if coeff < 0 else ""
        lines.append(f'  r{u} -> S{j} [label="{coeff}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
