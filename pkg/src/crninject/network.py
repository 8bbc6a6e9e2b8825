"""Reaction networks, their stoichiometric matrix and conservation laws.

A network is a finite species list together with ordered reactions between
complexes (formal non-negative rational combinations of species).  All
values are immutable after construction and all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NetworkError
from .ratmat import Matrix, left_null_space, rank, to_fraction


@dataclass(frozen=True)
class Species:
    """A named species with a 1-based index."""

    id: int
    name: str


@dataclass(frozen=True)
class Complex:
    """Formal combination of species, e.g. the two sides of a reaction.

    Stored as a canonical sorted tuple of ``(species_index, coefficient)``
    pairs with positive coefficients; the zero complex is the empty tuple.
    """

    terms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_dict(coeffs: Mapping[int, object]) -> "Complex":
        items = []
        for idx, c in coeffs.items():
            f = to_fraction(c)
            if f < 0:
                raise NetworkError(f"negative stoichiometric coefficient for species {idx}")
            if f != 0:
                items.append((int(idx), f))
        return Complex(tuple(sorted(items)))

    def coefficient(self, species_index: int) -> Fraction:
        for idx, c in self.terms:
            if idx == species_index:
                return c
        return Fraction(0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(idx for idx, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def format(self, species_names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, c in self.terms:
            name = species_names[idx - 1]
            parts.append(name if c == 1 else f"{c} {name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Reaction:
    """A single reaction ``reactant -> product`` with a 1-based index."""

    id: int
    reactant: Complex
    product: Complex
    label: str = ""

    def __post_init__(self):
        if self.reactant == self.product:
            raise NetworkError(
                f"reaction {self.label or self.id}: reactant equals product, "
                "which is not a valid reaction"
            )


@dataclass(frozen=True)
class Network:
    """An ordered species list and an ordered reaction list."""

    species: tuple[Species, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self):
        names = [s.name for s in self.species]
        if len(set(names)) != len(names):
            raise NetworkError("species names are not unique")
        for pos, s in enumerate(self.species, start=1):
            if s.id != pos:
                raise NetworkError(f"species indices must be contiguous from 1, got {s.id} at position {pos}")
        for pos, r in enumerate(self.reactions, start=1):
            if r.id != pos:
                raise NetworkError(f"reaction indices must be contiguous from 1, got {r.id} at position {pos}")
            for cx in (r.reactant, r.product):
                for idx, _ in cx.terms:
                    if not 1 <= idx <= len(self.species):
                        raise NetworkError(
                            f"reaction {r.label or r.id} references species index {idx} "
                            f"outside 1..{len(self.species)}"
                        )

    @property
    def num_species(self) -> int:
        return len(self.species)

    @property
    def num_reactions(self) -> int:
        return len(self.reactions)

    def species_names(self) -> list[str]:
        return [s.name for s in self.species]

    def complexes(self) -> list[Complex]:
        """Distinct complexes in order of first appearance (derived, not stored)."""
        seen: list[Complex] = []
        for r in self.reactions:
            for cx in (r.reactant, r.product):
                if cx not in seen:
                    seen.append(cx)
        return seen


def make_network(species_names: Sequence[str],
                 reactions: Iterable[tuple[Mapping[int, object], Mapping[int, object]]],
                 labels: Sequence[str] | None = None) -> Network:
    """Convenience constructor from name list and (reactant, product) dicts."""
    species = tuple(Species(i + 1, n) for i, n in enumerate(species_names))
    rx = []
    for pos, (lo, hi) in enumerate(reactions, start=1):
        label = labels[pos - 1] if labels else f"r{pos}"
        rx.append(Reaction(pos, Complex.from_dict(lo), Complex.from_dict(hi), label))
    return Network(species, tuple(rx))


def build_stoich(net: Network) -> Matrix:
    """Stoichiometric matrix: column i is product minus reactant of reaction i."""
    n, m = net.num_species, net.num_reactions
    a = [[Fraction(0)] * m for _ in range(n)]
    for r in net.reactions:
        col = r.id - 1
        for idx, c in r.product.terms:
            a[idx - 1][col] += c
        for idx, c in r.reactant.terms:
            a[idx - 1][col] -= c
    return a


@dataclass(frozen=True)
class StoichInfo:
    """Stoichiometric matrix together with its conservation structure.

    ``species_order`` is the permutation of 1..n (new position -> original
    index) under which ``conservation_laws`` is a reduced basis of the left
    null space: its leading d x d block is the identity.  The basis vectors
    are expressed in the permuted order.  ``rank`` is the dimension of the
    stoichiometric subspace.
    """

    matrix: Matrix
    rank: int
    species_order: tuple[int, ...]
    conservation_laws: tuple[tuple[Fraction, ...], ...]

    @property
    def num_species(self) -> int:
        return len(self.matrix)

    @property
    def num_conservation_laws(self) -> int:
        return self.num_species - self.rank

    def conservation_laws_input_order(self) -> list[list[Fraction]]:
        """Conservation law vectors re-expressed in the original species order."""
        n = self.num_species
        out = []
        for w in self.conservation_laws:
            v = [Fraction(0)] * n
            for pos, orig in enumerate(self.species_order):
                v[orig - 1] = w[pos]
            out.append(v)
        return out


def conservation_analysis(a: Matrix) -> StoichInfo:
    """Rank, canonical species reordering, and reduced conservation-law basis.

    The left null space of the stoichiometric matrix is row-reduced; its
    pivot columns, in ascending order, are moved to the front.  That makes
    the choice of reordering deterministic and the returned basis reduced
    (leading identity block).  A full-rank matrix yields the identity order
    and an empty basis.
    """
    n = len(a)
    basis = left_null_space(a)
    if not basis:
        return StoichInfo(
            matrix=a,
            rank=rank(a),
            species_order=tuple(range(1, n + 1)),
            conservation_laws=(),
        )
    # left_null_space already returns RREF rows; pivots are the first
    # non-zero column of each row.
    pivots = []
    for row in basis:
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
    order = pivots + [j for j in range(n) if j not in pivots]
    permuted = tuple(tuple(row[j] for j in order) for row in basis)
    return StoichInfo(
        matrix=a,
        rank=n - len(basis),
        species_order=tuple(j + 1 for j in order),
        conservation_laws=permuted,
    )


def restrict_network(net: Network, reaction_ids: Iterable[int]) -> Network:
    """Restriction to a reaction subset: same species, filtered reactions.

    Reactions keep their relative order and original labels but are
    re-indexed contiguously.
    """
    wanted = sorted(set(reaction_ids))
    if not wanted:
        raise NetworkError("empty restriction: at least one reaction id is required")
    for rid in wanted:
        if not 1 <= rid <= net.num_reactions:
            raise NetworkError(f"reaction id {rid} outside 1..{net.num_reactions}")
    picked = [net.reactions[rid - 1] for rid in wanted]
    rx = tuple(
        Reaction(pos, r.reactant, r.product, r.label) for pos, r in enumerate(picked, start=1)
    )
    return Network(net.species, rx)
