"""Influence specifications: per-reaction sign maps over the species.

An influence specification records, for every reaction and species, whether
increasing the species concentration enhances (+1), inhibits (-1), or does
not affect (0) the reaction rate.  It determines which kinetics families an
injectivity verdict covers, and its symbolic sign pattern is the input to
the determinant engine.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import NetworkError
from .network import Network
from .sympoly import SignedPolynomial, var


@dataclass(frozen=True)
class InfluenceSpecification:
    """Sign matrix with one row per reaction and one column per species."""

    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.signs:
            for x in row:
                if x not in (-1, 0, 1):
                    raise NetworkError(f"influence entries must be -1, 0 or +1, got {x}")

    @property
    def num_reactions(self) -> int:
        return len(self.signs)

    @property
    def num_species(self) -> int:
        return len(self.signs[0]) if self.signs else 0

    def sign(self, reaction_id: int, species_id: int) -> int:
        return self.signs[reaction_id - 1][species_id - 1]

    def positive_support(self, reaction_id: int) -> frozenset[int]:
        row = self.signs[reaction_id - 1]
        return frozenset(j + 1 for j, x in enumerate(row) if x == 1)

    def negative_support(self, reaction_id: int) -> frozenset[int]:
        row = self.signs[reaction_id - 1]
        return frozenset(j + 1 for j, x in enumerate(row) if x == -1)

    def support(self, reaction_id: int) -> frozenset[int]:
        row = self.signs[reaction_id - 1]
        return frozenset(j + 1 for j, x in enumerate(row) if x != 0)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.signs for x in row)


def influence_from_rows(rows) -> InfluenceSpecification:
    return InfluenceSpecification(tuple(tuple(int(x) for x in row) for row in rows))


def complex_influence(net: Network) -> InfluenceSpecification:
    """+1 exactly on the reactant support of each reaction."""
    rows = []
    for r in net.reactions:
        supp = r.reactant.support
        rows.append(tuple(1 if s.id in supp else 0 for s in net.species))
    return InfluenceSpecification(tuple(rows))


def reaction_influence(net: Network) -> InfluenceSpecification:
    """Sign of reactant coefficient minus product coefficient, per species."""
    rows = []
    for r in net.reactions:
        row = []
        for s in net.species:
            diff = r.reactant.coefficient(s.id) - r.product.coefficient(s.id)
            row.append(1 if diff > 0 else (-1 if diff < 0 else 0))
        rows.append(tuple(row))
    return InfluenceSpecification(tuple(rows))


def influence_leq(a: InfluenceSpecification, b: InfluenceSpecification) -> bool:
    """Partial order: every non-zero entry of ``a`` matches the entry of ``b``."""
    if a.num_reactions != b.num_reactions or a.num_species != b.num_species:
        raise NetworkError("influence specifications have mismatched dimensions")
    for ra, rb in zip(a.signs, b.signs):
        for xa, xb in zip(ra, rb):
            if xa != 0 and xa != xb:
                return False
    return True


def reactant_restricted(infl: InfluenceSpecification, net: Network) -> InfluenceSpecification:
    """Zero every entry outside the reactant support of its reaction."""
    rows = []
    for r in net.reactions:
        supp = r.reactant.support
        row = infl.signs[r.id - 1]
        rows.append(tuple(x if (j + 1) in supp else 0 for j, x in enumerate(row)))
    return InfluenceSpecification(tuple(rows))


def lint_reactant_coverage(infl: InfluenceSpecification, net: Network) -> list[str]:
    """Warn when a reactant species has zero influence on its own reaction.

    Typical applications have every reactant species influencing the
    reaction; this is deliberately not enforced, only reported.
    """
    messages = []
    for r in net.reactions:
        for idx in sorted(r.reactant.support):
            if infl.sign(r.id, idx) == 0:
                messages.append(
                    f"reaction {r.label or r.id}: reactant species "
                    f"{net.species[idx - 1].name} has zero influence"
                )
    for msg in messages:
        warnings.warn(msg, stacklevel=2)
    return messages


@dataclass(frozen=True)
class SignPattern:
    """Symbolic matrix with entry (i, j) equal to sign(i, j) * z[i, j].

    Entries are held as SignedPolynomial values (zero or a signed variable)
    so the matrix can be fed directly to the determinant engines.
    """

    entries: tuple[tuple[SignedPolynomial, ...], ...]
    num_species: int

    @property
    def num_reactions(self) -> int:
        return len(self.entries)

    def row(self, reaction_id: int) -> tuple[SignedPolynomial, ...]:
        return self.entries[reaction_id - 1]


def sign_pattern(infl: InfluenceSpecification) -> SignPattern:
    """Symbolic sign pattern: one fresh variable per non-zero influence entry."""
    n = infl.num_species
    rows = []
    for i in range(1, infl.num_reactions + 1):
        row = []
        for j in range(1, n + 1):
            s = infl.sign(i, j)
            if s == 0:
                row.append(SignedPolynomial.zero())
            else:
                row.append(SignedPolynomial.variable(var(i, j), coeff=s))
        rows.append(tuple(row))
    return SignPattern(tuple(rows), num_species=n)
