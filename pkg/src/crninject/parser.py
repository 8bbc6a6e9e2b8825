"""Text formats: reaction networks, influences, and kinetic orders.

The network grammar mirrors the usual arrow notation::

    species: E S P C        # optional, pins the species order
    r1: E + S -> C
    r2: C -> E + S
    r3: C -> E + P

Complexes are ``0`` or ``+``-separated terms, each an optional positive
rational coefficient followed by a species name.  ``->`` and the arrow
glyph are interchangeable and whitespace is insignificant.  Without a
``species:`` line, species are numbered in order of first appearance.

Influence files hold lines ``r<k>: name:<+|-|0> ...``; the keywords
``@complex`` and ``@reaction`` (on a line of their own) install the
corresponding canonical influence as a base that explicit entries then
override.  Kinetic-order files are analogous with ``name=<rational>``
entries and the ``@mass-action`` base keyword.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NetworkError, ParseError
from .influence import InfluenceSpecification, complex_influence, reaction_influence
from .injectivity import KineticOrder, check_order_consistency
from .network import Complex, Network, Reaction, Species

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_COEFF = re.compile(r"\d+(?:/\d+)?")
_ARROWS = ("->", "→")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def _parse_complex(text: str, species_ids: dict[str, int], lineno: int,
                   allow_new: bool, order: list[str]) -> Complex:
    text = text.strip()
    if text == "0":
        return Complex(())
    coeffs: dict[int, Fraction] = {}
    for part in text.split("+"):
        part = part.strip()
        if not part:
            raise ParseError("empty term in complex", lineno)
        m = _COEFF.match(part)
        coeff = Fraction(1)
        rest = part
        if m:
            coeff = Fraction(m.group(0))
            rest = part[m.end():].strip()
            if coeff <= 0:
                raise ParseError(f"coefficient must be positive, got {coeff}", lineno)
        nm = _NAME.fullmatch(rest)
        if not nm:
            raise ParseError(f"cannot parse species term {part!r}", lineno)
        name = nm.group(0)
        if name not in species_ids:
            if not allow_new:
                raise ParseError(f"unknown species {name!r}", lineno)
            species_ids[name] = len(species_ids) + 1
            order.append(name)
        idx = species_ids[name]
        coeffs[idx] = coeffs.get(idx, Fraction(0)) + coeff
    return Complex.from_dict(coeffs)


def parse_network(text: str) -> Network:
    """Parse the reaction-list format into a network."""
    species_ids: dict[str, int] = {}
    order: list[str] = []
    pinned = False
    raw_reactions: list[tuple[int, str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("species:"):
            if pinned or species_ids:
                raise ParseError("species order declared twice or after a reaction", lineno)
            for name in line[len("species:"):].split():
                if not _NAME.fullmatch(name):
                    raise ParseError(f"invalid species name {name!r}", lineno)
                if name in species_ids:
                    raise ParseError(f"duplicate species name {name!r}", lineno)
                species_ids[name] = len(species_ids) + 1
                order.append(name)
            pinned = True
            continue
        m = re.match(r"(r\d+)\s*:\s*(.*)$", line)
        if not m:
            raise ParseError("expected 'r<k>: <complex> -> <complex>'", lineno)
        label, body = m.group(1), m.group(2)
        arrow = next((a for a in _ARROWS if a in body), None)
        if arrow is None:
            raise ParseError("missing '->' between reactant and product", lineno)
        lhs, rhs = body.split(arrow, 1)
        raw_reactions.append((lineno, label, lhs, rhs))

    if not raw_reactions:
        raise ParseError("no reactions found", 1)
    reactions = []
    for pos, (lineno, label, lhs, rhs) in enumerate(raw_reactions, start=1):
        if label != f"r{pos}":
            raise ParseError(f"expected reaction label r{pos}, got {label!r}", lineno)
        reactant = _parse_complex(lhs, species_ids, lineno, not pinned, order)
        product = _parse_complex(rhs, species_ids, lineno, not pinned, order)
        if reactant == product:
            raise ParseError("reactant and product are identical, which is not allowed", lineno)
        reactions.append((pos, reactant, product, label))

    species = tuple(Species(i + 1, n) for i, n in enumerate(order))
    try:
        return Network(species, tuple(Reaction(*r) for r in reactions))
    except NetworkError as exc:
        raise ParseError(str(exc)) from exc


def format_network(net: Network) -> str:
    """Canonical printer; parse(format(net)) reproduces the network."""
    names = net.species_names()
    lines = ["species: " + " ".join(names)]
    for r in net.reactions:
        lines.append(f"r{r.id}: {r.reactant.format(names)} -> {r.product.format(names)}")
    return "\n".join(lines) + "\n"


_KEYWORD_BASES = {
    "@complex": complex_influence,
    "@reaction": reaction_influence,
}


def parse_influence(text: str, net: Network) -> InfluenceSpecification:
    """Parse an influence file (or keyword) against a parsed network."""
    name_to_id = {s.name: s.id for s in net.species}
    base: list[list[int]] = [[0] * net.num_species for _ in net.reactions]
    explicit: dict[tuple[int, int], tuple[int, int]] = {}
    base_set = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line in _KEYWORD_BASES:
            if base_set:
                raise ParseError("influence base keyword given twice", lineno)
            base = [list(row) for row in _KEYWORD_BASES[line](net).signs]
            base_set = True
            continue
        m = re.match(r"(r\d+)\s*:\s*(.*)$", line)
        if not m:
            raise ParseError("expected 'r<k>: name:<+|-|0> ...'", lineno)
        label, body = m.group(1), m.group(2)
        rid = int(label[1:])
        if not 1 <= rid <= net.num_reactions:
            raise ParseError(f"unknown reaction {label!r}", lineno)
        for token in body.split():
            em = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*:\s*([+\-0])", token)
            if not em:
                raise ParseError(f"cannot parse influence entry {token!r}", lineno)
            name, sig = em.group(1), em.group(2)
            if name not in name_to_id:
                raise ParseError(f"unknown species {name!r}", lineno)
            sid = name_to_id[name]
            value = {"+": 1, "-": -1, "0": 0}[sig]
            prev = explicit.get((rid, sid))
            if prev is not None and prev[0] != value:
                raise ParseError(
                    f"conflicting assignments for {name} in {label} "
                    f"(lines {prev[1]} and {lineno})",
                    lineno,
                )
            explicit[(rid, sid)] = (value, lineno)
    for (rid, sid), (value, _) in explicit.items():
        base[rid - 1][sid - 1] = value
    return InfluenceSpecification(tuple(tuple(row) for row in base))


def parse_kinetic_order(text: str, net: Network,
                        influence: InfluenceSpecification | None = None) -> KineticOrder:
    """Parse a kinetic-order file; entries default to zero.

    When an influence is supplied, the order's sign structure is checked
    against it.
    """
    name_to_id = {s.name: s.id for s in net.species}
    rows: list[list[Fraction]] = [[Fraction(0)] * net.num_species for _ in net.reactions]
    base_set = False
    explicit: dict[tuple[int, int], tuple[Fraction, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line == "@mass-action":
            if base_set:
                raise ParseError("kinetic-order base keyword given twice", lineno)
            rows = [list(row) for row in KineticOrder.mass_action(net).entries]
            base_set = True
            continue
        m = re.match(r"(r\d+)\s*:\s*(.*)$", line)
        if not m:
            raise ParseError("expected 'r<k>: name=<rational> ...'", lineno)
        label, body = m.group(1), m.group(2)
        rid = int(label[1:])
        if not 1 <= rid <= net.num_reactions:
            raise ParseError(f"unknown reaction {label!r}", lineno)
        for token in body.split():
            em = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(-?\d+(?:/\d+)?)", token)
            if not em:
                raise ParseError(f"cannot parse kinetic-order entry {token!r}", lineno)
            name, val = em.group(1), Fraction(em.group(2))
            if name not in name_to_id:
                raise ParseError(f"unknown species {name!r}", lineno)
            sid = name_to_id[name]
            prev = explicit.get((rid, sid))
            if prev is not None and prev[0] != val:
                raise ParseError(
                    f"conflicting assignments for {name} in {label} "
                    f"(lines {prev[1]} and {lineno})",
                    lineno,
                )
            explicit[(rid, sid)] = (val, lineno)
    for (rid, sid), (val, _) in explicit.items():
        rows[rid - 1][sid - 1] = val
    order = KineticOrder(tuple(tuple(row) for row in rows))
    if influence is not None:
        check_order_consistency(order, influence)
    return order
