"""Exact sparse multilinear polynomials and symbolic determinants.

Variables stand for the magnitudes of non-zero kinetic-order entries, one
per (reaction, species) pair.  Every polynomial produced by the determinant
engines is multilinear: each variable appears with degree zero or one in
every monomial.  That makes a bitmask over packed variable ids a canonical
monomial representation, which the whole module exploits.

Coefficients are exact (Python ints, or Fractions when the stoichiometric
data is non-integer).  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import CrnInjectError
from .ratmat import Matrix, det as rat_det

# Packing stride for (reaction, species) -> variable id.  Instances are
# capped at MAX_SPECIES species and MAX_REACTIONS reactions, i.e. at most
# MAX_SPECIES * MAX_REACTIONS variables; raise both to trade memory for
# larger networks.
MAX_SPECIES = 64
MAX_REACTIONS = 64


def var(reaction_id: int, species_id: int) -> int:
    """Packed variable id for the magnitude z[reaction, species]."""
    if not 1 <= species_id <= MAX_SPECIES:
        raise CrnInjectError(f"species index {species_id} outside 1..{MAX_SPECIES}")
    if not 1 <= reaction_id <= MAX_REACTIONS:
        raise CrnInjectError(f"reaction index {reaction_id} outside 1..{MAX_REACTIONS}")
    return (reaction_id - 1) * MAX_SPECIES + (species_id - 1)


def var_reaction(vid: int) -> int:
    return vid // MAX_SPECIES + 1


def var_species(vid: int) -> int:
    return vid % MAX_SPECIES + 1


def var_name(vid: int) -> str:
    return f"z[{var_reaction(vid)},{var_species(vid)}]"


def mask_vars(mask: int) -> list[int]:
    """Variable ids present in a monomial bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_reactions(mask: int) -> tuple[int, ...]:
    return tuple(sorted({var_reaction(v) for v in mask_vars(mask)}))


def mask_species(mask: int) -> tuple[int, ...]:
    return tuple(sorted({var_species(v) for v in mask_vars(mask)}))


def format_monomial(mask: int, coeff) -> str:
    names = "*".join(var_name(v) for v in mask_vars(mask))
    if not names:
        return str(coeff)
    if coeff == 1:
        return names
    if coeff == -1:
        return f"-{names}"
    return f"{coeff}*{names}"


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SignedPolynomial:
    """Sparse multilinear polynomial with exact coefficients.

    Terms map a monomial bitmask (over packed variable ids) to a non-zero
    coefficient.  The representation is canonical, so equality is dict
    equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms: dict[int, object] = {}
        if terms:
            for mask, coeff in terms.items():
                coeff = _norm_coeff(coeff)
                if coeff:
                    self.terms[mask] = coeff

    @staticmethod
    def zero() -> "SignedPolynomial":
        return SignedPolynomial()

    @staticmethod
    def constant(c) -> "SignedPolynomial":
        return SignedPolynomial({0: c})

    @staticmethod
    def variable(vid: int, coeff=1) -> "SignedPolynomial":
        return SignedPolynomial({1 << vid: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPolynomial) and self.terms == other.terms

    def __add__(self, other: "SignedPolynomial") -> "SignedPolynomial":
        out = dict(self.terms)
        for mask, coeff in other.terms.items():
            s = out.get(mask, 0) + coeff
            s = _norm_coeff(s)
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        res = SignedPolynomial()
        res.terms = out
        return res

    def __neg__(self) -> "SignedPolynomial":
        res = SignedPolynomial()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "SignedPolynomial") -> "SignedPolynomial":
        return self + (-other)

    def scale(self, factor) -> "SignedPolynomial":
        factor = _norm_coeff(factor)
        if not factor:
            return SignedPolynomial.zero()
        res = SignedPolynomial()
        res.terms = {m: _norm_coeff(c * factor) for m, c in self.terms.items()}
        return res

    def __mul__(self, other: "SignedPolynomial") -> "SignedPolynomial":
        """Product of multilinear polynomials with disjoint variables.

        A repeated variable would break multilinearity; determinant
        expansions never produce one, so it is an error here.
        """
        out: dict[int, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    raise CrnInjectError(
                        "repeated variable in polynomial product: "
                        + ", ".join(var_name(v) for v in mask_vars(m1 & m2))
                    )
                mask = m1 | m2
                s = _norm_coeff(out.get(mask, 0) + c1 * c2)
                if s:
                    out[mask] = s
                else:
                    out.pop(mask, None)
        res = SignedPolynomial()
        res.terms = out
        return res

    def variables(self) -> set[int]:
        vs: set[int] = set()
        for mask in self.terms:
            vs.update(mask_vars(mask))
        return vs

    def zero_variables(self, vids: Iterable[int]) -> "SignedPolynomial":
        """Set the given variables to zero: drop every monomial using them."""
        kill = 0
        for v in vids:
            kill |= 1 << v
        res = SignedPolynomial()
        res.terms = {m: c for m, c in self.terms.items() if not m & kill}
        return res

    def evaluate(self, assignment: Mapping[int, object]):
        """Exact evaluation at non-negative rational magnitudes.

        Every variable occurring in the polynomial must be assigned.
        """
        total = Fraction(0)
        for mask, coeff in self.terms.items():
            prod = Fraction(coeff)
            for v in mask_vars(mask):
                if v not in assignment:
                    raise CrnInjectError(f"no value assigned to variable {var_name(v)}")
                val = assignment[v]
                if not isinstance(val, (int, Fraction)):
                    raise CrnInjectError(
                        f"assignment for {var_name(v)} must be an exact rational"
                    )
                if val < 0:
                    raise CrnInjectError(f"magnitude for {var_name(v)} must be non-negative")
                prod *= val
            total += prod
        return _norm_coeff(total)

    def sorted_terms(self) -> list[tuple[int, object]]:
        return sorted(self.terms.items(), key=lambda t: (bin(t[0]).count("1"), t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [format_monomial(m, c) for m, c in self.sorted_terms()]
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self) -> str:
        return f"SignedPolynomial({self})"


def specialize(p: SignedPolynomial, assignment: Mapping[int, object]):
    """Exact evaluation of a polynomial at a non-negative assignment."""
    return p.evaluate(assignment)


ZERO_TAG = "zero"
ALL_POSITIVE = "all_positive"
ALL_NEGATIVE = "all_negative"
MIXED = "mixed"


@dataclass(frozen=True)
class SignClass:
    """Sign classification of a polynomial's coefficients, with witnesses.

    Up to two (monomial mask, coefficient) witnesses justify the tag: one
    for a uniform sign, a positive and a negative one for ``mixed``.
    """

    tag: str
    witnesses: tuple[tuple[int, object], ...]

    @property
    def is_uniform_sign(self) -> bool:
        return self.tag in (ALL_POSITIVE, ALL_NEGATIVE)

    @property
    def delta(self) -> int | None:
        """Common coefficient sign: +1, -1, 0 for zero, None for mixed."""
        if self.tag == ALL_POSITIVE:
            return 1
        if self.tag == ALL_NEGATIVE:
            return -1
        if self.tag == ZERO_TAG:
            return 0
        return None

    def describe(self) -> str:
        if self.tag == ZERO_TAG:
            return "zero polynomial"
        ws = ", ".join(format_monomial(m, c) for m, c in self.witnesses)
        return f"{self.tag} (witness: {ws})"


def sign_classify(p: SignedPolynomial) -> SignClass:
    """Tag a polynomial as zero, uniformly signed, or mixed."""
    pos = [(m, c) for m, c in p.terms.items() if c > 0]
    neg = [(m, c) for m, c in p.terms.items() if c < 0]
    smallest = lambda items: min(items, key=lambda t: (bin(t[0]).count("1"), t[0]))
    if not pos and not neg:
        return SignClass(ZERO_TAG, ())
    if not neg:
        return SignClass(ALL_POSITIVE, (smallest(pos),))
    if not pos:
        return SignClass(ALL_NEGATIVE, (smallest(neg),))
    return SignClass(MIXED, (smallest(pos), smallest(neg)))


SymbolicMatrix = Sequence[Sequence[SignedPolynomial]]


def modified_matrix(stoich, z) -> list[list[SignedPolynomial]]:
    """Conservation rows stacked over the species rows of A*Z.

    Rows and columns follow the stoichiometric species reordering; the top
    rows are the (constant) reduced conservation-law basis, the remaining
    rows are the corresponding rows of the symbolic Jacobian factor A*Z.
    """
    a: Matrix = stoich.matrix
    n = len(a)
    m = len(a[0]) if a else 0
    if z.num_reactions != m or z.num_species != n:
        raise CrnInjectError("sign pattern dimensions do not match the stoichiometric matrix")
    # Symbolic product A*Z in the input species order.
    prod: list[list[SignedPolynomial]] = []
    for l in range(n):
        row = []
        for j in range(n):
            acc = SignedPolynomial.zero()
            for i in range(m):
                coeff = a[l][i]
                if coeff:
                    entry = z.entries[i][j]
                    if entry:
                        acc = acc + entry.scale(coeff)
            row.append(acc)
        prod.append(row)
    order = [idx - 1 for idx in stoich.species_order]
    permuted = [[prod[order[p]][order[q]] for q in range(n)] for p in range(n)]
    for k, law in enumerate(stoich.conservation_laws):
        permuted[k] = [SignedPolynomial.constant(x) for x in law]
    return permuted


def det_symbolic(matrix: SymbolicMatrix) -> SignedPolynomial:
    """Exact symbolic determinant of a square matrix of affine entries.

    Laplace expansion along rows presorted by sparsity, with memoization on
    the remaining-column bitmask and pruning of zero minors.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise CrnInjectError("determinant requires a square matrix")
    if n == 0:
        return SignedPolynomial.constant(1)

    order = sorted(range(n), key=lambda r: (sum(1 for e in matrix[r] if e), r))
    rows = [matrix[r] for r in order]
    # Parity of the row presort permutation.
    seen = [False] * n
    parity = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            parity = -parity

    memo: dict[int, SignedPolynomial] = {}

    def minor(colmask: int) -> SignedPolynomial:
        if colmask == 0:
            return SignedPolynomial.constant(1)
        cached = memo.get(colmask)
        if cached is not None:
            return cached
        depth = n - bin(colmask).count("1")
        row = rows[depth]
        acc = SignedPolynomial.zero()
        sign = 1
        rest = colmask
        while rest:
            low = rest & -rest
            col = low.bit_length() - 1
            entry = row[col]
            if entry:
                sub = minor(colmask ^ low)
                if sub:
                    term = entry * sub
                    acc = acc + (term if sign > 0 else -term)
            sign = -sign
            rest ^= low
        memo[colmask] = acc
        return acc

    full = (1 << n) - 1
    result = minor(full)
    return result if parity > 0 else -result


def cauchy_binet_terms(stoich, z) -> dict[tuple[tuple[int, ...], tuple[int, ...]], SignedPolynomial]:
    """Minor-product decomposition of the modified determinant.

    Returns, for every species set J and reaction set C of size equal to
    the stoichiometric dimension, the polynomial det(A[J,C]) * det(Z[C,J]).
    Zero terms are omitted.  The sum over all pairs equals the symbolic
    determinant of the modified matrix; both engines are kept independent
    so they can cross-check each other.
    """
    a: Matrix = stoich.matrix
    n = len(a)
    m = len(a[0]) if a else 0
    s = stoich.rank
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], SignedPolynomial] = {}
    for c_set in combinations(range(m), s):
        z_rows = [z.entries[i] for i in c_set]
        for j_set in combinations(range(n), s):
            a_minor = rat_det([[a[j][i] for i in c_set] for j in j_set])
            if a_minor == 0:
                continue
            z_minor = det_symbolic([[z_rows[r][j] for j in j_set] for r in range(s)])
            if z_minor.is_zero():
                continue
            key = (tuple(j + 1 for j in j_set), tuple(i + 1 for i in c_set))
            out[key] = z_minor.scale(a_minor)
    return out


def cauchy_binet_sum(terms: Mapping) -> SignedPolynomial:
    total = SignedPolynomial.zero()
    for poly in terms.values():
        total = total + poly
    return total
