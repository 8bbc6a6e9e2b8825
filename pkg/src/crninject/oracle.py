"""Numeric cross-validation of the symbolic criteria.

Everything here is floating point and advisory: power-law and saturating
rate functions are evaluated directly, modified Jacobian determinants are
computed along two independent paths and compared, and non-injectivity
verdicts are turned into explicit witnesses (two distinct compatible
states with equal formation rates) by replaying the constructive
correspondence between rate-difference equations and Jacobian kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpf

from .errors import EvaluationDomainError, CrnInjectError
from .influence import InfluenceSpecification, sign_pattern
from .injectivity import NOT_INJECTIVE, KineticOrder, check_fixed_order
from .network import Network, StoichInfo, build_stoich, conservation_analysis
from .sympoly import MIXED, cauchy_binet_terms, mask_vars, sign_classify, var_reaction, var_species

LOG_RANGE = (1e-2, 1e2)  # log-uniform sampling range for magnitudes


@dataclass(frozen=True)
class PowerLawKinetics:
    """Rates k * c**v per reaction; entries may be any positive numbers."""

    kappa: tuple[float, ...]
    exponents: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if any(k <= 0 for k in self.kappa):
            raise CrnInjectError("rate constants must be positive")
        if len(self.kappa) != len(self.exponents):
            raise CrnInjectError("one rate constant per reaction is required")

    @staticmethod
    def from_order(kappa, order: KineticOrder) -> "PowerLawKinetics":
        return PowerLawKinetics(
            tuple(float(k) for k in kappa),
            tuple(tuple(float(x) for x in row) for row in order.entries),
        )

    def influence_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(1 if x > 0 else (-1 if x < 0 else 0) for x in row)
            for row in self.exponents
        )


@dataclass(frozen=True)
class HillKinetics:
    """Saturating rates k * prod c**v / (d + c**v), defined on the boundary.

    The threshold and exponent supports must coincide for every reaction.
    """

    kappa: tuple[float, ...]
    thresholds: tuple[tuple[float, ...], ...]
    exponents: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if any(k <= 0 for k in self.kappa):
            raise CrnInjectError("rate constants must be positive")
        for d_row, v_row in zip(self.thresholds, self.exponents):
            for d, v in zip(d_row, v_row):
                if d < 0:
                    raise CrnInjectError("thresholds must be non-negative")
                if (d == 0) != (v == 0):
                    raise CrnInjectError(
                        "threshold and exponent supports must coincide"
                    )

    def influence_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(1 if x > 0 else (-1 if x < 0 else 0) for x in row)
            for row in self.exponents
        )


def _power(base: float, expo: float, allow_boundary: bool) -> float:
    if base > 0:
        return base ** expo
    if base == 0:
        if expo == 0:
            return 1.0 if allow_boundary else _boundary_error()
        if expo > 0:
            return 0.0 if allow_boundary else _boundary_error()
        raise EvaluationDomainError(
            "negative exponent at zero concentration is outside the domain"
        )
    raise EvaluationDomainError("concentrations must be non-negative")


def _boundary_error():
    raise EvaluationDomainError(
        "boundary concentration encountered; pass allow_boundary=True to "
        "evaluate with the 0**0 = 1 convention"
    )


def reaction_rates(net: Network, kinetics, c, allow_boundary: bool = False) -> np.ndarray:
    """Vector of per-reaction rate values at a concentration vector."""
    c = np.asarray(c, dtype=float)
    if c.shape != (net.num_species,):
        raise CrnInjectError("concentration vector has the wrong length")
    rates = np.empty(net.num_reactions)
    if isinstance(kinetics, PowerLawKinetics):
        for i in range(net.num_reactions):
            val = kinetics.kappa[i]
            for j, expo in enumerate(kinetics.exponents[i]):
                if expo != 0 or c[j] == 0:
                    val *= _power(c[j], expo, allow_boundary)
            rates[i] = val
    elif isinstance(kinetics, HillKinetics):
        for i in range(net.num_reactions):
            val = kinetics.kappa[i]
            for j, expo in enumerate(kinetics.exponents[i]):
                if expo == 0:
                    continue
                if c[j] == 0:
                    # Defined by continuity on the boundary.
                    val *= 0.0 if expo > 0 else 1.0
                else:
                    p = c[j] ** expo
                    val *= p / (kinetics.thresholds[i][j] + p)
            rates[i] = val
    else:
        raise CrnInjectError(f"unsupported kinetics type {type(kinetics).__name__}")
    return rates


def eval_rate_function(net: Network, kinetics, c, allow_boundary: bool = False) -> np.ndarray:
    """Species formation rate: stoichiometric matrix times the rate vector."""
    a = np.array([[float(x) for x in row] for row in build_stoich(net)])
    return a @ reaction_rates(net, kinetics, c, allow_boundary)


def modified_jacobian(net: Network, kinetics: PowerLawKinetics, c,
                      stoich: StoichInfo | None = None) -> np.ndarray:
    """Jacobian of the extended rate function at c, rows/cols reordered.

    Top rows are the conservation laws, the rest are the corresponding
    rows of A @ V with V[i][j] = k_i c**v_i v_ij / c_j.
    """
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    c = np.asarray(c, dtype=float)
    if np.any(c <= 0):
        raise EvaluationDomainError("the Jacobian is evaluated at positive concentrations")
    n, m = net.num_species, net.num_reactions
    a = np.array([[float(x) for x in row] for row in stoich.matrix])
    v = np.array(kinetics.exponents, dtype=float)
    rho = np.array(kinetics.kappa, dtype=float) * np.prod(c[None, :] ** v, axis=1)
    vmat = (rho[:, None] * v) / c[None, :]
    full = a @ vmat
    order = [idx - 1 for idx in stoich.species_order]
    full = full[np.ix_(order, order)]
    for k, law in enumerate(stoich.conservation_laws):
        full[k] = [float(x) for x in law]
    return full


def eval_jacobian_det(net: Network, kinetics: PowerLawKinetics, c,
                      stoich: StoichInfo | None = None) -> float:
    """Determinant of the modified Jacobian at a positive concentration."""
    return float(np.linalg.det(modified_jacobian(net, kinetics, c, stoich)))


def _certified_direct_logdet(net: Network, kinetics: PowerLawKinetics, c,
                             stoich: StoichInfo, max_dps: int = 2600):
    """Sign and log10 magnitude of the modified Jacobian determinant.

    Built and eliminated in adaptive-precision arithmetic: the inputs are
    binary floats (hence exactly representable), and the working precision
    is doubled until the result exceeds the Hadamard-bound error estimate.
    Wide sampling ranges produce determinants with hundreds of digits of
    cancellation, far beyond what fixed double precision can certify.

    Returns ``(sign, log10abs)``; sign 0 means an exact or uncertifiable
    zero at the precision cap.
    """
    n = net.num_species
    order = [idx - 1 for idx in stoich.species_order]
    a_rows = [[float(x) for x in row] for row in stoich.matrix]
    laws = [[float(x) for x in law] for law in stoich.conservation_laws]
    v = kinetics.exponents
    dps = 40
    while True:
        with mp.workdps(dps):
            cm = [mpf(float(x)) for x in c]
            rho = []
            for i in range(net.num_reactions):
                val = mpf(float(kinetics.kappa[i]))
                for j in range(n):
                    if v[i][j]:
                        val *= cm[j] ** mpf(v[i][j])
                rho.append(val)
            vmat = [[rho[i] * mpf(v[i][j]) / cm[j] for j in range(n)]
                    for i in range(net.num_reactions)]
            full = [[sum((mpf(a_rows[l][i]) * vmat[i][j]
                          for i in range(net.num_reactions) if a_rows[l][i]), mpf(0))
                     for j in range(n)] for l in range(n)]
            mat = [[full[order[p]][order[q]] for q in range(n)] for p in range(n)]
            for k, law in enumerate(laws):
                mat[k] = [mpf(x) for x in law]

            hadamard_log10 = 0.0
            for row in mat:
                big = max((abs(x) for x in row), default=mpf(0))
                if big == 0:
                    return 0, -math.inf
                hadamard_log10 += float(mp.log10(big)) + 0.5 * math.log10(n)

            sign = 1
            det_log = mpf(0)
            singular = False
            work = [row[:] for row in mat]
            for col in range(n):
                pivot = max(range(col, n), key=lambda r: abs(work[r][col]))
                if work[pivot][col] == 0:
                    singular = True
                    break
                if pivot != col:
                    work[col], work[pivot] = work[pivot], work[col]
                    sign = -sign
                p = work[col][col]
                if p < 0:
                    sign = -sign
                det_log += mp.log10(abs(p))
                inv = 1 / p
                for r in range(col + 1, n):
                    f = work[r][col] * inv
                    if f:
                        work[r] = [x - f * y for x, y in zip(work[r], work[col])]
            if singular:
                value_log = -math.inf
            else:
                value_log = float(det_log)
            # Accept only with enough headroom over the elimination error
            # estimate to leave ~12 accurate digits for the comparison.
            noise_log = hadamard_log10 + 20 - dps
            if value_log > noise_log:
                return sign, value_log
            if dps >= max_dps:
                return 0, value_log
        dps *= 2


class _CompiledExpansion:
    """Minor-product expansion of the determinant, prepared for evaluation.

    Each monomial of each minor product contributes one term: a sign, the
    magnitude variables it uses, its reaction set (for the rate-constant
    monomial) and species set (for the concentration factors).  Terms are
    evaluated in log space so wide magnitude ranges cannot overflow.
    """

    def __init__(self, net: Network, infl: InfluenceSpecification, stoich: StoichInfo):
        self.n = net.num_species
        self.stoich = stoich
        terms = []
        for (j_set, c_set), poly in cauchy_binet_terms(stoich, sign_pattern(infl)).items():
            for mask, coeff in poly.terms.items():
                pairs = [(var_reaction(v), var_species(v)) for v in mask_vars(mask)]
                terms.append((float(coeff), pairs, c_set, j_set))
        self.terms = terms

    def signed_log_value(self, v: np.ndarray, kappa: np.ndarray, c: np.ndarray):
        """Return (sign, log|det|, log sum|terms|); zero expansion gives sign 0."""
        if not self.terms:
            return 0, -math.inf, -math.inf
        logc = np.log(c)
        logk = np.log(kappa)
        logs = np.empty(len(self.terms))
        signs = np.empty(len(self.terms))
        for t, (coeff, pairs, c_set, j_set) in enumerate(self.terms):
            lv = math.log(abs(coeff)) if coeff else -math.inf
            for (i, j) in pairs:
                lv += math.log(abs(v[i - 1][j - 1]))
            expo = -np.ones(self.n)
            for l in c_set:
                lv += logk[l - 1]
                expo += v[l - 1]
            for j in range(1, self.n + 1):
                if j not in j_set:
                    lv += logc[j - 1]
            lv += float(expo @ logc)
            logs[t] = lv
            signs[t] = math.copysign(1.0, coeff)
        top = float(np.max(logs))
        scaled = np.exp(logs - top)
        total = float(np.dot(signs, scaled))
        spread = float(np.sum(scaled))
        log_scale = top + math.log(spread)
        if total == 0.0:
            return 0, -math.inf, log_scale
        return (1 if total > 0 else -1), top + math.log(abs(total)), log_scale


@dataclass(frozen=True)
class AgreementReport:
    """Outcome of the sampled comparison between the two determinant paths.

    ``overflow_skips`` counts samples whose double-precision rate vector
    overflowed, so the conservation residual could not be evaluated there
    (the determinant comparison itself runs in adaptive precision and is
    never skipped).
    """

    samples: int
    mismatches: int
    mismatch_examples: tuple[int, ...]
    max_rel_gap: float
    max_conservation_residual: float
    sign_counts: dict
    overflow_skips: int
    seed: int
    symbolic_tag: str


def _draw_log_uniform(rng, size):
    lo, hi = LOG_RANGE
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size=size))


def _sample_magnitudes(rng, infl: InfluenceSpecification, n: int, m: int):
    signs = np.array(infl.signs, dtype=float)
    mags = _draw_log_uniform(rng, (m, n))
    return signs * mags


def symbolic_numeric_agreement(net: Network, infl: InfluenceSpecification,
                               samples: int = 1000, seed: int = 0,
                               rel_tol: float = 1e-9,
                               conservation_tol: float = 1e-12,
                               stoich: StoichInfo | None = None) -> AgreementReport:
    """Compare the direct and expansion determinant paths on random draws.

    For each sample of (kinetic order consistent with the influence, rate
    constants, concentrations), the sign of the modified Jacobian
    determinant must agree between a dense determinant and the exact
    minor-product expansion evaluated in log space; conservation laws must
    annihilate the rate function.  When the symbolic classification is
    mixed, two witness-guided assignments that force each sign are tried
    before random sampling.
    """
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    n, m = net.num_species, net.num_reactions
    compiled = _CompiledExpansion(net, infl, stoich)
    cls = sign_classify(_determinant_for(net, infl, stoich))
    rng = np.random.default_rng(seed)
    a_float = np.array([[float(x) for x in row] for row in stoich.matrix])
    laws = [np.array([float(x) for x in law]) for law in
            stoich.conservation_laws_input_order()]

    guided = _witness_guided_assignments(cls, infl, n, m) if cls.tag == MIXED else []

    mismatches = []
    max_gap = 0.0
    max_cons = 0.0
    sign_counts = {-1: 0, 0: 0, 1: 0}
    resamples = 0
    produced = 0
    ln10 = math.log(10.0)
    while produced < samples:
        if produced < len(guided):
            v, kappa, c = guided[produced]
        else:
            v = _sample_magnitudes(rng, infl, n, m)
            kappa = _draw_log_uniform(rng, m)
            c = _draw_log_uniform(rng, n)
        kin = PowerLawKinetics(tuple(kappa), tuple(tuple(row) for row in v))
        direct_sign, direct_log10 = _certified_direct_logdet(net, kin, c, stoich)
        direct_log = direct_log10 * ln10 if direct_log10 != -math.inf else -math.inf
        exp_sign, exp_log, log_scale = compiled.signed_log_value(v, kappa, c)
        sign_counts[exp_sign] += 1

        if log_scale == -math.inf:
            # Identically zero expansion: the direct path must agree.
            agree = direct_sign == 0
            gap = 0.0
        else:
            d1 = _signed_ratio(direct_sign, direct_log, log_scale)
            d2 = _signed_ratio(exp_sign, exp_log, log_scale)
            gap = abs(d1 - d2)
            max_gap = max(max_gap, gap)
            both_visible = min(abs(d1), abs(d2)) > rel_tol
            agree = (direct_sign == exp_sign or not both_visible) and gap <= rel_tol
        if not agree:
            mismatches.append(produced)

        rates = reaction_rates(net, kin, c)
        if np.all(np.isfinite(rates)):
            f = a_float @ rates
            scale = max(1.0, float(np.max(np.abs(a_float) @ np.abs(rates))))
            for law in laws:
                law_scale = scale * max(1.0, float(np.max(np.abs(law))))
                max_cons = max(max_cons, abs(float(law @ f)) / law_scale)
        else:
            resamples += 1
        produced += 1

    return AgreementReport(
        samples=samples,
        mismatches=len(mismatches),
        mismatch_examples=tuple(mismatches[:5]),
        max_rel_gap=max_gap,
        max_conservation_residual=max_cons,
        sign_counts=sign_counts,
        overflow_skips=resamples,
        seed=seed,
        symbolic_tag=cls.tag,
    )


def _determinant_for(net, infl, stoich):
    from .injectivity import determinant_polynomial

    return determinant_polynomial(net, infl, stoich)


def _signed_ratio(sign: int, logabs: float, log_scale: float) -> float:
    if sign == 0 or logabs == -math.inf:
        return 0.0
    return sign * math.exp(min(logabs - log_scale, 700.0))


def _witness_guided_assignments(cls, infl: InfluenceSpecification, n: int, m: int):
    """Assignments making each mixed-sign witness monomial dominate."""
    big, small = 100.0, 0.01
    out = []
    for mask, _coeff in cls.witnesses:
        pairs = [(var_reaction(v), var_species(v)) for v in mask_vars(mask)]
        reactions = {i for i, _ in pairs}
        species = {j for _, j in pairs}
        v = np.array(infl.signs, dtype=float)
        v *= small
        for (i, j) in pairs:
            v[i - 1][j - 1] = math.copysign(big, v[i - 1][j - 1]) if v[i - 1][j - 1] else 0.0
        kappa = np.array([big if i in reactions else small for i in range(1, m + 1)])
        c = np.array([small if j in species else big for j in range(1, n + 1)])
        out.append((v, kappa, c))
    return out


@dataclass(frozen=True)
class CounterexampleWitness:
    """Two distinct compatible states with equal formation rates."""

    kappa: tuple[float, ...]
    a: tuple[float, ...]
    b: tuple[float, ...]
    residual: float
    compatibility_residual: float


def counterexample_search(net: Network, order: KineticOrder,
                          trials: int = 64, seed: int = 0,
                          residual_tol: float = 1e-8,
                          stoich: StoichInfo | None = None) -> CounterexampleWitness | None:
    """Search for a concrete injectivity counterexample at a fixed order.

    Only non-injective fixed orders can yield a witness.  A sign change of
    the modified Jacobian determinant is located by bisecting between two
    minor-guided parameter assignments (falling back to random sampling),
    the kernel direction inside the stoichiometric subspace is extracted,
    and the pair (a, b) plus rate vector are reconstructed from it; the
    returned witness satisfies f(a) = f(b) up to the residual tolerance
    with a - b in the stoichiometric subspace.
    """
    if stoich is None:
        stoich = conservation_analysis(build_stoich(net))
    verdict = check_fixed_order(net, order, stoich)
    if verdict.result != NOT_INJECTIVE:
        return None

    n, m, s = net.num_species, net.num_reactions, stoich.rank
    v = np.array([[float(x) for x in row] for row in order.entries])
    a_float = np.array([[float(x) for x in row] for row in stoich.matrix])
    # Orthonormal basis of the stoichiometric subspace.
    u_svd, _, _ = np.linalg.svd(a_float)
    basis = u_svd[:, :s]

    rng = np.random.default_rng(seed)

    def params_for(pair):
        j_set, c_set = pair
        big, small = 100.0, 0.01
        kappa = np.array([big if i in c_set else small for i in range(1, m + 1)])
        c = np.array([small if j in j_set else big for j in range(1, n + 1)])
        return kappa, c

    def detsign(kappa, c):
        kin = PowerLawKinetics(tuple(kappa), tuple(tuple(row) for row in v))
        jac = modified_jacobian(net, kin, c, stoich)
        sign, logabs = np.linalg.slogdet(jac)
        return int(sign), jac

    lo = params_for(verdict.positive_pair)
    hi = params_for(verdict.negative_pair)
    sign_lo, _ = detsign(*lo)
    sign_hi, _ = detsign(*hi)
    used = 0
    while (sign_lo == 0 or sign_lo == sign_hi) and used < trials:
        kappa = _draw_log_uniform(rng, m)
        c = _draw_log_uniform(rng, n)
        sgn, _ = detsign(kappa, c)
        if sgn != 0 and sign_lo in (0, sgn):
            lo, sign_lo = (kappa, c), sgn
        elif sgn != 0 and sgn != sign_lo:
            hi, sign_hi = (kappa, c), sgn
        used += 1
    if sign_lo == 0 or sign_hi == 0 or sign_lo == sign_hi:
        return None

    def interp(t):
        kappa = lo[0] ** (1 - t) * hi[0] ** t
        c = lo[1] ** (1 - t) * hi[1] ** t
        return kappa, c

    t_lo, t_hi = 0.0, 1.0
    for _ in range(200):
        t_mid = 0.5 * (t_lo + t_hi)
        sgn, _ = detsign(*interp(t_mid))
        if sgn == sign_lo:
            t_lo = t_mid
        elif sgn == -sign_lo:
            t_hi = t_mid
        else:
            break
        if t_hi - t_lo < 1e-15:
            break

    kappa_c, c_c = interp(0.5 * (t_lo + t_hi))
    kin = PowerLawKinetics(tuple(kappa_c), tuple(tuple(row) for row in v))
    rho = np.array(kin.kappa) * np.prod(c_c[None, :] ** v, axis=1)
    vmat = (rho[:, None] * v) / c_c[None, :]
    jac_full = a_float @ vmat
    _, _, vt = np.linalg.svd(jac_full @ basis)
    gamma = basis @ vt[-1]
    # Keep the per-coordinate log-ratios moderate before exponentiating.
    top = float(np.max(np.abs(gamma / c_c)))
    if top > 0:
        gamma = gamma * (0.5 / top)

    a_vec = np.empty(n)
    b_vec = np.empty(n)
    for j in range(n):
        g = gamma[j]
        if g == 0.0:
            a_vec[j] = b_vec[j] = 1.0
        else:
            ratio = math.expm1(g / c_c[j])
            b_vec[j] = g / ratio
            a_vec[j] = b_vec[j] * (1.0 + ratio)

    power_a = np.prod(a_vec[None, :] ** v, axis=1)
    power_b = np.prod(b_vec[None, :] ** v, axis=1)
    star = vmat @ gamma / rho  # v_i *_c gamma
    kappa_w = np.empty(m)
    for i in range(m):
        diff = power_a[i] - power_b[i]
        if diff == 0.0:
            kappa_w[i] = 1.0
        else:
            # kappa * (a**v - b**v) must equal eta * c**v * (v *_c gamma),
            # and rho already carries eta * c**v.
            kappa_w[i] = rho[i] * star[i] / diff
    if np.any(kappa_w <= 0) or not np.all(np.isfinite(kappa_w)):
        return None

    witness_kin = PowerLawKinetics(tuple(kappa_w), tuple(tuple(row) for row in v))
    fa = eval_rate_function(net, witness_kin, a_vec)
    fb = eval_rate_function(net, witness_kin, b_vec)
    scale = max(1.0, float(np.max(np.abs(fa))), float(np.max(np.abs(fb))))
    residual = float(np.max(np.abs(fa - fb))) / scale

    comp = 0.0
    for law in stoich.conservation_laws_input_order():
        law_vec = np.array([float(x) for x in law])
        comp = max(comp, abs(float(law_vec @ (a_vec - b_vec))))

    if residual > residual_tol:
        return None
    return CounterexampleWitness(
        kappa=tuple(kappa_w),
        a=tuple(a_vec),
        b=tuple(b_vec),
        residual=residual,
        compatibility_residual=comp,
    )


def hill_transfer(net: Network, power_law: PowerLawKinetics, a, b) -> HillKinetics:
    """Saturating kinetics matching a power law at two positive points.

    Per reaction, a scaling constant strictly below the reciprocal power
    values at both points is fixed, and each coordinate's threshold and
    exponent are solved from the two-point interpolation; the constructed
    kinetics has the same influence structure and the same formation rate
    at both points.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a <= 0) or np.any(b <= 0):
        raise EvaluationDomainError("transfer points must be strictly positive")
    kappa = []
    thresholds = []
    exponents = []
    for i, w_row in enumerate(power_law.exponents):
        supp = [j for j, w in enumerate(w_row) if w != 0]
        if not supp:
            kappa.append(power_law.kappa[i])
            thresholds.append(tuple(0.0 for _ in w_row))
            exponents.append(tuple(0.0 for _ in w_row))
            continue
        bound = min(min(a[j] ** -w_row[j], b[j] ** -w_row[j]) for j in supp)
        m_scale = 0.5 * bound
        d_row = [0.0] * len(w_row)
        v_row = [0.0] * len(w_row)
        for j in supp:
            alpha = m_scale * a[j] ** w_row[j]
            beta = m_scale * b[j] ** w_row[j]
            if a[j] == b[j]:
                v_row[j] = float(w_row[j])
            else:
                v_row[j] = math.log(alpha * (1 - beta) / (beta * (1 - alpha))) / math.log(a[j] / b[j])
            if v_row[j] == 0.0 or (v_row[j] > 0) != (w_row[j] > 0):
                raise CrnInjectError(
                    f"transfer failed numerically at reaction {i + 1}, species {j + 1}"
                )
            d_row[j] = a[j] ** v_row[j] * (1 - alpha) / alpha
        kappa.append(power_law.kappa[i] / m_scale ** len(supp))
        thresholds.append(tuple(d_row))
        exponents.append(tuple(v_row))
    return HillKinetics(tuple(kappa), tuple(thresholds), tuple(exponents))


def power_law_from_hill(net: Network, hill: HillKinetics, a, b) -> PowerLawKinetics:
    """Power-law kinetics matching a saturating kinetics at two points.

    Reverse of the two-point transfer: per coordinate, the exponent is the
    log-ratio of saturation values, and a single constant per reaction
    absorbs the scaling.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a <= 0) or np.any(b <= 0):
        raise EvaluationDomainError("transfer points must be strictly positive")
    kappa = []
    exponents = []
    for i, v_row in enumerate(hill.exponents):
        supp = [j for j, x in enumerate(v_row) if x != 0]
        w_row = [0.0] * len(v_row)
        prod_alpha = 1.0
        prod_aw = 1.0
        for j in supp:
            pa = a[j] ** v_row[j]
            pb = b[j] ** v_row[j]
            alpha = pa / (hill.thresholds[i][j] + pa)
            beta = pb / (hill.thresholds[i][j] + pb)
            if a[j] == b[j]:
                w_row[j] = float(v_row[j])
            else:
                w_row[j] = math.log(alpha / beta) / math.log(a[j] / b[j])
            if w_row[j] == 0.0 or (w_row[j] > 0) != (v_row[j] > 0):
                raise CrnInjectError(
                    f"transfer failed numerically at reaction {i + 1}, species {j + 1}"
                )
            prod_alpha *= alpha
            prod_aw *= a[j] ** w_row[j]
        kappa.append(hill.kappa[i] * prod_alpha / prod_aw)
        exponents.append(tuple(w_row))
    return PowerLawKinetics(tuple(kappa), tuple(exponents))
