"""Evaluation of every explicit lower bound with certified constants.

All real arithmetic runs under an explicit mpmath working precision that
auto-scales with the largest exponent in play (see
charpoly.precision_for_exponent), so identical inputs give bit-identical
outputs.  Rational constants (a, b, B, theta, thresholds) are kept as
exact Fractions and only converted to floating point inside a formula.

Negative bound values are reported as-is: they are valid but vacuous.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf

from .charpoly import GeneratorSet, RootProfile, profile_for_exponent
from .combinat import is_odd_prime
from .errors import CoverageViolation, InvalidArgument

__all__ = [
    "BezoutCoverage",
    "BoundReport",
    "HomologyBoundParams",
    "KTheoryParams",
    "bbar_lower",
    "bezout_cover",
    "boundary_lower",
    "condition_star",
    "f_q",
    "ktheory_lower",
    "min_j",
    "rank_window",
    "sigma_upper",
    "weak_lower",
]


def _as_fraction(x, name: str) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise InvalidArgument(f"{name} must be rational, got {x!r}") from None


def _mpf_of(x) -> mpf:
    """Exact-input conversion at the ambient working precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


# -- parameters for the two-generator (q, q+1) boundary bounds ----------------


@dataclass(frozen=True)
class HomologyBoundParams:
    """Constants attached to the dominant root of z^{q+1} - z - 1.

    c = 2(q+2)(1+phi), kappa = (q+1)(1 + 1/|psi|),
    c1 = 2(q+2) phi^{2/p}, c2 = (q+2)(1 + phi^{-1/2}).
    """

    q: int
    p: int
    phi: mpf
    psi_abs: mpf
    c: mpf
    kappa: mpf
    c1: mpf
    c2: mpf
    precision_bits: int
    profile: RootProfile = field(repr=False)

    @classmethod
    def create(cls, q: int, p: int, n_max: int) -> "HomologyBoundParams":
        if q < 2:
            raise InvalidArgument(f"q must be >= 2, got {q}")
        if not is_odd_prime(p):
            raise InvalidArgument(f"p must be an odd prime, got {p}")
        gen = GeneratorSet.of((q, 1), (q + 1, 1))
        profile = profile_for_exponent(gen, n_max)
        bits = profile.precision_bits
        with mp.workprec(bits):
            phi = profile.phi
            psi = profile.psi_or_zero()
            if psi == 0:
                raise InvalidArgument(
                    f"z^{q + 1} - z - 1 has no subdominant root; q={q} unsupported"
                )
            lo = mpf(2) ** (mpf(1) / (q + 1))
            hi = 1 + mpf(1) / q
            if not lo < phi < hi:
                raise InvalidArgument(f"phi window violated for q={q}")
            return cls(
                q=q,
                p=p,
                phi=phi,
                psi_abs=psi,
                c=2 * (q + 2) * (1 + phi),
                kappa=(q + 1) * (1 + 1 / psi),
                c1=2 * (q + 2) * phi ** (mpf(2) / p),
                c2=(q + 2) * (1 + 1 / mp.sqrt(phi)),
                precision_bits=bits,
                profile=profile,
            )


@lru_cache(maxsize=None)
def _homology_params(q: int, p: int, bits_hint: int, _floor: int) -> HomologyBoundParams:
    return HomologyBoundParams.create(q, p, bits_hint)


def homology_params(q: int, p: int, n_max: int) -> HomologyBoundParams:
    # bucket the precision hint so N sweeps share one profile; the cache key
    # carries the environment precision floor so overrides take effect
    floor = int(os.environ.get("TORSION_BOUNDS_PRECISION", "0") or 0)
    return _homology_params(q, p, max(64 * math.ceil(n_max / 64), 64), floor)


def f_q(q: int, n: int, p: int = 3) -> mpf:
    """(1 - (N/(N-1))/phi) phi^N / N - c N phi^{N/2} - kappa |psi|^N.

    The value does not depend on p; the argument is kept for interface
    symmetry with boundary_lower and is validated only.
    """
    if n < 2:
        raise InvalidArgument(f"f_q requires N >= 2, got {n}")
    params = homology_params(q, p, n)
    with mp.workprec(params.precision_bits):
        phi, psi = params.phi, params.psi_abs
        main = (1 - (mpf(n) / (n - 1)) / phi) * phi**n / n
        return main - params.c * n * phi ** (mpf(n) / 2) - params.kappa * psi**n


def boundary_lower(q: int, n: int, p: int = 3) -> mpf:
    """Guaranteed lower bound for the boundary rank; identical to f_q."""
    return f_q(q, n, p)


def bbar_lower(q: int, n: int) -> mpf:
    """(1 - (N/(N-1))/phi) phi^N / N - kappa |psi|^N - c2 phi^{N/2}."""
    if n < 2:
        raise InvalidArgument(f"bbar_lower requires N >= 2, got {n}")
    params = homology_params(q, 3, n)  # the formula does not involve p
    with mp.workprec(params.precision_bits):
        phi, psi = params.phi, params.psi_abs
        main = (1 - (mpf(n) / (n - 1)) / phi) * phi**n / n
        return main - params.kappa * psi**n - params.c2 * phi ** (mpf(n) / 2)


def sigma_upper(q: int, p: int, n: int) -> mpf:
    """c1 * N * phi^{N/p}, the crude upper bound for the sigma subspace."""
    if n < 0:
        raise InvalidArgument(f"sigma_upper requires N >= 0, got {n}")
    if n == 0:
        return mpf(0)
    params = homology_params(q, p, n)
    with mp.workprec(params.precision_bits):
        return params.c1 * n * params.phi ** (mpf(n) / p)


def rank_window(gen: GeneratorSet, n: int) -> tuple[mpf, mpf]:
    """Window (g/N) phi^N +- ((q_l/N)|psi|^N + g phi^{N/2} + q_l |psi|^{N/2}).

    Only defined when g | N; the rank is exactly zero otherwise.  The psi
    terms are dropped when every root lies on the max-modulus circle.
    """
    if n < 1:
        raise InvalidArgument(f"rank_window requires N >= 1, got {n}")
    g = gen.g
    if n % g:
        raise InvalidArgument(f"rank_window needs g | N (g={g}, N={n}); the rank is 0 there")
    profile = profile_for_exponent(gen, n)
    ql = gen.q_max
    with mp.workprec(profile.precision_bits):
        phi = profile.phi
        center = g * phi**n / n
        err = g * phi ** (mpf(n) / 2)
        if profile.has_psi:
            psi = profile.psi_abs
            err += (mpf(ql) / n) * psi**n + ql * psi ** (mpf(n) / 2)
        return center - err, center + err


# -- Condition (*) and the covering certificate --------------------------------


def _star_threshold(p: int, conn: int, dim: int, n: int, trailing: int) -> Fraction:
    ratio = Fraction(dim + 1, conn + 1)
    return Fraction(1, 2 * (p - 1)) * ((ratio - 1) * n + ratio * (conn + 2) + trailing)


def condition_star(p: int, conn: int, dim: int, n: int, j: int, trailing: int = 1) -> bool:
    """True iff j clears the linear threshold in N.

    trailing is the constant term at the end of the threshold; +1 is the
    conservative reading consistent with the covering constants and is
    used everywhere, -1 is available for comparison only.
    """
    _validate_star(p, conn, dim, n)
    if trailing not in (1, -1):
        raise InvalidArgument(f"trailing must be +1 or -1, got {trailing}")
    return j > _star_threshold(p, conn, dim, n, trailing)


def min_j(p: int, conn: int, dim: int, n: int, trailing: int = 1) -> int:
    """Least integer j >= 0 satisfying the condition."""
    _validate_star(p, conn, dim, n)
    t = _star_threshold(p, conn, dim, n, trailing)
    return max(0, math.floor(t) + 1)


def _validate_star(p: int, conn: int, dim: int, n: int):
    if not is_odd_prime(p):
        raise InvalidArgument(f"p must be an odd prime, got {p}")
    if conn < 0:
        raise InvalidArgument(f"conn must be >= 0, got {conn}")
    if dim < conn:
        raise InvalidArgument(f"dim must be >= conn, got dim={dim}, conn={conn}")
    if n < 0:
        raise InvalidArgument(f"N must be >= 0, got {n}")


@dataclass(frozen=True)
class CoverageEntry:
    """Verified coverage data for one base index n."""

    n: int
    j_start: int
    min_value: int
    first_checked: int | None  # smallest checked multiple of g', None if none in range
    checked: int
    i_window: tuple[int, int]
    witness_array: np.ndarray = field(repr=False, compare=False)

    def witness_for(self, value: int) -> int:
        if not 0 <= value < len(self.witness_array):
            raise InvalidArgument(f"value {value} outside the certified range")
        w = int(self.witness_array[value])
        if w < 0:
            raise InvalidArgument(f"value {value} was not certified (below threshold?)")
        return w


@dataclass(frozen=True)
class BezoutCoverage:
    """Brute-force-verified covering certificate for the sets S_n."""

    alpha: int
    beta: int
    a: Fraction
    b: Fraction
    g_prime: int
    bound_b: Fraction
    value_cap: int
    entries: tuple[CoverageEntry, ...]

    def witness_map(self, n: int) -> dict[int, int]:
        """value -> covering index i, for every certified multiple of g'."""
        for entry in self.entries:
            if entry.n == n:
                if entry.first_checked is None:
                    return {}
                vals = range(entry.first_checked, self.value_cap + 1, self.g_prime)
                return {v: entry.witness_for(v) for v in vals}
        raise InvalidArgument(f"n={n} was not part of this certificate")


def _min_j_over(a: Fraction, b: Fraction, n: int) -> int:
    # smallest integer j >= 0 with j > a n + b
    return max(0, math.floor(a * n + b) + 1)


def bezout_cover(alpha: int, beta: int, a, b, n_range, value_cap: int) -> BezoutCoverage:
    """Verify that S_i for i in [n, n + beta(beta+1)) covers all multiples of
    g' = gcd(alpha, beta) in [min(S_n) + B, value_cap], B = beta^2(alpha + a(1+beta)) + beta.

    Every covered multiple is re-checked arithmetically (membership in S_i
    with its j recomputed), so a returned certificate is actually verified;
    a gap raises CoverageViolation with the counterexample.
    """
    if alpha < 1 or beta < 1:
        raise InvalidArgument(f"alpha, beta must be >= 1, got {alpha}, {beta}")
    a = _as_fraction(a, "a")
    b = _as_fraction(b, "b")
    if a <= 0:
        raise InvalidArgument("the slope a must be > 0")
    if value_cap < 1:
        raise InvalidArgument(f"value_cap must be >= 1, got {value_cap}")
    if isinstance(n_range, int):
        n_range = [n_range]
    g_prime = math.gcd(alpha, beta)
    bound_b = beta**2 * (alpha + a * (1 + beta)) + beta
    entries = []
    for n in n_range:
        if n < 0:
            raise InvalidArgument(f"n must be >= 0, got {n}")
        j0 = _min_j_over(a, b, n)
        min_value = n * alpha + j0 * beta
        threshold = min_value + bound_b
        first = math.ceil(threshold)
        first += (-first) % g_prime
        i_window = (n, n + beta * (beta + 1))
        witness = np.full(value_cap + 1, -1, dtype=np.int64)
        for i in range(i_window[1] - 1, n - 1, -1):  # descending: smallest i wins
            start = i * alpha + _min_j_over(a, b, i) * beta
            if start <= value_cap:
                witness[start :: beta] = i
        if first > value_cap:
            entries.append(CoverageEntry(n, j0, min_value, None, 0, i_window, witness))
            continue
        values = np.arange(first, value_cap + 1, g_prime, dtype=np.int64)
        wit = witness[values]
        if np.any(wit < 0):
            bad = int(values[np.argmax(wit < 0)])
            raise CoverageViolation(
                f"multiple {bad} of g'={g_prime} not covered for n={n} "
                f"(alpha={alpha}, beta={beta}, a={a}, b={b})"
            )
        # independent membership re-check: value = i alpha + j beta, j >= 0 integer, j > a i + b
        j_num = values - wit * alpha
        if np.any(j_num % beta):
            bad = int(values[np.argmax(j_num % beta != 0)])
            raise CoverageViolation(f"witness for {bad} is not a linear combination")
        j = j_num // beta
        den = a.denominator * b.denominator
        lhs = j * den
        rhs = (a.numerator * b.denominator) * wit + b.numerator * a.denominator
        if np.any(j < 0) or np.any(lhs <= rhs):
            bad = int(values[np.argmax((j < 0) | (lhs <= rhs))])
            raise CoverageViolation(f"witness for {bad} fails the excess condition")
        entries.append(CoverageEntry(n, j0, min_value, int(values[0]), len(values), i_window, witness))
    return BezoutCoverage(
        alpha=alpha,
        beta=beta,
        a=a,
        b=b,
        g_prime=g_prime,
        bound_b=bound_b,
        value_cap=value_cap,
        entries=tuple(entries),
    )


# -- K-theory route -------------------------------------------------------------


@dataclass(frozen=True)
class KTheoryParams:
    """Constants for the dimension-shifted K-theory bounds.

    theta follows the stated constant list; theta_safe is the tightened
    variant implied by the floor arithmetic of n(M) and is the one that
    provably sits under the main term (used for the display comparison).
    """

    p: int
    gen: GeneratorSet
    conn: int
    dim: int
    g: int
    g_prime: int
    a: Fraction
    b: Fraction
    big_b: Fraction
    theta: Fraction
    theta_safe: Fraction
    profile: RootProfile = field(repr=False)
    tau_const: mpf = field(repr=False)
    precision_bits: int = 0

    @classmethod
    def create(cls, p: int, gen: GeneratorSet, conn: int, dim: int, n_max: int) -> "KTheoryParams":
        if not is_odd_prime(p):
            raise InvalidArgument(f"p must be an odd prime, got {p}")
        if conn < 0:
            raise InvalidArgument(f"conn must be >= 0, got {conn}")
        if dim < conn + 1:
            raise InvalidArgument(f"dim must be >= conn + 1, got dim={dim}, conn={conn}")
        g = gen.g
        g_prime = math.gcd(g, 2 * (p - 1))
        dim_ratio = Fraction(dim + 1, conn + 1)
        compression = 1 / dim_ratio  # (conn+1)/(dim+1)
        a = Fraction(g, 2 * (p - 1)) * (dim_ratio - 1)
        b = Fraction(1, 2 * (p - 1)) * (dim_ratio * (conn + 2) + 1)
        big_b = 4 * (p - 1) ** 2 * (g + a * (1 + 2 * (p - 1))) + 2 * (p - 1)
        theta = 8 * (p - 1) ** 2 - compression * 2 * (p - 1) * (b + 1 + big_b) / g
        theta_safe = 8 * (p - 1) ** 2 - compression * (2 * (p - 1) * (b + 1) + big_b) / g
        profile = profile_for_exponent(gen, max(n_max, 1))
        with mp.workprec(profile.precision_bits):
            exponent = -g - compression * (2 * (p - 1) * (b + 1) + big_b)
            tau_const = profile.phi ** _mpf_of(exponent)
        return cls(
            p=p,
            gen=gen,
            conn=conn,
            dim=dim,
            g=g,
            g_prime=g_prime,
            a=a,
            b=b,
            big_b=big_b,
            theta=theta,
            theta_safe=theta_safe,
            profile=profile,
            tau_const=tau_const,
            precision_bits=profile.precision_bits,
        )

    @property
    def ratio(self) -> Fraction:
        """(conn + 1) / (dim + 1), the exponent compression factor."""
        return Fraction(self.conn + 1, self.dim + 1)

    def n_of(self, m: int) -> int | None:
        """Largest n >= 0 with M >= g (1/ratio) n + 2(p-1)(b+1) + B, else None."""
        num = m - 2 * (self.p - 1) * (self.b + 1) - self.big_b
        n = math.floor(num * self.ratio / self.g)
        return n if n >= 0 else None


@lru_cache(maxsize=None)
def _ktheory_params(p: int, gen: GeneratorSet, conn: int, dim: int, n_hint: int, _floor: int) -> KTheoryParams:
    return KTheoryParams.create(p, gen, conn, dim, n_hint)


def ktheory_params(p: int, gen: GeneratorSet, conn: int, dim: int, n_max: int) -> KTheoryParams:
    floor = int(os.environ.get("TORSION_BOUNDS_PRECISION", "0") or 0)
    return _ktheory_params(p, gen, conn, dim, max(64 * math.ceil(n_max / 64), 64), floor)


@dataclass(frozen=True)
class BoundReport:
    """One guaranteed lower bound at one degree, with provenance."""

    degree: int
    bound: mpf
    theorem: str
    vacuous: bool
    precision_bits: int
    exact_rank: int | None = None
    note: str = ""
    constants: tuple[tuple[str, str], ...] = ()


def _exponent_budget(params: KTheoryParams, m: int) -> int:
    return m + 8 * (params.p - 1) ** 2 * params.g + 64


def ktheory_lower(params: KTheoryParams, m: int) -> BoundReport:
    """Fully explicit guaranteed bound for the p-torsion rank in degree M.

    bound = phi^{ng}/(n + 8(p-1)^2) - g phi^{(n+8(p-1)^2)g/2}
            - q_l (3 + 2 |psi|^{(n+8(p-1)^2)g}),  n = n(M);
    below the threshold where n(M) < 0 the report carries bound 0 and a tag.
    """
    if m < 1:
        raise InvalidArgument(f"M must be >= 1, got {m}")
    if m % params.g_prime:
        raise InvalidArgument(f"M={m} is not a multiple of g'={params.g_prime}")
    profile = profile_for_exponent(params.gen, _exponent_budget(params, m))
    bits = profile.precision_bits
    n = params.n_of(m)
    snapshot = _constants_snapshot(params)
    if n is None:
        return BoundReport(
            degree=m,
            bound=mpf(0),
            theorem="ktheory_guaranteed",
            vacuous=True,
            precision_bits=bits,
            note="below-threshold",
            constants=snapshot,
        )
    with mp.workprec(bits):
        phi = profile.phi
        big_e = n + 8 * (params.p - 1) ** 2
        value = phi ** (n * params.g) / big_e
        value -= params.g * phi ** (mpf(big_e * params.g) / 2)
        if profile.has_psi:
            value -= params.gen.q_max * (3 + 2 * profile.psi_abs ** (big_e * params.g))
        return BoundReport(
            degree=m,
            bound=value,
            theorem="ktheory_guaranteed",
            vacuous=bool(value <= 0),
            precision_bits=bits,
            note=f"n(M)={n}",
            constants=snapshot,
        )


def ktheory_main_term(params: KTheoryParams, m: int) -> mpf:
    """Display form tau / ((1/g) ratio M + theta_safe) * phi^{ratio M}."""
    profile = profile_for_exponent(params.gen, _exponent_budget(params, m))
    with mp.workprec(profile.precision_bits):
        denom = _mpf_of(params.ratio) * m / params.g + _mpf_of(params.theta_safe)
        if denom <= 0:
            return mpf(0)
        return params.tau_const / denom * profile.phi ** _mpf_of(params.ratio * m)


def weak_lower(params: KTheoryParams, m: int, epsilon) -> mpf:
    """(1 / M^{1+eps}) phi^{ratio M}."""
    if m < 1:
        raise InvalidArgument(f"M must be >= 1, got {m}")
    if m % params.g_prime:
        raise InvalidArgument(f"M={m} is not a multiple of g'={params.g_prime}")
    eps = _as_fraction(epsilon, "epsilon")
    if eps <= 0:
        raise InvalidArgument(f"epsilon must be > 0, got {epsilon}")
    profile = profile_for_exponent(params.gen, _exponent_budget(params, m))
    with mp.workprec(profile.precision_bits):
        exponent = _mpf_of(params.ratio * m)
        return profile.phi**exponent / mpf(m) ** (1 + _mpf_of(eps))


def _constants_snapshot(params: KTheoryParams) -> tuple[tuple[str, str], ...]:
    return (
        ("p", str(params.p)),
        ("degrees", params.gen.spec_string()),
        ("conn", str(params.conn)),
        ("dim", str(params.dim)),
        ("g", str(params.g)),
        ("g_prime", str(params.g_prime)),
        ("a", str(params.a)),
        ("b", str(params.b)),
        ("B", str(params.big_b)),
        ("theta", str(params.theta)),
        ("theta_safe", str(params.theta_safe)),
    )
