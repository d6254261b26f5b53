"""Characteristic polynomials of generator sets, exact Newton power sums,
and certified root profiles (phi, |psi|, g).

The dominant root phi is certified by sign-change bisection in exact
dyadic arithmetic, so the stored enclosure [phi_lo, phi_hi] really does
satisfy P(phi_lo) < 0 < P(phi_hi).  The full complex root cloud is only
needed for |psi| and is produced by Aberth-Ehrlich simultaneous iteration
with a residual acceptance gate; phi itself never depends on that path.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import mpmath
from mpmath import mp, mpf

from .errors import InvalidArgument, NumericFailure, RootStructureViolation

__all__ = [
    "GeneratorSet",
    "MonicIntPoly",
    "RootProfile",
    "certified_phi",
    "char_poly",
    "newton_sums",
    "precision_for_exponent",
    "root_profile",
    "profile_for_exponent",
]

# relative tolerance deciding "this root's modulus equals phi"
ORBIT_TIE_TOL = 1e-8
# acceptance on the roots-of-unity pattern of the max-modulus orbit
ORBIT_PATTERN_TOL = 1e-6
# residual gate: |P(eta)| <= RESIDUAL_TOL * (1 + |eta|)^degree
RESIDUAL_TOL = 1e-9
_ABERTH_BITS = 160
_ABERTH_MAX_ITER = 500


@dataclass(frozen=True)
class GeneratorSet:
    """Distinct generator degrees q_1 < ... < q_l with multiplicities m_i >= 1."""

    degrees: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.degrees:
            raise InvalidArgument("a generator set needs at least one degree")
        prev = 0
        for q, m in self.degrees:
            if q < 1 or m < 1:
                raise InvalidArgument(f"degrees and multiplicities must be >= 1, got ({q}, {m})")
            if q <= prev:
                raise InvalidArgument("degrees must be strictly increasing")
            prev = q

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "GeneratorSet":
        return cls(tuple((int(q), int(m)) for q, m in pairs))

    @classmethod
    def parse(cls, text: str) -> "GeneratorSet":
        """Parse 'q1:m1,q2:m2,...', e.g. '2:1,3:1'."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                q, _, m = chunk.partition(":")
                pairs.append((int(q), int(m) if m else 1))
            except ValueError:
                raise InvalidArgument(f"bad degree spec {chunk!r}, expected q:m") from None
        if not pairs:
            raise InvalidArgument("empty degree spec")
        return cls.of(*pairs)

    @cached_property
    def g(self) -> int:
        return math.gcd(*(q for q, _ in self.degrees))

    @property
    def q_max(self) -> int:
        return self.degrees[-1][0]

    @property
    def sum_m(self) -> int:
        return sum(m for _, m in self.degrees)

    def spec_string(self) -> str:
        return ",".join(f"{q}:{m}" for q, m in self.degrees)


@dataclass(frozen=True)
class MonicIntPoly:
    """z^k + a_{k-1} z^{k-1} + ... + a_0, integer coefficients; coeffs[i] = a_i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise InvalidArgument("polynomial degree must be >= 1")
        if self.coeffs[-1] != 1:
            raise InvalidArgument("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = self.coeffs[-1]
        for a in reversed(self.coeffs[:-1]):
            acc = acc * x + a
        return acc

    def derivative_at(self, x):
        acc = 0
        for i in range(self.degree, 0, -1):
            acc = acc * x + i * self.coeffs[i]
        return acc

    def eval_scaled(self, num: int, shift: int) -> int:
        """Exact P(num / 2^shift) * 2^(shift*degree); only the sign matters."""
        k = self.degree
        acc = self.coeffs[k]
        for j in range(k - 1, -1, -1):
            acc = acc * num + (self.coeffs[j] << (shift * (k - j)))
        return acc

    def is_dominant_family(self) -> bool:
        """True for z^k - sum c_i z^i with all c_i >= 0, c_0 >= 1."""
        return self.coeffs[0] <= -1 and all(a <= 0 for a in self.coeffs[:-1])

    def coeff_bound(self) -> int:
        """1 + max |a_i| over non-leading coefficients: bounds every root modulus."""
        return 1 + max(abs(a) for a in self.coeffs[:-1])


def char_poly(gen: GeneratorSet) -> MonicIntPoly:
    """z^{q_l} - sum_i m_i z^{q_l - q_i}; the reciprocal of 1 - sum_i m_i z^{q_i}."""
    k = gen.q_max
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    for q, m in gen.degrees:
        coeffs[k - q] -= m
    return MonicIntPoly(tuple(coeffs))


def newton_sums(poly: MonicIntPoly, n_max: int) -> list[int]:
    """Exact power sums S_1..S_{n_max} of the roots, by Newton's identities."""
    if n_max < 1:
        raise InvalidArgument(f"newton_sums requires N >= 1, got {n_max}")
    k, a = poly.degree, poly.coeffs
    sums: list[int] = []
    for n in range(1, n_max + 1):
        acc = n * a[k - n] if n <= k else 0
        for i in range(1, min(n - 1, k) + 1):
            acc += a[k - i] * sums[n - i - 1]
        sums.append(-acc)
    return sums


def precision_for_exponent(n_max: int, phi_upper: float) -> int:
    """Bits so that phi^n_max still carries >= 64 correct bits.

    The TORSION_BOUNDS_PRECISION environment variable raises the floor.
    """
    bits = math.ceil(max(n_max, 1) * math.log2(max(phi_upper, 1.0) + 1e-9)) + 64
    floor = int(os.environ.get("TORSION_BOUNDS_PRECISION", "0") or 0)
    return max(bits, 64, floor)


def _certified_enclosure(poly: MonicIntPoly, bits: int) -> tuple[int, int, int]:
    """Dyadic (lo_num, hi_num, shift) with P(lo) < 0 < P(hi), hi - lo <= 2^-bits."""
    lo_num, hi_num, shift = 0, poly.coeff_bound(), 0
    while True:
        s = poly.eval_scaled(hi_num, shift)
        if s > 0:
            break
        if s == 0:
            return _exact_root_enclosure(poly, hi_num, shift, bits)
        hi_num *= 2
    # P(0) = a_0 <= -1 for this family, so the bracket is valid from the start.
    # Each step halves the width; run until width <= 2^-bits.
    steps = bits + (hi_num - lo_num).bit_length()
    for _ in range(steps):
        lo_num, hi_num, shift = lo_num * 2, hi_num * 2, shift + 1
        mid = (lo_num + hi_num) // 2
        s = poly.eval_scaled(mid, shift)
        if s == 0:
            return _exact_root_enclosure(poly, mid, shift, bits)
        if s < 0:
            lo_num = mid
        else:
            hi_num = mid
    return lo_num, hi_num, shift


def _exact_root_enclosure(poly: MonicIntPoly, num: int, shift: int, bits: int) -> tuple[int, int, int]:
    # phi = num / 2^shift exactly; return a strict sign bracket around it
    extra = max(bits + 2 - shift, 1)
    num <<= extra
    shift += extra
    lo, hi = num - 1, num + 1
    if not (poly.eval_scaled(lo, shift) < 0 < poly.eval_scaled(hi, shift)):
        raise NumericFailure("sign bracket around exact dominant root failed")
    return lo, hi, shift


def _aberth_roots(poly: MonicIntPoly, bits: int) -> tuple[list, list]:
    """All complex roots by Aberth-Ehrlich iteration; returns (roots, residuals)."""
    k = poly.degree
    with mp.workprec(bits):
        if k == 1:
            z = [mpmath.mpc(-poly.coeffs[0])]
            return z, [abs(poly(z[0]))]
        radius = max(mpf(abs(poly.coeffs[0])) ** (mpf(1) / k), mpf("0.5"))
        # slightly irrational angular offset so symmetric configurations cannot lock
        z = [radius * mpmath.expjpi(mpf(2 * j + 1) / k + mpf(1) / (3 * k + 1)) for j in range(k)]
        step_tol = mpf(2) ** (-(bits - 8))
        for _ in range(_ABERTH_MAX_ITER):
            max_step = mpf(0)
            for i in range(k):
                pv = poly(z[i])
                if pv == 0:
                    continue
                dv = poly.derivative_at(z[i])
                if dv == 0:
                    z[i] += step_tol + mpf("1e-3")
                    max_step = mpf(1)
                    continue
                w = pv / dv
                s = mpmath.fsum((1 / (z[i] - z[j]) for j in range(k) if j != i), absolute=False)
                denom = 1 - w * s
                delta = w if denom == 0 else w / denom
                z[i] -= delta
                max_step = max(max_step, abs(delta) / (1 + abs(z[i])))
            if max_step <= step_tol:
                break
        residuals = [abs(poly(zi)) for zi in z]
        gate = [RESIDUAL_TOL * (1 + abs(zi)) ** k for zi in z]
        bad = [i for i in range(k) if residuals[i] > gate[i]]
        if bad:
            raise NumericFailure(
                f"root iteration left residuals above gate at indices {bad}; "
                f"max residual {mpmath.nstr(max(residuals), 8)}"
            )
        return z, residuals


@dataclass(frozen=True)
class RootProfile:
    """Certified phi enclosure plus the residual-checked complex root cloud."""

    phi: mpf
    phi_lo: Fraction
    phi_hi: Fraction
    psi_abs: mpf | None
    g: int
    roots: tuple
    residuals: tuple
    root_errors: tuple
    precision_bits: int

    @property
    def has_psi(self) -> bool:
        return self.psi_abs is not None

    def psi_or_zero(self) -> mpf:
        return self.psi_abs if self.psi_abs is not None else mpf(0)


def certified_phi(poly: MonicIntPoly, precision_bits: int) -> tuple[Fraction, Fraction, mpf]:
    """Sign-certified enclosure of the positive real root, bisection only.

    Cheap path for callers that do not need the complex root cloud.
    """
    if precision_bits < 64:
        raise InvalidArgument(f"precision_bits must be >= 64, got {precision_bits}")
    if not poly.is_dominant_family():
        raise InvalidArgument(
            "certified_phi expects z^k - sum c_i z^i with c_i >= 0 and c_0 >= 1"
        )
    if poly(1) > 0:
        # impossible for the family above (P(1) = 1 - sum c_i <= 0): phi >= 1 always
        raise NumericFailure("P(1) > 0; the dominant root would be below 1")
    lo_num, hi_num, shift = _certified_enclosure(poly, precision_bits)
    with mp.workprec(precision_bits + 32):
        phi = (mpf(lo_num) + mpf(hi_num)) / mpf(2) ** (shift + 1)
    return Fraction(lo_num, 2**shift), Fraction(hi_num, 2**shift), phi


def root_profile(poly: MonicIntPoly, g: int, precision_bits: int) -> RootProfile:
    """Certify phi to precision_bits and classify the root moduli.

    Raises RootStructureViolation when the max-modulus orbit does not
    consist of exactly g roots forming phi times the g-th roots of unity.
    """
    if g < 1:
        raise InvalidArgument(f"g must be >= 1, got {g}")
    phi_lo, phi_hi, phi = certified_phi(poly, precision_bits)

    aberth_bits = max(_ABERTH_BITS, min(precision_bits, 320))
    roots, residuals = _aberth_roots(poly, aberth_bits)
    with mp.workprec(aberth_bits):
        phi_w = (mpf(phi_lo.numerator) / phi_lo.denominator + mpf(phi_hi.numerator) / phi_hi.denominator) / 2
        moduli = [abs(z) for z in roots]
        orbit = [i for i, m in enumerate(moduli) if m >= phi_w * (1 - ORBIT_TIE_TOL)]
        rest = [i for i in range(len(roots)) if i not in orbit]
        if len(orbit) != g:
            raise RootStructureViolation(
                f"expected {g} max-modulus roots, found {len(orbit)} "
                f"(moduli {[mpmath.nstr(m, 10) for m in moduli]})"
            )
        for i in orbit:
            if abs((roots[i] / phi_w) ** g - 1) > ORBIT_PATTERN_TOL:
                raise RootStructureViolation(
                    f"max-modulus root {mpmath.nstr(roots[i], 10)} is not phi times "
                    f"a {g}-th root of unity"
                )
        psi_abs = max((moduli[i] for i in rest), default=None)
        errors = []
        for i, z in enumerate(roots):
            dv = abs(poly.derivative_at(z))
            errors.append(residuals[i] / dv if dv > 0 else mpf("inf"))
    return RootProfile(
        phi=phi,
        phi_lo=phi_lo,
        phi_hi=phi_hi,
        psi_abs=psi_abs,
        g=g,
        roots=tuple(roots),
        residuals=tuple(residuals),
        root_errors=tuple(errors),
        precision_bits=precision_bits,
    )


@lru_cache(maxsize=None)
def _cached_profile(coeffs: tuple[int, ...], g: int, bits: int) -> RootProfile:
    return root_profile(MonicIntPoly(coeffs), g, bits)


def profile_for_exponent(gen: GeneratorSet, n_max: int) -> RootProfile:
    """Root profile of char_poly(gen) at precision auto-scaled for phi^n_max.

    Precision is bucketed to 64-bit steps so sweeps share cached profiles.
    """
    poly = char_poly(gen)
    bits = precision_for_exponent(n_max, poly.coeff_bound())
    bits = 64 * math.ceil(bits / 64)
    return _cached_profile(poly.coeffs, gen.g, bits)
