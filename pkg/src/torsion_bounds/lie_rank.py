"""Exact ranks of free graded Lie algebras.

Two independent routes are implemented: the divisor-sum Moebius formula
driven by exact Newton power sums (babenko_rank), and a graded
Poincare-Birkhoff-Witt power-series solve against the Hilbert series of
the tensor algebra (pbw_ranks).  Their entrywise agreement is the central
correctness gate of the whole package.
"""

from __future__ import annotations

import math

from .charpoly import GeneratorSet, char_poly, newton_sums
from .combinat import divisors, mobius
from .errors import InternalError, InvalidArgument, OracleInconsistency

__all__ = ["babenko_rank", "babenko_ranks", "pbw_ranks", "tensor_dims"]


def tensor_dims(gen: GeneratorSet, n_max: int) -> list[int]:
    """T_0..T_N of the tensor algebra: T_0 = 1, T_n = sum_i m_i T_{n-q_i}."""
    if n_max < 0:
        raise InvalidArgument(f"tensor_dims requires N >= 0, got {n_max}")
    dims = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        dims[n] = sum(m * dims[n - q] for q, m in gen.degrees if q <= n)
    return dims


def babenko_ranks(gen: GeneratorSet, n_max: int) -> list[int]:
    """rank(L_1)..rank(L_N) by the divisor-sum formula, all exact integers."""
    if n_max < 1:
        raise InvalidArgument(f"babenko_ranks requires N >= 1, got {n_max}")
    sums = newton_sums(char_poly(gen), n_max)
    ranks = []
    for n in range(1, n_max + 1):
        total = sum(
            (-1) ** (n // d) * mobius(d) * sums[n // d - 1] for d in divisors(n)
        )
        total *= (-1) ** n
        q, r = divmod(total, n)
        if r:
            raise InternalError(f"divisor sum for N={n} not divisible by N ({gen.spec_string()})")
        if q < 0:
            raise InternalError(f"negative rank {q} at N={n} ({gen.spec_string()})")
        ranks.append(q)
    return ranks


def babenko_rank(gen: GeneratorSet, n: int) -> int:
    """rank(L_n); zero whenever gcd of the degrees does not divide n."""
    if n < 1:
        raise InvalidArgument(f"babenko_rank requires N >= 1, got {n}")
    return babenko_ranks(gen, n)[n - 1]


def pbw_ranks(gen: GeneratorSet, n_max: int) -> list[int]:
    """r_1..r_N solving prod_{n odd}(1+t^n)^{r_n} prod_{n even}(1-t^n)^{-r_n} = T(t).

    Solved degree by degree in exact integer arithmetic; a degree-n element
    is odd iff n is odd.  Independent of the Newton/Moebius route.
    """
    if n_max < 1:
        raise InvalidArgument(f"pbw_ranks requires N >= 1, got {n_max}")
    return _pbw_solve(tensor_dims(gen, n_max), n_max)


def _pbw_solve(target: list[int], n_max: int) -> list[int]:
    series = [0] * (n_max + 1)
    series[0] = 1
    ranks = []
    for n in range(1, n_max + 1):
        r = target[n] - series[n]
        if r < 0:
            raise OracleInconsistency(
                f"series solve produced negative multiplicity {r} in degree {n}"
            )
        ranks.append(r)
        if r == 0:
            continue
        factor = [0] * (n_max + 1)
        factor[0] = 1
        for j in range(1, n_max // n + 1):
            factor[n * j] = math.comb(r, j) if n % 2 else math.comb(r + j - 1, j)
        series = _mul_trunc(series, factor, n_max)
    return ranks


def _mul_trunc(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(0, n_max - i + 1):
                if b[j]:
                    out[i + j] += ai * b[j]
    return out
