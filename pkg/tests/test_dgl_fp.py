import numpy as np
import pytest

from torsion_bounds import (
    DegreeLimitExceeded,
    FpMatrix,
    FreeDgl,
    GeneratorSet,
    InvalidArgument,
    WeightedAlphabet,
    babenko_ranks,
    basis,
    bracket,
    differential,
    sigma,
    subspace_dims,
    tau,
)
from torsion_bounds.combinat import binom_div_p
from torsion_bounds.verify import (
    check_basis_certification,
    check_cycle_elements,
    check_differential_squares_to_zero,
    check_graded_jacobi,
    check_rank_nullity,
)

MOORE_D = {"x": "y", "y": None}


def moore_algebra(q, p, up_to):
    return FreeDgl(WeightedAlphabet.moore(q), p, up_to, MOORE_D)


def test_alphabet_validation():
    with pytest.raises(InvalidArgument):
        WeightedAlphabet((("x", 1), ("x", 2)))
    with pytest.raises(InvalidArgument):
        WeightedAlphabet((("x", 0),))
    alpha = WeightedAlphabet.moore(2)
    assert alpha.letters == (("x", 3), ("y", 2))
    assert alpha.generator_set() == GeneratorSet.of((2, 1), (3, 1))


def test_basis_size_examples():
    sizes = [len(v) for v in basis(WeightedAlphabet.moore(2), 6).values()]
    assert sizes == [0, 1, 1, 0, 1, 1]
    sizes = [len(v) for v in basis(WeightedAlphabet((("x", 1),)), 3).values()]
    assert sizes == [1, 1, 0]
    sizes = [len(v) for v in basis(WeightedAlphabet((("x", 1), ("y", 1))), 2).values()]
    assert sizes == [2, 3]


def test_basis_matches_rank_formula_and_is_independent():
    assert check_basis_certification(qs=(2, 3), ps=(3, 5), up_to=14) == []


def test_basis_certified_against_formula_two_odd_letters():
    alg = FreeDgl(WeightedAlphabet((("x", 1), ("y", 1))), 3, 10)
    assert alg.dims() == babenko_ranks(GeneratorSet.of((1, 2)), 10)


def test_bracket_even_square_vanishes():
    alg = moore_algebra(2, 3, 14)
    y = alg.letter("y")  # degree 2, even
    assert alg.bracket(y, y).is_zero()


def test_bracket_of_letters_is_basis_element():
    alg = moore_algebra(2, 3, 14)
    out = alg.bracket(alg.letter("x"), alg.letter("y"))
    assert len(out.coeffs) == 1
    (be, c), = out.coeffs.items()
    assert not be.is_square and be.degree == 5 and c in (1, alg.p - 1)


def test_bracket_odd_square_is_square_element():
    alg = moore_algebra(2, 3, 14)
    x = alg.letter("x")  # degree 3, odd
    out = alg.bracket(x, x)
    (be, c), = out.coeffs.items()
    assert be.is_square and be.degree == 6 and c == 1


def test_bracket_degree_cap_fails_loudly():
    alg = moore_algebra(2, 3, 5)
    x = alg.letter("x")
    with pytest.raises(DegreeLimitExceeded):
        alg.bracket(x, x)  # degree 6 > cap 5


def test_module_level_wrappers():
    alg = moore_algebra(2, 3, 14)
    x, y = alg.letter("x"), alg.letter("y")
    assert bracket(x, y) == alg.bracket(x, y)
    assert differential(x) == alg.differential(x)
    alg_q3 = moore_algebra(3, 3, 12)
    assert sigma(alg_q3.letter("x"), 1, 3) == alg_q3.sigma(alg_q3.letter("x"), 1)


def test_differential_examples():
    alg = moore_algebra(2, 3, 14)
    x, y = alg.letter("x"), alg.letter("y")
    assert alg.differential(x) == y
    assert alg.differential(y).is_zero()
    # d[x,x] = [y,x] - [x,y] = -2[x,y]; mod 3 the coefficient is 1
    xx = alg.bracket(x, x)
    dxx = alg.differential(xx)
    xy = alg.bracket(x, y)
    assert dxx == (-2) * xy


def test_differential_squares_to_zero():
    assert check_differential_squares_to_zero(qs=(2, 3), ps=(3, 5), up_to=12) == []


def test_graded_jacobi_sample():
    assert check_graded_jacobi(samples=60, seed=5) == []


def test_tau_is_iterated_bracket():
    # q=3, p=3: tau_1(x) = [x, [x, y]] in degree 11
    alg = moore_algebra(3, 3, 12)
    x, y = alg.letter("x"), alg.letter("y")
    t = alg.tau(x, 1)
    assert t.degree == 11
    assert t == alg.bracket(x, alg.bracket(x, y))
    assert alg.differential(t).is_zero()


def test_sigma_degree_and_cycle():
    alg = moore_algebra(3, 3, 12)
    x = alg.letter("x")
    s = alg.sigma(x, 1)
    assert s.degree == 10
    assert not s.is_zero()
    assert alg.differential(s).is_zero()


def test_sigma_pairs_combine_by_antisymmetry():
    'the j and p^k - j terms are equal, so the half-sum has integer form'
    alg = moore_algebra(3, 3, 12)
    x = alg.letter("x")
    pk = 3
    du = alg.differential(x)
    ad = [du]
    for _ in range(pk - 2):
        ad.append(alg.bracket(x, ad[-1]))
    explicit = alg.zero(10)
    for j in range(1, (pk - 1) // 2 + 1):
        c = binom_div_p(3, 1, j) % 3
        explicit = explicit + c * alg.bracket(ad[j - 1], ad[pk - 1 - j])
    assert explicit == alg.sigma(x, 1)


def test_tau_sigma_preconditions():
    alg = moore_algebra(2, 3, 14)
    x = alg.letter("x")  # degree 3: odd, not allowed
    with pytest.raises(InvalidArgument):
        alg.tau(x, 1)
    alg2 = moore_algebra(3, 3, 6)
    with pytest.raises(DegreeLimitExceeded):
        alg2.tau(alg2.letter("x"), 1)  # needs degree 11
    with pytest.raises(InvalidArgument):
        tau(moore_algebra(3, 3, 12).letter("x"), 1, 5)  # p mismatch


def test_cycle_elements_check():
    assert check_cycle_elements(3, 3) == []


def test_subspace_dims_examples():
    dims = subspace_dims(WeightedAlphabet.moore(2), MOORE_D, 3, 6)
    assert dims["boundaries"][2 - 1] == 1  # d(x) = y spans L_2
    assert dims["boundaries"][4 - 1] == 0  # L_4 = 0
    assert dims["boundaries"][5 - 1] == 1  # d[x,x] = -2[y,x] != 0
    assert dims["dim"] == [0, 1, 1, 0, 1, 1]


def test_rank_nullity_and_nonnegative_homology():
    assert check_rank_nullity(2, 3, 12) == []
    assert check_rank_nullity(3, 5, 12) == []


def test_fp_matrix_rank():
    mat = FpMatrix([[1, 2, 0], [2, 4, 0], [0, 0, 3]], 5)
    assert mat.rank() == 2  # row 2 = 2*row 1 mod 5
    assert FpMatrix(np.zeros((2, 3), dtype=int), 3).rank() == 0


def test_algebra_validation():
    with pytest.raises(InvalidArgument):
        FreeDgl(WeightedAlphabet.moore(2), 2, 6)  # p must be odd prime
    with pytest.raises(InvalidArgument):
        FreeDgl(WeightedAlphabet.moore(2), 3, 6, {"x": "x"})  # not degree -1
    alg = FreeDgl(WeightedAlphabet.moore(2), 3, 6)
    with pytest.raises(InvalidArgument):
        alg.differential(alg.letter("x"))  # no differential configured
