import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkinv.algebra import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    LaurentPolynomial,
    SymmetricForm,
    ZeroAtNegativeExponent,
    ZeroPolynomial,
    bareiss_determinant_int,
    congruence_diagonalize,
    fraction_determinant,
    i_power,
    laurent_eval,
    resultant,
    t_derivative_at_minus1,
)

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=7),
)

gauss = st.builds(GaussianRational.of, small_fractions, small_fractions)

small_laurent = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPolynomial.from_int_coeffs)


class TestGaussianRational:
    def test_i_squared(self):
        assert GR_I * GR_I == -GR_ONE

    def test_i_powers_cycle(self):
        assert [i_power(k) for k in range(4)] == [GR_ONE, GR_I, -GR_ONE, -GR_I]
        assert i_power(-1) == -GR_I
        assert i_power(-2) == -GR_ONE

    @given(gauss, gauss)
    def test_division_inverts_multiplication(self, a, b):
        if not b.is_zero():
            assert (a * b) / b == a

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GR_ONE / GR_ZERO


class TestLaurentEval:
    def test_q_plus_qinv_at_i(self):
        p = LaurentPolynomial.from_int_coeffs({1: 1, -1: 1})
        assert laurent_eval(p, GR_I) == GR_ZERO

    def test_constant(self):
        p = LaurentPolynomial.constant(1)
        assert laurent_eval(p, GaussianRational.of(Fraction(7, 3), 5)) == GR_ONE

    def test_square_plus_two_at_i(self):
        # q^2 + 2 + q^-2 at q = i: -1 + 2 - 1 = 0, by hand.
        p = LaurentPolynomial.from_int_coeffs({2: 1, 0: 2, -2: 1})
        assert laurent_eval(p, GR_I) == GR_ZERO

    def test_zero_at_negative_exponent(self):
        p = LaurentPolynomial.from_int_coeffs({-1: 1})
        with pytest.raises(ZeroAtNegativeExponent):
            laurent_eval(p, GR_ZERO)

    @given(small_laurent, small_laurent, gauss)
    @settings(max_examples=60)
    def test_eval_is_multiplicative(self, p, q, x):
        if x.is_zero():
            x = GR_I
        assert laurent_eval(p * q, x) == laurent_eval(p, x) * laurent_eval(q, x)


class TestTDerivative:
    def test_q_plus_qinv(self):
        # (1 - q^-2)/(2q) at q = i equals 2/(2i) = -i, by hand.
        p = LaurentPolynomial.from_int_coeffs({1: 1, -1: 1})
        assert t_derivative_at_minus1(p) == -GR_I

    def test_constant(self):
        assert t_derivative_at_minus1(LaurentPolynomial.constant(1)) == GR_ZERO

    def test_even_symmetric(self):
        # (2q - 2q^-3)/(2q) = 1 - q^-4 vanishes at q = i, by hand.
        p = LaurentPolynomial.from_int_coeffs({2: 1, 0: 2, -2: 1})
        assert t_derivative_at_minus1(p) == GR_ZERO

    def test_matches_difference_quotient_structure(self):
        # For p = q^(2k) (i.e. t^k), d/dt at t=-1 must be k*(-1)^(k-1).
        for k in range(-4, 5):
            p = LaurentPolynomial.monomial(2 * k)
            expect = GaussianRational.of(k * (-1) ** ((k - 1) % 2))
            assert t_derivative_at_minus1(p) == expect


def naive_determinant(rows):
    """Cofactor-expansion determinant, used as an independent oracle."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * naive_determinant(minor)
    return total


class TestResultant:
    def test_trefoil_alexander_against_p2_cyclotomic(self):
        # res(t^2 - t + 1, t + 1) = 3, checked by Sylvester cofactor oracle.
        assert resultant([1, -1, 1], [1, 1]) == 3

    def test_common_root(self):
        assert resultant([-1, 1], [-1, 1]) == 0

    def test_figure_eight_at_p2(self):
        assert resultant([1, -3, 1], [1, 1]) == 5

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomial):
            resultant([0], [1, 1])

    @given(
        st.integers(min_value=1, max_value=3),
        st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=3),
        st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=4),
    )
    @settings(max_examples=60)
    def test_product_formula_on_split_polynomials(self, lead, roots, q):
        # P = lead * prod (t - r): res(P, Q) = lead^deg(Q) * prod Q(r).
        if all(c == 0 for c in q[1:]):
            q = q[:1] + [1]
        p = [lead]
        for r in roots:
            p = [-r * c for c in p] + [0]
            for k in range(len(p) - 1):
                p[k + 1] += [lead] + p[:0] and 0  # placeholder, replaced below
        # Rebuild p properly: multiply out (t - r) factors.
        p = [lead]
        for r in roots:
            new = [0] * (len(p) + 1)
            for k, c in enumerate(p):
                new[k + 1] += c
                new[k] += -r * c
            p = new
        degq = len([c for c in q]) - 1
        while q and q[-1] == 0:
            q = q[:-1]
        degq = len(q) - 1
        expected = lead ** degq
        for r in roots:
            expected *= sum(c * r ** k for k, c in enumerate(q))
        assert resultant(p, q) == expected

    @given(st.lists(st.lists(st.integers(min_value=-5, max_value=5), min_size=4, max_size=4),
                    min_size=4, max_size=4))
    @settings(max_examples=40)
    def test_bareiss_matches_cofactor(self, rows):
        assert bareiss_determinant_int(rows) == naive_determinant(rows)


def random_unimodular(n, rng):
    """Product of elementary integer shears and swaps: determinant +-1."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        if kind == 0:
            c = rng.randint(-2, 2)
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif kind == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m


sym_entries = st.integers(min_value=-5, max_value=5)


@st.composite
def symmetric_forms(draw, max_dim=5):
    n = draw(st.integers(min_value=0, max_value=max_dim))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            v = Fraction(draw(sym_entries))
            rows[i][j] = rows[j][i] = v
    return SymmetricForm(rows)


class TestCongruenceDiagonalize:
    def test_two_by_two(self):
        s = SymmetricForm([[-2, 1], [1, -2]])
        pivots, t = congruence_diagonalize(s)
        assert sorted(pivots) == [Fraction(-2), Fraction(-3, 2)]
        assert s.congruent_by(t) == SymmetricForm.diagonal(pivots)

    def test_zero_one_by_one(self):
        pivots, _ = congruence_diagonalize(SymmetricForm([[0]]))
        assert pivots == [Fraction(0)]

    def test_hyperbolic_plane(self):
        pivots, t = congruence_diagonalize(SymmetricForm([[0, 1], [1, 0]]))
        signs = sorted(1 if p > 0 else -1 for p in pivots)
        assert signs == [-1, 1]
        assert SymmetricForm([[0, 1], [1, 0]]).congruent_by(t) == \
            SymmetricForm.diagonal(pivots)

    @given(symmetric_forms())
    @settings(max_examples=80)
    def test_transform_reconstructs_diagonal(self, s):
        for order in ("first", "max"):
            pivots, t = congruence_diagonalize(s, order=order)
            assert s.congruent_by(t) == SymmetricForm.diagonal(pivots)

    @given(symmetric_forms(max_dim=4), st.integers(min_value=0, max_value=2 ** 30))
    @settings(max_examples=40)
    def test_pivot_signs_invariant_under_congruence(self, s, seed):
        rng = random.Random(seed)
        base = congruence_diagonalize(s)[0]
        base_counts = (
            sum(1 for p in base if p > 0),
            sum(1 for p in base if p < 0),
            sum(1 for p in base if p == 0),
        )
        p = random_unimodular(s.dimension, rng)
        moved = congruence_diagonalize(s.congruent_by(p))[0]
        counts = (
            sum(1 for x in moved if x > 0),
            sum(1 for x in moved if x < 0),
            sum(1 for x in moved if x == 0),
        )
        assert counts == base_counts

    def test_hundred_random_conjugations_preserve_counts(self):
        rng = random.Random(20240817)
        s = SymmetricForm([[1, 2, 0], [2, -1, 1], [0, 1, 0]])
        base = congruence_diagonalize(s)[0]
        expect = (
            sum(1 for p in base if p > 0),
            sum(1 for p in base if p < 0),
            sum(1 for p in base if p == 0),
        )
        for _ in range(100):
            p = random_unimodular(3, rng)
            pivots = congruence_diagonalize(s.congruent_by(p))[0]
            got = (
                sum(1 for x in pivots if x > 0),
                sum(1 for x in pivots if x < 0),
                sum(1 for x in pivots if x == 0),
            )
            assert got == expect


class TestDeterminant:
    def test_empty_matrix(self):
        assert fraction_determinant([]) == 1
        assert SymmetricForm([]).determinant() == 1

    @given(symmetric_forms(max_dim=4))
    @settings(max_examples=40)
    def test_fraction_det_matches_cofactor(self, s):
        rows = [list(r) for r in s.entries]
        assert fraction_determinant(rows) == naive_determinant(rows)
