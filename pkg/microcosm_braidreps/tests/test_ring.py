"""
Laurent polynomial and q-number tests.

"""
from random import Random

from hamcrest import (
    assert_that,
    calling,
    equal_to,
    is_,
    raises,
)
from sympy import QQ

from microcosm_braidreps.errors import ParameterError, RingError
from microcosm_braidreps.ring import (
    BRACKET,
    ONE,
    PAREN,
    Q,
    T,
    V,
    ZERO,
    LaurentPolynomial,
    gauss_binomial,
    q_bracket,
    q_factorial,
    q_paren,
    rational,
)


def random_polynomial(generator):
    return LaurentPolynomial({
        (generator.randint(-3, 3), generator.randint(-2, 2)): generator.randint(-5, 5)
        for _ in range(generator.randint(0, 4))
    })


class TestLaurentPolynomial:

    def setup(self):
        self.generator = Random(17)

    def test_canonical_terms(self):
        """
        Zero coefficients are dropped, so equal polynomials have equal term maps.

        """
        polynomial = LaurentPolynomial({(1, 0): 2, (0, 1): 0}) + LaurentPolynomial({(1, 0): -2})
        assert_that(polynomial.is_zero, is_(equal_to(True)))
        assert_that(polynomial.terms, is_(equal_to({})))
        assert_that(Q + 1, is_(equal_to(1 + Q)))
        assert_that({1 + Q: "found"}[Q + 1], is_(equal_to("found")))

    def test_promotes_integers_and_rationals(self):
        assert_that(LaurentPolynomial.constant(5), is_(equal_to(5)))
        assert_that(Q * rational(1, 2) + rational(1, 2), is_(equal_to((Q + 1) * rational(1, 2))))
        assert_that(rational(2, -4), is_(equal_to(QQ(-1, 2))))

    def test_ring_laws(self):
        """
        Addition and multiplication are commutative, associative and distributive.

        """
        for _ in range(40):
            a, b, c = (random_polynomial(self.generator) for _ in range(3))
            assert_that(a + b, is_(equal_to(b + a)))
            assert_that(a * b, is_(equal_to(b * a)))
            assert_that((a + b) + c, is_(equal_to(a + (b + c))))
            assert_that((a * b) * c, is_(equal_to(a * (b * c))))
            assert_that(a * (b + c), is_(equal_to(a * b + a * c)))
            assert_that(a - a, is_(equal_to(ZERO)))

    def test_units(self):
        assert_that((3 * V ** 2 * T ** -1).is_unit, is_(equal_to(True)))
        assert_that((1 + Q).is_unit, is_(equal_to(False)))
        assert_that((3 * Q).inverse(), is_(equal_to(rational(1, 3) * Q ** -1)))
        assert_that(calling((1 + Q).inverse), raises(RingError))
        assert_that(calling(ZERO.inverse), raises(RingError))

    def test_exact_division(self):
        assert_that((1 - Q ** 2) / (1 - Q), is_(equal_to(1 + Q)))
        assert_that((V ** -1 + V ** 3) / (1 + Q ** 2), is_(equal_to(V ** -1)))
        assert_that(calling((1 + Q).exact_divide).with_args(1 + Q ** 2), raises(RingError))
        assert_that(calling((1 + Q).exact_divide).with_args(ZERO), raises(RingError))
        assert_that(ZERO / (1 + T), is_(equal_to(ZERO)))

    def test_substitute_and_evaluate(self):
        assert_that((1 + Q).substitute(v=2), is_(equal_to(5)))
        assert_that((V ** -1 + T).evaluate(v=2, t=3), is_(equal_to(QQ(7, 2))))
        assert_that((Q * T).substitute(v=-1), is_(equal_to(T)))
        assert_that((V + T).substitute(v=T), is_(equal_to(2 * T)))
        assert_that(calling((V ** -1).substitute).with_args(v=0), raises(RingError))
        assert_that(calling((V + T).evaluate).with_args(v=1), raises(RingError))

    def test_exponent_overflow(self):
        assert_that(calling(LaurentPolynomial.monomial).with_args(v=2 ** 31), raises(RingError))
        assert_that(calling(V.__pow__).with_args(2 ** 31), raises(RingError))

    def test_to_text(self):
        assert_that((1 + Q + Q ** 2).to_text(), is_(equal_to("1 + q + q^2")))
        assert_that((V ** -1 + V).to_text(), is_(equal_to("v^-1 + v")))
        assert_that(Q.inverse().to_text(), is_(equal_to("q^-1")))
        assert_that((2 - T).to_text(), is_(equal_to("2 - t")))
        assert_that((-Q).to_text(), is_(equal_to("-q")))
        assert_that((rational(3, 2) * Q * T ** 2).to_text(), is_(equal_to("3/2*q*t^2")))
        assert_that(ZERO.to_text(), is_(equal_to("0")))

    def test_json(self):
        assert_that((1 + rational(1, 2) * Q).to_json(), is_(equal_to([
            dict(coeff=[1, 1], exp=[0, 0]),
            dict(coeff=[1, 2], exp=[2, 0]),
        ])))
        polynomial = 3 * V ** -1 * T - 7
        assert_that(LaurentPolynomial.from_json(polynomial.to_json()), is_(equal_to(polynomial)))


def test_q_paren():
    assert_that(q_paren(3), is_(equal_to(1 + Q + Q ** 2)))
    assert_that(q_paren(4), is_(equal_to((1 + Q) * (1 + Q ** 2))))
    assert_that(q_paren(5, 1), is_(equal_to(5)))
    assert_that(q_paren(0), is_(equal_to(ZERO)))


def test_q_bracket():
    assert_that(q_bracket(2), is_(equal_to(V + V ** -1)))
    assert_that(q_bracket(2), is_(equal_to(V ** -1 * q_paren(2, Q))))
    assert_that(q_bracket(1), is_(equal_to(ONE)))
    assert_that(q_bracket(0), is_(equal_to(ZERO)))
    assert_that(q_bracket(2, Q), is_(equal_to(Q + Q ** -1)))


def test_q_factorial():
    assert_that(q_factorial(3), is_(equal_to((1 + Q) * (1 + Q + Q ** 2))))
    assert_that(q_factorial(3, BRACKET), is_(equal_to(V ** -3 * q_factorial(3, PAREN, Q))))
    assert_that(q_factorial(0), is_(equal_to(ONE)))
    assert_that(q_factorial(4, PAREN, 1), is_(equal_to(24)))


def test_bracket_paren_conversion():
    """
    [n]! v^(n(n-1)/2) = (n)!_{v^2}.

    """
    for n in range(13):
        assert_that(
            q_factorial(n, BRACKET) * V ** (n * (n - 1) // 2),
            is_(equal_to(q_factorial(n, PAREN, Q))),
        )


def test_gauss_binomial():
    assert_that(gauss_binomial(4, 2), is_(equal_to(1 + Q + 2 * Q ** 2 + Q ** 3 + Q ** 4)))
    assert_that(gauss_binomial(4, 2), is_(equal_to((1 + Q ** 2) * (1 + Q + Q ** 2))))
    assert_that(gauss_binomial(4, 2, q=1), is_(equal_to(6)))
    assert_that(gauss_binomial(3, 1), is_(equal_to(1 + Q + Q ** 2)))
    assert_that(gauss_binomial(2, 1, BRACKET), is_(equal_to(V + V ** -1)))
    assert_that(calling(gauss_binomial).with_args(3, 4), raises(ParameterError))
    assert_that(calling(gauss_binomial).with_args(3, -1), raises(ParameterError))
    assert_that(calling(gauss_binomial).with_args(3, 1, "curly"), raises(ParameterError))


def test_gauss_binomial_recurrence_and_symmetry():
    for n in range(1, 13):
        for k in range(1, n):
            assert_that(
                gauss_binomial(n, k),
                is_(equal_to(gauss_binomial(n - 1, k - 1) + Q ** k * gauss_binomial(n - 1, k))),
            )
        for k in range(n + 1):
            assert_that(gauss_binomial(n, k), is_(equal_to(gauss_binomial(n, n - k))))


def test_gauss_binomial_matches_factorials():
    for n in range(7):
        for k in range(n + 1):
            assert_that(
                gauss_binomial(n, k) * q_factorial(k) * q_factorial(n - k),
                is_(equal_to(q_factorial(n))),
            )


def test_items_are_sorted():
    polynomial = T + V ** -1 + 2
    assert_that([exponent for exponent, _ in polynomial.items()], is_(equal_to([(-1, 0), (0, 0), (0, 1)])))
