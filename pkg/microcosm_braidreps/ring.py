"""
Exact scalars: rationals and Laurent polynomials in v and t, plus q-combinatorics.

Rationals are elements of sympy's `QQ` domain. Every matrix entry is a `LaurentPolynomial`;
integers and rationals are promoted to constant polynomials on contact, so the scalar type of
the library is the polynomial itself.

The quantum parameter q is stored as v**2, which keeps q^(1/2) = v representable.

"""
from functools import lru_cache

from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from microcosm_braidreps.errors import ParameterError, RingError


VARIABLES = ("v", "t")

MAX_EXPONENT = 2 ** 31 - 1

PAREN = "paren"
BRACKET = "bracket"

_SPARSE_RING = ring(",".join(VARIABLES), QQ)[0]


def rational(numerator, denominator=1):
    """
    Build a reduced rational; the denominator is made positive.

    """
    if denominator == 0:
        raise RingError("rational with zero denominator")
    return QQ(int(numerator), int(denominator))


def _check_exponent(exponent):
    for value in exponent:
        if value > MAX_EXPONENT or value < -MAX_EXPONENT:
            raise RingError("exponent overflow: {}".format(exponent))
    return exponent


class LaurentPolynomial:
    """
    A Laurent polynomial with rational coefficients in the variables `VARIABLES`.

    The term map never stores zero coefficients, so equal polynomials have identical maps.

    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(value) for value in exponent)
            if len(exponent) != len(VARIABLES):
                raise RingError("exponent vector {} does not match variables {}".format(exponent, VARIABLES))
            _check_exponent(exponent)
            cleaned[exponent] = cleaned.get(exponent, QQ(0)) + QQ.convert(coefficient)
        self._terms = {
            exponent: coefficient
            for exponent, coefficient in cleaned.items()
            if coefficient
        }
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        instance = cls.__new__(cls)
        instance._terms = terms
        instance._hash = None
        return instance

    @classmethod
    def constant(cls, value):
        return cls({(0,) * len(VARIABLES): value})

    @classmethod
    def monomial(cls, coefficient=1, **exponents):
        unknown = set(exponents) - set(VARIABLES)
        if unknown:
            raise RingError("unknown variables: {}".format(sorted(unknown)))
        return cls({tuple(exponents.get(name, 0) for name in VARIABLES): coefficient})

    @classmethod
    def from_json(cls, terms):
        return cls({
            tuple(term["exp"]): rational(*term["coeff"])
            for term in terms
        })

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """
        Terms sorted lexicographically by exponent vector.

        """
        return sorted(self._terms.items())

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_constant(self):
        return all(not any(exponent) for exponent in self._terms)

    @property
    def is_monomial(self):
        return len(self._terms) == 1

    @property
    def is_unit(self):
        # monomials with a nonzero rational coefficient are exactly the units
        return self.is_monomial

    def constant_value(self):
        if not self.is_constant:
            raise RingError("{} is not a rational constant".format(self))
        return self._terms.get((0,) * len(VARIABLES), QQ(0))

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            total = terms.get(exponent, QQ(0)) + coefficient
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        return LaurentPolynomial._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._wrap({
            exponent: -coefficient
            for exponent, coefficient in self._terms.items()
        })

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for left_exponent, left_coefficient in self._terms.items():
            for right_exponent, right_coefficient in other._terms.items():
                exponent = tuple(a + b for a, b in zip(left_exponent, right_exponent))
                terms[exponent] = terms.get(exponent, QQ(0)) + left_coefficient * right_coefficient
        for exponent in terms:
            _check_exponent(exponent)
        return LaurentPolynomial._wrap({
            exponent: coefficient
            for exponent, coefficient in terms.items()
            if coefficient
        })

    __rmul__ = __mul__

    def inverse(self):
        """
        Invert a unit (a monomial with nonzero coefficient).

        """
        if not self.is_unit:
            raise RingError("{} is not a unit of the Laurent ring".format(self))
        [(exponent, coefficient)] = self._terms.items()
        return LaurentPolynomial._wrap({
            _check_exponent(tuple(-value for value in exponent)): 1 / coefficient,
        })

    def __pow__(self, power):
        power = int(power)
        if power < 0:
            return self.inverse() ** (-power)
        if self.is_monomial:
            [(exponent, coefficient)] = self._terms.items()
            return LaurentPolynomial._wrap({
                _check_exponent(tuple(value * power for value in exponent)): coefficient ** power,
            })
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def exact_divide(self, divisor):
        """
        Divide exactly; units divide anything, other divisors must leave no remainder.

        """
        divisor = as_scalar(divisor)
        if divisor.is_zero:
            raise RingError("division by zero")
        if divisor.is_unit:
            return self * divisor.inverse()
        if self.is_zero:
            return ZERO
        numerator_shift, numerator = self._to_sparse()
        divisor_shift, denominator = divisor._to_sparse()
        try:
            quotient = numerator.exquo(denominator)
        except ExactQuotientFailed:
            raise RingError("{} does not divide {} exactly".format(divisor, self))
        return LaurentPolynomial({
            tuple(
                value + shift - other_shift
                for value, shift, other_shift in zip(exponent, numerator_shift, divisor_shift)
            ): coefficient
            for exponent, coefficient in quotient.items()
        })

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.exact_divide(other)

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other.exact_divide(self)

    def _to_sparse(self):
        """
        Shift into a genuine polynomial of sympy's sparse ring.

        """
        shift = tuple(
            min(exponent[index] for exponent in self._terms)
            for index in range(len(VARIABLES))
        )
        return shift, _SPARSE_RING.from_dict({
            tuple(value - offset for value, offset in zip(exponent, shift)): coefficient
            for exponent, coefficient in self._terms.items()
        })

    def substitute(self, **values):
        """
        Replace variables by rationals or polynomials; negative powers need units.

        """
        unknown = set(values) - set(VARIABLES)
        if unknown:
            raise RingError("unknown variables: {}".format(sorted(unknown)))
        result = ZERO
        for exponent, coefficient in self._terms.items():
            term = LaurentPolynomial.constant(coefficient)
            kept = []
            for name, power in zip(VARIABLES, exponent):
                if name in values:
                    value = as_scalar(values[name])
                    if power < 0 and value.is_zero:
                        raise RingError("cannot substitute {}=0 into {}".format(name, self))
                    term = term * value ** power
                    kept.append(0)
                else:
                    kept.append(power)
            result = result + term * LaurentPolynomial._wrap({tuple(kept): QQ(1)})
        return result

    def evaluate(self, **values):
        return self.substitute(**values).constant_value()

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def to_text(self):
        """
        Canonical text form: terms in lexicographic exponent order, q = v^2 when possible.

        """
        if self.is_zero:
            return "0"
        use_q = all(exponent[0] % 2 == 0 for exponent in self._terms)
        pieces = []
        for exponent, coefficient in self.items():
            factors = []
            v_power, t_power = exponent
            if use_q and v_power:
                factors.append(_power_text("q", v_power // 2))
            elif v_power:
                factors.append(_power_text("v", v_power))
            if t_power:
                factors.append(_power_text("t", t_power))
            magnitude = abs(coefficient)
            if not factors:
                body = _rational_text(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_rational_text(magnitude)] + factors)
            negative = coefficient < 0
            if not pieces:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def to_json(self):
        return [
            dict(
                coeff=[int(QQ.numer(coefficient)), int(QQ.denom(coefficient))],
                exp=list(exponent),
            )
            for exponent, coefficient in self.items()
        ]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "LaurentPolynomial({!r})".format(self.to_text())


def _power_text(name, power):
    if power == 1:
        return name
    return "{}^{}".format(name, power)


def _rational_text(value):
    numerator, denominator = int(QQ.numer(value)), int(QQ.denom(value))
    if denominator == 1:
        return str(numerator)
    return "{}/{}".format(numerator, denominator)


def as_scalar(value):
    """
    Promote integers and rationals to constant polynomials.

    Returns `NotImplemented` for foreign types so operators can defer.

    """
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, int) or isinstance(value, QQ.dtype):
        return LaurentPolynomial.constant(value)
    return NotImplemented


def scalar(value):
    """
    Like `as_scalar`, but rejects what cannot be promoted.

    """
    promoted = as_scalar(value)
    if promoted is NotImplemented:
        raise RingError("cannot use {!r} as a scalar".format(value))
    return promoted


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
V = LaurentPolynomial.monomial(v=1)
T = LaurentPolynomial.monomial(t=1)
Q = LaurentPolynomial.monomial(v=2)


@lru_cache(maxsize=None)
def q_paren(n, q=Q):
    """
    The q-integer (n)_q = 1 + q + ... + q^(n-1); (0)_q = 0.

    """
    if n < 0:
        raise ParameterError("q_paren needs n >= 0, got {}".format(n))
    q = scalar(q)
    result = ZERO
    power = ONE
    for _ in range(n):
        result = result + power
        power = power * q
    return result


@lru_cache(maxsize=None)
def q_bracket(n, q=V):
    """
    The balanced q-integer [n]_q = q^(1-n) + q^(3-n) + ... + q^(n-1); [0] = 0.

    With the default argument v this is [n]_v = v^-(n-1) (n)_{v^2}.

    """
    if n < 0:
        raise ParameterError("q_bracket needs n >= 0, got {}".format(n))
    q = scalar(q)
    return sum((q ** (2 * k - (n - 1)) for k in range(n)), ZERO)


def _default_base(flavor, q):
    if flavor not in (PAREN, BRACKET):
        raise ParameterError("unknown q-number flavor: {}".format(flavor))
    if q is not None:
        return scalar(q)
    return Q if flavor == PAREN else V


@lru_cache(maxsize=None)
def q_factorial(n, flavor=PAREN, q=None):
    """
    Product of the first n q-integers of the given flavor; the empty product is 1.

    """
    if n < 0:
        raise ParameterError("q_factorial needs n >= 0, got {}".format(n))
    base = _default_base(flavor, q)
    integer = q_paren if flavor == PAREN else q_bracket
    result = ONE
    for k in range(1, n + 1):
        result = result * integer(k, base)
    return result


@lru_cache(maxsize=None)
def _binomial_row(n, flavor, q):
    if n == 0:
        return (ONE,)
    previous = _binomial_row(n - 1, flavor, q)
    row = [ONE]
    for k in range(1, n):
        if flavor == PAREN:
            row.append(previous[k - 1] + q ** k * previous[k])
        else:
            row.append(q ** k * previous[k] + q ** (k - n) * previous[k - 1])
    row.append(ONE)
    return tuple(row)


def gauss_binomial(n, k, flavor=PAREN, q=None):
    """
    Gaussian binomial coefficient via the q-Pascal recurrence (no ring division).

    """
    if n < 0 or k < 0 or k > n:
        raise ParameterError("gauss_binomial needs 0 <= k <= n, got n={}, k={}".format(n, k))
    return _binomial_row(n, flavor, _default_base(flavor, q))[k]
