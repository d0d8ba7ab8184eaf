"""
Constructors for the braid representation families.

- q-Pascal matrices sigma_1(q, n), sigma_2(q, n) and their lambda-twisted B_3 representations
- Tuba-Wenzl B_3 representations of dimension 2 to 5
- Burau (full and reduced) and Lawrence-Krammer representations of B_n

Symbolic parameters default to q = v^2 and t; numeric parameters are rationals.

"""
from collections import namedtuple
from itertools import combinations

from microcosm_braidreps.braids import BraidRep
from microcosm_braidreps.errors import LambdaConditionError, ParameterError
from microcosm_braidreps.matrix import RingMatrix, direct_sum, inverse, sharp
from microcosm_braidreps.ring import ONE, PAREN, Q, T, ZERO, gauss_binomial, scalar


TWISTED = "twisted"
ABSORBED = "absorbed"
PACKAGINGS = (TWISTED, ABSORBED)

LAWRENCE_KRAMMER_BASIS = "x_ij for 1 <= i < j <= n in lexicographic order"


LambdaViolation = namedtuple("LambdaViolation", ["r", "left", "right"])
LambdaCheck = namedtuple("LambdaCheck", ["holds", "violations"])


def _unit(value, name):
    value = scalar(value)
    if value.is_zero:
        raise ParameterError("{} must be nonzero".format(name))
    if not value.is_unit:
        raise ParameterError("{} must be a rational or a unit monomial, got {}".format(name, value))
    return value


def _check_n(n, minimum=1):
    if int(n) != n or n < minimum:
        raise ParameterError("n must be an integer >= {}, got {}".format(minimum, n))
    return int(n)


def pascal_sigma1(q, n):
    """
    Upper unitriangular q-Pascal matrix: entry (i, j) is the Gaussian binomial (n - i choose j - i)_q.

    """
    n = _check_n(n)
    q = scalar(q)
    return RingMatrix.from_function(
        n + 1,
        n + 1,
        lambda i, j: gauss_binomial(n - i, j - i, PAREN, q) if j >= i else ZERO,
    )


def pascal_sigma2(q, n):
    """
    The lower unitriangular partner sigma_1(q^-1, n)^-1 under the central symmetry.

    """
    n = _check_n(n)
    q = _unit(q, "q")
    return sharp(inverse(pascal_sigma1(q.inverse(), n)))


def d_matrix(q, n):
    """
    diag(q^(r(r-1)/2)) for r = 0..n.

    """
    n = _check_n(n)
    q = _unit(q, "q")
    return RingMatrix.diagonal([q ** (r * (r - 1) // 2) for r in range(n + 1)])


class LambdaVector:
    """
    Diagonal twist (lambda_0, ..., lambda_n) of the q-Pascal matrices.

    Entries are nonzero rationals or unit monomials; `q` is the parameter the pairing
    condition is evaluated at when none is given explicitly.

    """
    def __init__(self, values, q=None):
        values = tuple(scalar(value) for value in values)
        if len(values) < 2:
            raise ParameterError("lambda vectors need at least two entries")
        self.values = tuple(_unit(value, "lambda_{}".format(r)) for r, value in enumerate(values))
        self.q = None if q is None else _unit(q, "q")

    @classmethod
    def ones(cls, n, q=None):
        return cls([ONE] * (_check_n(n) + 1), q)

    @classmethod
    def from_free_parameters(cls, n, values, q=None):
        """
        The general solution of Lambda Lambda^sharp = c I.

        For odd n the free values are lambda_0 .. lambda_{(n-1)/2} followed by lambda_n; for even
        n they are lambda_0 .. lambda_{n/2}. Either way there are [(n+1)/2] + 1 of them.

        """
        n = _check_n(n)
        values = [_unit(value, "free parameter") for value in values]
        expected = (n + 1) // 2 + 1
        if len(values) != expected:
            raise ParameterError("n={} has {} free parameters, got {}".format(n, expected, len(values)))
        if n % 2:
            head, last = values[:-1], values[-1]
            product = head[0] * last
        else:
            head = values
            product = values[-1] * values[-1]
        lambdas = [None] * (n + 1)
        for r, value in enumerate(head):
            lambdas[r] = value
            lambdas[n - r] = product / value
        return cls(lambdas, q)

    @property
    def n(self):
        return len(self.values) - 1

    def matrix(self):
        return RingMatrix.diagonal(self.values)

    def sharp(self):
        return LambdaVector(reversed(self.values), self.q)

    def absorb(self, q=None):
        """
        Fold the twist D_n^sharp(q) into the vector, turning the twisted packaging into the absorbed one.

        """
        q = self._parameter(q)
        n = self.n
        return LambdaVector(
            [value * q ** ((n - r) * (n - r - 1) // 2) for r, value in enumerate(self.values)],
            q,
        )

    def satisfies_condition(self, q=None, packaging=ABSORBED):
        return lambda_check(self, q=q, packaging=packaging).holds

    def _parameter(self, q):
        if q is not None:
            return _unit(q, "q")
        if self.q is not None:
            return self.q
        return Q

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __eq__(self, other):
        if not isinstance(other, LambdaVector):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "LambdaVector({})".format(", ".join(value.to_text() for value in self.values))


def lambda_check(lambdas, n=None, q=None, packaging=ABSORBED):
    """
    Evaluate lambda_r lambda_{n-r} = lambda_0 lambda_n q^(-r(n-r)) for every r.

    With the twisted packaging the condition is evaluated on D_n^sharp(q) Lambda.

    """
    if packaging not in PACKAGINGS:
        raise ParameterError("unknown packaging: {}".format(packaging))
    if n is not None and len(lambdas) != n + 1:
        raise ParameterError("n={} needs {} lambda entries, got {}".format(n, n + 1, len(lambdas)))
    q = lambdas._parameter(q)
    effective = lambdas.absorb(q) if packaging == TWISTED else lambdas
    n = effective.n
    outer = effective[0] * effective[n]
    violations = []
    for r in range(n + 1):
        left = effective[r] * effective[n - r]
        right = outer * q ** (-r * (n - r))
        if left != right:
            violations.append(LambdaViolation(r, left, right))
    return LambdaCheck(not violations, violations)


def kosyak_rep(q, n, lambdas=None, packaging=TWISTED, strict=True, family="kosyak"):
    """
    The lambda-twisted q-Pascal representation of B_3 on C^(n+1).

    Twisted: sigma_1(q,n) D_n^sharp(q) Lambda and Lambda^sharp D_n(q) sigma_2(q,n).
    Absorbed: sigma_1(q,n) Lambda and Lambda^sharp sigma_2(q,n).

    :raises `LambdaConditionError` if strict and the pairing condition fails; otherwise the
        representation is still built and `params["lambda_condition"]` says "violated"

    """
    n = _check_n(n)
    q = _unit(q, "q")
    if packaging not in PACKAGINGS:
        raise ParameterError("unknown packaging: {}".format(packaging))
    lambdas = LambdaVector.ones(n, q) if lambdas is None else lambdas
    if lambdas.n != n:
        raise ParameterError("n={} needs {} lambda entries, got {}".format(n, n + 1, len(lambdas)))

    check = lambda_check(lambdas, q=q, packaging=packaging)
    if strict and not check.holds:
        raise LambdaConditionError(check.violations)

    sigma1, sigma2 = pascal_sigma1(q, n), pascal_sigma2(q, n)
    twist, twist_sharp = lambdas.matrix(), lambdas.sharp().matrix()
    if packaging == TWISTED:
        d = d_matrix(q, n)
        images = [
            sigma1.matmul(sharp(d)).matmul(twist),
            twist_sharp.matmul(d).matmul(sigma2),
        ]
    else:
        images = [
            sigma1.matmul(twist),
            twist_sharp.matmul(sigma2),
        ]
    return BraidRep(
        strands=3,
        images=images,
        family=family,
        params=dict(
            q=q,
            n=n,
            packaging=packaging,
            **{
                "lambda": [value.to_text() for value in lambdas],
                "lambda_condition": "holds" if check.holds else "violated",
            }
        ),
    )


def pascal_rep(q, n):
    """
    The untwisted family (Lambda = 1); at q = 1 this is the Humphries representation.

    """
    return kosyak_rep(q, n, family="pascal")


def tuba_wenzl_rep(dim, lambdas, D=None, gamma=None):
    """
    Tuba-Wenzl simple B_3 modules of dimension 2 to 5.

    Dimension 4 needs D with D^2 = l2 l3 / (l1 l4); dimension 5 needs gamma with gamma^5 equal
    to the product of the lambdas and only sigma_1 is known, so the result is partial.

    """
    if dim not in (2, 3, 4, 5):
        raise ParameterError("Tuba-Wenzl dimensions are 2..5, got {}".format(dim))
    if len(lambdas) != dim:
        raise ParameterError("dimension {} needs {} lambdas, got {}".format(dim, dim, len(lambdas)))
    values = [_unit(value, "lambda_{}".format(index + 1)) for index, value in enumerate(lambdas)]
    params = dict(dim=dim, **{"lambda": [value.to_text() for value in values]})
    builder = {2: _tuba_wenzl_2, 3: _tuba_wenzl_3, 4: _tuba_wenzl_4, 5: _tuba_wenzl_5}[dim]
    images = builder(values, D=D, gamma=gamma, params=params)
    return BraidRep(
        strands=3,
        images=images,
        family="tuba-wenzl",
        params=params,
        partial=dim == 5,
    )


def _tuba_wenzl_2(values, **kwargs):
    l1, l2 = values
    return [
        RingMatrix([[l1, l1], [0, l2]]),
        RingMatrix([[l2, 0], [-l2, l1]]),
    ]


def _tuba_wenzl_3(values, **kwargs):
    l1, l2, l3 = values
    middle = l1 * l3 / l2 + l2
    return [
        RingMatrix([[l1, middle, l2], [0, l2, l2], [0, 0, l3]]),
        RingMatrix([[l3, 0, 0], [-l2, l2, 0], [l2, -middle, l1]]),
    ]


def _tuba_wenzl_4(values, D=None, params=None, **kwargs):
    l1, l2, l3, l4 = values
    if D is None:
        raise ParameterError("dimension 4 needs D")
    D = _unit(D, "D")
    if D * D != l2 * l3 / (l1 * l4):
        raise ParameterError("D^2 = {} does not equal l2 l3 / (l1 l4) = {}".format(D * D, l2 * l3 / (l1 * l4)))
    params["D"] = D.to_text()
    Dinv = D.inverse()
    return [
        RingMatrix([
            [l1, (1 + Dinv + Dinv ** 2) * l2, (1 + Dinv + Dinv ** 2) * l3, l4],
            [0, l2, (1 + Dinv) * l3, l4],
            [0, 0, l3, l4],
            [0, 0, 0, l4],
        ]),
        RingMatrix([
            [l4, 0, 0, 0],
            [-l3, l3, 0, 0],
            [D * l2, -(D + 1) * l2, l2, 0],
            [-(D ** 3) * l1, (D ** 3 + D ** 2 + D) * l1, -(D ** 2 + D + 1) * l1, l1],
        ]),
    ]


def _tuba_wenzl_5(values, gamma=None, params=None, **kwargs):
    l1, l2, l3, l4, l5 = values
    if gamma is None:
        raise ParameterError("dimension 5 needs gamma")
    gamma = _unit(gamma, "gamma")
    product = l1 * l2 * l3 * l4 * l5
    if gamma ** 5 != product:
        raise ParameterError("gamma^5 = {} does not equal the lambda product {}".format(gamma ** 5, product))
    params["gamma"] = gamma.to_text()
    g2, g3 = gamma ** 2, gamma ** 3
    corner = g3 / (l1 * l5)
    return [
        RingMatrix([
            [
                l1,
                (1 + g2 / (l2 * l4)) * (l2 + g3 / (l3 * l4)),
                (g2 / l3 + l3 + gamma) * (1 + l1 * l5 / g2),
                (1 + l2 * l4 / g2) * (l3 + g3 / (l2 * l4)),
                corner,
            ],
            [0, l2, g2 / l3 + l3 + gamma, corner + l3 + gamma, corner],
            [0, 0, l3, corner + l3, corner],
            [0, 0, 0, l4, l4],
            [0, 0, 0, 0, l5],
        ]),
    ]


def _burau_parameter(t):
    t = scalar(t)
    if t.is_zero:
        raise ParameterError("t = 0 does not give invertible images")
    if not t.is_unit:
        raise ParameterError("t must be a unit of the Laurent ring, got {}".format(t))
    return t


def burau_full(n, t=T):
    """
    sigma_i -> I_{i-1} + [[1 - t, t], [1, 0]] + I_{n-i-1} (block sum), n x n.

    """
    n = _check_n(n, 2)
    t = _burau_parameter(t)
    block = RingMatrix([[1 - t, t], [1, 0]])
    images = [
        _embed(block, i - 1, n)
        for i in range(1, n)
    ]
    return BraidRep(n, images, "burau", params=dict(t=t))


def burau_reduced(n, t=T):
    """
    The (n-1)-dimensional reduced Burau representation.

    """
    n = _check_n(n, 3)
    t = _burau_parameter(t)
    size = n - 1
    first = RingMatrix([[-t, 0], [-1, 1]])
    last = RingMatrix([[1, -t], [0, -t]])
    middle = RingMatrix([[1, -t, 0], [0, -t, 0], [0, -1, 1]])
    images = []
    for i in range(1, n):
        if i == 1:
            images.append(_embed(first, 0, size))
        elif i == n - 1:
            images.append(_embed(last, size - 2, size))
        else:
            images.append(_embed(middle, i - 2, size))
    return BraidRep(n, images, "burau-reduced", params=dict(t=t))


def _embed(block, offset, size):
    blocks = []
    if offset:
        blocks.append(RingMatrix.identity(offset))
    blocks.append(block)
    rest = size - offset - block.rows
    if rest:
        blocks.append(RingMatrix.identity(rest))
    return direct_sum(*blocks)


def lawrence_krammer_basis(n):
    return list(combinations(range(1, n + 1), 2))


def lawrence_krammer(n, t=T, q=Q):
    """
    The Lawrence-Krammer representation on the span of x_ij, 1 <= i < j <= n.

    Column (i, j) of the image of sigma_k is the expansion of sigma_k x_ij.

    """
    n = _check_n(n, 2)
    t = _unit(t, "t")
    q = _unit(q, "q")
    basis = lawrence_krammer_basis(n)
    position = {pair: index for index, pair in enumerate(basis)}
    images = []
    for k in range(1, n):
        entries = [[ZERO] * len(basis) for _ in basis]
        for (i, j), column in position.items():
            for pair, coefficient in _lawrence_krammer_action(k, i, j, t, q):
                entries[position[pair]][column] = entries[position[pair]][column] + coefficient
        images.append(RingMatrix(entries))
    return BraidRep(
        n,
        images,
        "lk",
        params=dict(t=t, q=q),
        basis=LAWRENCE_KRAMMER_BASIS,
    )


def _lawrence_krammer_action(k, i, j, t, q):
    if (i, j) == (k, k + 1):
        return [((k, k + 1), t * q ** 2)]
    if j == k:
        return [((i, k), 1 - q), ((i, k + 1), q)]
    if j == k + 1:
        return [((i, k), ONE), ((k, k + 1), t * q ** (k - i + 1) * (q - 1))]
    if i == k:
        return [((k, k + 1), t * q * (q - 1)), ((k + 1, j), q)]
    if i == k + 1:
        return [((k, j), ONE), ((k + 1, j), 1 - q)]
    if i < k and j > k + 1:
        return [((i, j), ONE), ((k, k + 1), t * q ** (k - i) * (q - 1) ** 2)]
    return [((i, j), ONE)]
