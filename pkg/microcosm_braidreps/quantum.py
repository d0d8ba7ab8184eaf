"""
U(sl2) and U_q(sl2) highest-weight modules and their link to the q-Pascal matrices.

Everything here is symbolic in v with q = v^2, so K^(1/2) and q^(n/2) are representable.

A module exposes `dim`, `epsilon` and `operator(name)` for the names in `OPERATORS`;
`TensorProductModule` builds the same interface from the coproduct, so iterated coproducts are
nested tensor products.

"""
from collections import namedtuple
from itertools import product

from microcosm_braidreps.braids import BraidRep
from microcosm_braidreps.errors import InvarianceError, ParameterError, ShapeError
from microcosm_braidreps.families import burau_reduced, d_matrix, pascal_sigma1, pascal_sigma2
from microcosm_braidreps.matrix import RingMatrix, commutator, kron, q_exp_nilpotent
from microcosm_braidreps.reports import FAIL, PASS, CheckReport
from microcosm_braidreps.ring import ONE, Q, V, ZERO, q_bracket, q_paren, scalar


DEFINING = "defining"
SYMMETRIC_SQUARE = "symmetric-square"
MODULES = (DEFINING, SYMMETRIC_SQUARE)

OPERATORS = ("1", "E", "F", "K", "Kinv", "Ksqrt", "Ksqrtinv")

COPRODUCT = {
    "E": (("E", "K"), ("1", "E")),
    "F": (("F", "1"), ("Kinv", "F")),
    "K": (("K", "K"),),
    "Kinv": (("Kinv", "Kinv"),),
    "Ksqrt": (("Ksqrt", "Ksqrt"),),
    "Ksqrtinv": (("Ksqrtinv", "Ksqrtinv"),),
}

# S(x) as a product of module operators, applied left to right
ANTIPODE = {
    "1": (1, ("1",)),
    "E": (-1, ("E", "Kinv")),
    "F": (-1, ("K", "F")),
    "K": (1, ("Kinv",)),
    "Kinv": (1, ("K",)),
}

COUNIT = {
    "1": 1,
    "E": 0,
    "F": 0,
    "K": 1,
    "Kinv": 1,
}


Sl2Module = namedtuple("Sl2Module", ["n", "X", "Y", "H"])


def _check_weight(n):
    if int(n) != n or n < 1:
        raise ParameterError("highest weight must be an integer >= 1, got {}".format(n))
    return int(n)


def _check(name, n, left, right):
    difference = left - right
    return CheckReport(name, n, PASS if difference.is_zero else FAIL, None if difference.is_zero else difference)


def sl2_module(n):
    """
    The (n+1)-dimensional U(sl2) module: X = superdiag(n..1), Y = subdiag(1..n), H = diag(n, n-2, .., -n).

    """
    n = _check_weight(n)
    return Sl2Module(
        n=n,
        X=RingMatrix.superdiagonal([n - i for i in range(n)]),
        Y=RingMatrix.subdiagonal([i + 1 for i in range(n)]),
        H=RingMatrix.diagonal([n - 2 * i for i in range(n + 1)]),
    )


def verify_sl2_relations(module):
    return CheckReport.combine("sl2_relations", module.n, [
        _check("[H,X]=2X", module.n, commutator(module.H, module.X), 2 * module.X),
        _check("[H,Y]=-2Y", module.n, commutator(module.H, module.Y), -2 * module.Y),
        _check("[X,Y]=H", module.n, commutator(module.X, module.Y), module.H),
    ])


class UqSl2Module:
    """
    The (n+1)-dimensional U_q(sl2) module of type epsilon.

    E = epsilon superdiag([n], .., [1]), F = subdiag([1], .., [n]), K = epsilon diag(q^n, .., q^-n).

    """
    def __init__(self, n, epsilon=1):
        self.n = _check_weight(n)
        if epsilon not in (1, -1):
            raise ParameterError("epsilon must be +1 or -1, got {}".format(epsilon))
        self.epsilon = epsilon
        weights = [self.n - 2 * i for i in range(self.n + 1)]
        self._operators = {
            "1": RingMatrix.identity(self.n + 1),
            "E": epsilon * RingMatrix.superdiagonal([q_bracket(self.n - i, Q) for i in range(self.n)]),
            "F": RingMatrix.subdiagonal([q_bracket(i + 1, Q) for i in range(self.n)]),
            "K": RingMatrix.diagonal([epsilon * Q ** weight for weight in weights]),
            "Kinv": RingMatrix.diagonal([epsilon * Q ** -weight for weight in weights]),
        }
        if epsilon == 1:
            self._operators["Ksqrt"] = RingMatrix.diagonal([V ** weight for weight in weights])
            self._operators["Ksqrtinv"] = RingMatrix.diagonal([V ** -weight for weight in weights])

    @property
    def dim(self):
        return self.n + 1

    def operator(self, name):
        if name not in OPERATORS:
            raise ParameterError("unknown operator: {}".format(name))
        if name not in self._operators:
            raise ParameterError("K^(1/2) is only defined for epsilon = +1")
        return self._operators[name]

    @property
    def E(self):
        return self.operator("E")

    @property
    def F(self):
        return self.operator("F")

    @property
    def K(self):
        return self.operator("K")

    @property
    def Kinv(self):
        return self.operator("Kinv")

    @property
    def Ksqrt(self):
        return self.operator("Ksqrt")

    @property
    def Ksqrtinv(self):
        return self.operator("Ksqrtinv")


def uq_sl2_module(n, epsilon=1):
    return UqSl2Module(n, epsilon)


class TensorProductModule:
    """
    Tensor product of two modules with the action given by the coproduct.

    Nesting to the left is (Delta x id) Delta, nesting to the right is (id x Delta) Delta.

    """
    def __init__(self, left, right):
        if left.epsilon != 1 or right.epsilon != 1:
            raise ParameterError("coproducts are taken of epsilon = +1 modules")
        self.left = left
        self.right = right
        self.epsilon = 1
        self._operators = {}

    @property
    def dim(self):
        return self.left.dim * self.right.dim

    def operator(self, name):
        if name not in OPERATORS:
            raise ParameterError("unknown operator: {}".format(name))
        if name not in self._operators:
            if name == "1":
                self._operators[name] = RingMatrix.identity(self.dim)
            else:
                terms = [
                    kron(self.left.operator(left), self.right.operator(right))
                    for left, right in COPRODUCT[name]
                ]
                total = terms[0]
                for term in terms[1:]:
                    total = total + term
                self._operators[name] = total
        return self._operators[name]


def coproduct(name, left, right):
    """
    Delta(name) acting on left x right.

    """
    if name not in COPRODUCT:
        raise ParameterError("no coproduct for {}".format(name))
    return TensorProductModule(left, right).operator(name)


def tensor_power(module, factors, nesting="left"):
    if factors < 1:
        raise ParameterError("tensor powers need at least one factor")
    result = module
    for _ in range(factors - 1):
        result = TensorProductModule(result, module) if nesting == "left" else TensorProductModule(module, result)
    return result


def antipode(name, module):
    if name not in ANTIPODE:
        raise ParameterError("no antipode for {}".format(name))
    sign, factors = ANTIPODE[name]
    result = module.operator("1")
    for factor in factors:
        result = result.matmul(module.operator(factor))
    return sign * result


def counit(name):
    if name not in COUNIT:
        raise ParameterError("no counit for {}".format(name))
    return COUNIT[name]


def verify_antipode(module):
    """
    m (S x id) Delta(x) = counit(x) 1 on the module, for x in E, F, K.

    """
    reports = []
    for name in ("E", "F", "K"):
        total = RingMatrix.zeros(module.dim)
        for left, right in COPRODUCT[name]:
            total = total + antipode(left, module).matmul(module.operator(right))
        expected = counit(name) * module.operator("1")
        reports.append(_check("antipode({})".format(name), module.dim - 1, total, expected))
    return CheckReport.combine("antipode", module.dim - 1, reports)


def verify_uq_relations(module):
    """
    K K^-1 = 1, K E K^-1 = q^2 E, K F K^-1 = q^-2 F and [E,F](q - q^-1) = K - K^-1.

    """
    n = module.dim - 1
    E, F, K, Kinv = (module.operator(name) for name in ("E", "F", "K", "Kinv"))
    identity = module.operator("1")
    reports = [
        _check("KK^-1=1", n, K.matmul(Kinv), identity),
        _check("K^-1K=1", n, Kinv.matmul(K), identity),
        _check("KEK^-1=q^2E", n, K.matmul(E).matmul(Kinv), Q ** 2 * E),
        _check("KFK^-1=q^-2F", n, K.matmul(F).matmul(Kinv), Q ** -2 * F),
        _check("[E,F](q-q^-1)=K-K^-1", n, (Q - Q.inverse()) * commutator(E, F), K - Kinv),
    ]
    if module.epsilon == 1:
        reports.append(_check("Ksqrt^2=K", n, module.operator("Ksqrt").matmul(module.operator("Ksqrt")), K))
    return CheckReport.combine("uq_relations", n, reports)


def verify_classical_limit(n):
    """
    At v = 1 the epsilon = +1 module degenerates to the U(sl2) module: E -> X, F -> Y, K -> 1.

    """
    classical = sl2_module(n)
    module = uq_sl2_module(n)
    return CheckReport.combine("classical_limit", n, [
        _check("E(v=1)=X", n, module.E.substitute(v=1), classical.X),
        _check("F(v=1)=Y", n, module.F.substitute(v=1), classical.Y),
        _check("K(v=1)=1", n, module.K.substitute(v=1), RingMatrix.identity(n + 1)),
    ])


def verify_coassociativity(module=None):
    """
    (Delta x id) Delta = (id x Delta) Delta on a triple tensor power.

    """
    module = module or uq_sl2_module(1)
    left = tensor_power(module, 3, nesting="left")
    right = tensor_power(module, 3, nesting="right")
    return CheckReport.combine("coassociativity", 3, [
        _check("coassociativity({})".format(name), 3, left.operator(name), right.operator(name))
        for name in ("E", "F", "K")
    ])


def _inversions(word):
    # pairs where a 0 precedes a 1
    zeros = 0
    count = 0
    for letter in word:
        if letter:
            count += zeros
        else:
            zeros += 1
    return count


def q_symmetric_basis(n, q=Q):
    """
    Basis f_0..f_n of the q-symmetric tensor power of C^2 inside (C^2)^(x n).

    f_k sums q^-inv(w) e_w over 0/1-words w with k ones, inv(w) counting the pairs where a 0
    precedes a 1; the first tensor factor is the most significant index bit.

    """
    n = _check_weight(n)
    q = scalar(q)
    basis = [[ZERO] * (2 ** n) for _ in range(n + 1)]
    for index, word in enumerate(product((0, 1), repeat=n)):
        basis[sum(word)][index] = q ** -_inversions(word)
    return basis


def symmetric_square_basis(size):
    """
    Basis e_i e_j (i <= j) of the symmetric square of C^size, ordered by j then i.

    """
    basis = []
    for j in range(size):
        for i in range(j + 1):
            vector = [ZERO] * (size * size)
            vector[i * size + j] = ONE
            vector[j * size + i] = ONE
            basis.append(vector)
    return basis


def _pivots(basis):
    pivots = []
    for index, vector in enumerate(basis):
        for coordinate, value in enumerate(vector):
            if value.is_unit and all(other[coordinate].is_zero for other in basis if other is not vector):
                pivots.append(coordinate)
                break
        else:
            raise ShapeError("basis vector {} has no pivot coordinate".format(index))
    return pivots


def restrict(operator, basis):
    """
    Matrix of `operator` on the span of `basis` (columns are images).

    :raises `InvarianceError` if some image leaves the span

    """
    if any(len(vector) != operator.cols for vector in basis):
        raise ShapeError("basis vectors must have length {}".format(operator.cols))
    pivots = _pivots(basis)
    columns = []
    for index, vector in enumerate(basis):
        image = operator.apply(vector)
        coordinates = [
            image[pivot] / basis_vector[pivot]
            for pivot, basis_vector in zip(pivots, basis)
        ]
        for position, value in enumerate(image):
            expected = sum(
                (coordinate * basis_vector[position] for coordinate, basis_vector in zip(coordinates, basis)),
                ZERO,
            )
            if value != expected:
                raise InvarianceError(index, [entry.to_text() for entry in image])
        columns.append(coordinates)
    return RingMatrix(columns).transpose()


def verify_exp_classical(n):
    """
    sigma_1(1, n) = exp(X) and sigma_2(1, n) = exp(-Y) in the U(sl2) module of weight n.

    """
    module = sl2_module(n)
    return CheckReport.combine("exp_classical", n, [
        _check("sigma1=exp(X)", n, q_exp_nilpotent(module.X, 1), pascal_sigma1(1, n)),
        _check("sigma2=exp(-Y)", n, q_exp_nilpotent(-module.Y, 1), pascal_sigma2(1, n)),
    ])


def verify_exp_quantum(n):
    """
    The q-Pascal matrices at q^2 as q^2-exponentials in the U_q(sl2) module of weight n.

    q^(n/2) E K^(1/2) is the superdiagonal ((n)_{q^2}, .., (1)_{q^2}) and its q^2-exponential is
    sigma_1(q^2, n); on the F side D_n(q^2) sigma_2(q^2, n) = exp(-q^(n/2) F K^(-1/2)) D_n(q^2).

    """
    module = uq_sl2_module(n)
    n = module.n
    q_squared = Q ** 2
    raising = V ** n * module.E.matmul(module.Ksqrt)
    lowering = -(V ** n) * module.F.matmul(module.Ksqrtinv)
    d = d_matrix(q_squared, n)
    return CheckReport.combine("exp_quantum", n, [
        _check(
            "q^(n/2)EK^(1/2)=superdiag",
            n,
            raising,
            RingMatrix.superdiagonal([q_paren(n - i, q_squared) for i in range(n)]),
        ),
        _check(
            "-q^(n/2)FK^(-1/2)=-subdiag",
            n,
            lowering,
            -RingMatrix.subdiagonal([q_paren(i + 1, q_squared) for i in range(n)]),
        ),
        _check("sigma1(q^2)=exp_q^2(E)", n, q_exp_nilpotent(raising, q_squared), pascal_sigma1(q_squared, n)),
        _check(
            "D sigma2(q^2)=exp_q^2(F) D",
            n,
            d.matmul(pascal_sigma2(q_squared, n)),
            q_exp_nilpotent(lowering, q_squared).matmul(d),
        ),
    ])


def verify_lemma_sym(n):
    """
    The iterated coproduct of the weight-1 module restricted to the q-symmetric basis is the
    weight-n module, for E, F and K.

    """
    n = _check_weight(n)
    base = uq_sl2_module(1)
    power = tensor_power(base, n)
    target = uq_sl2_module(n)
    basis = q_symmetric_basis(n)
    reports = []
    for name in ("E", "F", "K"):
        try:
            restricted = restrict(power.operator(name), basis)
        except InvarianceError as error:
            reports.append(CheckReport("restrict({})".format(name), n, FAIL, details=[str(error)]))
            continue
        reports.append(_check("restrict({})".format(name), n, restricted, target.operator(name)))
    if n == 3:
        reports.append(verify_coassociativity(base))
    return CheckReport.combine("lemma_sym", n, reports)


def verify_classical_tensor_power(n):
    """
    sigma_1(1, 1) tensored n times, restricted to the symmetric tensors, is sigma_1(1, n).

    """
    n = _check_weight(n)
    operator = pascal_sigma1(1, 1)
    for _ in range(n - 1):
        operator = kron(operator, pascal_sigma1(1, 1))
    restricted = restrict(operator, q_symmetric_basis(n, 1))
    return CheckReport.combine("classical_tensor_power", n, [
        _check("sym(sigma1(1,1))=sigma1(1,n)", n, restricted, pascal_sigma1(1, n)),
    ])


class ChevalleySystem:
    """
    Chevalley generators of sl_m in the defining representation: E_i = e_{i-1,i}, F_i = e_{i,i-1}.

    """
    def __init__(self, m):
        if m < 2:
            raise ParameterError("sl_m needs m >= 2, got {}".format(m))
        self.m = m

    def E(self, i):
        self._check_index(i)
        return RingMatrix.unit(self.m, i - 1, i)

    def F(self, i):
        self._check_index(i)
        return RingMatrix.unit(self.m, i, i - 1)

    def H(self, i):
        return commutator(self.E(i), self.F(i))

    def _check_index(self, i):
        if not 1 <= i <= self.m - 1:
            raise ParameterError("sl_{} has Chevalley indices 1..{}, got {}".format(self.m, self.m - 1, i))

    def braid_elements(self):
        """
        -F_1, E_{k-1} - F_k for 2 <= k <= m - 1, and E_{m-1}; one element per generator of B_{m+1}.

        """
        count = self.m
        elements = [-self.F(1)]
        for k in range(2, count):
            elements.append(self.E(k - 1) - self.F(k))
        elements.append(self.E(count - 1))
        return elements


def symmetric_square_action(matrix):
    """
    A Lie algebra element X acting on the symmetric square: X x 1 + 1 x X restricted.

    """
    identity = RingMatrix.identity(matrix.rows)
    return restrict(kron(matrix, identity) + kron(identity, matrix), symmetric_square_basis(matrix.rows))


def chevalley_braid_rep(n, module=DEFINING):
    """
    B_n through exponentials of Chevalley elements of sl_{n-1}, at q = 1.

    """
    if module not in MODULES:
        raise ParameterError("unknown module: {}".format(module))
    if n < 3:
        raise ParameterError("chevalley representations need n >= 3, got {}".format(n))
    system = ChevalleySystem(n - 1)
    elements = system.braid_elements()
    if module == SYMMETRIC_SQUARE:
        elements = [symmetric_square_action(element) for element in elements]
    return BraidRep(
        strands=n,
        images=[q_exp_nilpotent(element, 1) for element in elements],
        family="chevalley",
        params=dict(module=module),
        basis="e_i e_j, i <= j, ordered by j then i" if module == SYMMETRIC_SQUARE else None,
    )


def verify_chevalley_defining(n):
    """
    The defining-module Chevalley representation is reduced Burau at t = -1.

    """
    expected = burau_reduced(n, -1)
    actual = chevalley_braid_rep(n, DEFINING)
    return CheckReport.combine("chevalley_defining", n, [
        _check("b{}".format(index + 1), n, left, right)
        for index, (left, right) in enumerate(zip(actual.images, expected.images))
    ])


def symmetric_square(rep):
    """
    g -> g x g restricted to the symmetric square, basis e_i e_j (i <= j) ordered by j then i.

    """
    basis = symmetric_square_basis(rep.dim)
    return BraidRep(
        strands=rep.strands,
        images=[restrict(kron(image, image), basis) for image in rep.images],
        family="symmetric-square({})".format(rep.family),
        params=rep.params,
        partial=rep.partial,
        basis="e_i e_j, i <= j, ordered by j then i",
    )
