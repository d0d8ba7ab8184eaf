"""
Irreducibility, equivalence and spectra of braid representations at numeric parameters.

The minor criterion for the lambda-twisted q-Pascal family is evaluated alongside an
independent oracle: the dimension of the commutant of the images, found as an exact rational
nullspace.

"""
from collections import namedtuple
from itertools import combinations
from random import Random

from sympy import Poly, QQ, Symbol

from microcosm_braidreps.errors import ParameterError, ShapeError
from microcosm_braidreps.families import TWISTED, LambdaVector, d_matrix, kosyak_rep
from microcosm_braidreps.matrix import (
    DEFAULT_MAX_SYMBOLIC_SIZE,
    IndexSet,
    RingMatrix,
    anti_transpose,
    char_poly,
    determinant,
    inverse,
    minor,
    nullspace,
    q_exp_nilpotent,
)
from microcosm_braidreps.reports import (
    EQUIVALENT_AT_SAMPLES,
    FAIL,
    INEQUIVALENT,
    PASS,
    UNDETERMINED,
    EquivalenceReport,
    IrreducibilityReport,
    MinorWitness,
    SpectraReport,
)
from microcosm_braidreps.ring import ONE, LaurentPolynomial, q_paren, rational, scalar


ANTI_TRANSPOSE = "anti_transpose"
RAW = "raw"
READINGS = (ANTI_TRANSPOSE, RAW)

DEFAULT_SEED = 1105


FOperator = namedtuple("FOperator", ["r", "n", "matrix", "exp_factor"])


def _numeric(value, name):
    value = scalar(value)
    if not value.is_constant:
        raise ParameterError("{} must be a rational number, got {}".format(name, value))
    return value


def f_operator(r, n, q, lambdas):
    """
    exp_q(sum (k+1)_q E_{k,k+1}) - q_{n-r} lambda_r (D_n(q) Lambda^sharp)^-1.

    q_m denotes q^(m(m-1)/2); lambdas are in the twisted packaging.

    """
    if not 0 <= r <= n:
        raise ParameterError("r must lie in 0..{}, got {}".format(n, r))
    q = scalar(q)
    if lambdas.n != n:
        raise ParameterError("n={} needs {} lambda entries, got {}".format(n, n + 1, len(lambdas)))
    exp_factor = q_exp_nilpotent(
        RingMatrix.superdiagonal([q_paren(k + 1, q) for k in range(n)]),
        q,
    )
    weight = q ** ((n - r) * (n - r - 1) // 2) * lambdas[r]
    twist = inverse(d_matrix(q, n).matmul(lambdas.sharp().matrix()))
    return FOperator(r, n, exp_factor - weight * twist, exp_factor)


def minor_witness(matrix, r, n, max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE):
    """
    Lexicographically first (n - r)-row set whose minor against columns r+1..n is nonzero.

    """
    columns = IndexSet(range(r + 1, n + 1))
    for rows in combinations(range(n + 1), n - r):
        if not minor(matrix, rows, columns, max_symbolic_size).is_zero:
            return IndexSet(rows)
    return None


def _rational_images(images):
    return [image.to_rational_rows() for image in images]


def _intertwiner_rows(left_images, right_images, dim):
    """
    Linear system in the entries T[a][b] (unknown a * dim + b) for T A_i = B_i T.

    """
    rows = []
    for left, right in zip(left_images, right_images):
        for i in range(dim):
            for j in range(dim):
                row = [QQ(0)] * (dim * dim)
                for k in range(dim):
                    row[i * dim + k] += left[k][j]
                    row[k * dim + j] -= right[i][k]
                if any(row):
                    rows.append(row)
    return rows


def intertwiners(left_images, right_images):
    """
    Basis of the rational solutions T of T A_i = B_i T, each as a RingMatrix.

    """
    dim = left_images[0].rows
    rows = _intertwiner_rows(_rational_images(left_images), _rational_images(right_images), dim)
    return [
        RingMatrix([vector[row * dim:(row + 1) * dim] for row in range(dim)])
        for vector in nullspace(rows, dim * dim)
    ]


def commutant_dimension(rep):
    """
    Dimension of the space of matrices commuting with every image; 1 means operator irreducible.

    """
    return len(intertwiners(rep.images, rep.images))


def rational_roots(matrix):
    """
    Distinct rational eigenvalues of a rational matrix, ascending.

    """
    x = Symbol("x")
    polynomial = Poly([QQ.to_sympy(value) for value in char_poly(matrix)], x, domain=QQ)
    return sorted(QQ.from_sympy(root) for root in polynomial.ground_roots())


def common_eigenvectors(rep):
    """
    Rational vectors spanning the common eigenvectors of all images (each spans an invariant line).

    """
    dim = rep.dim
    subspaces = [[[QQ(1) if i == j else QQ(0) for i in range(dim)] for j in range(dim)]]
    for image in rep.images:
        rows = image.to_rational_rows()
        refined = []
        for root in rational_roots(image):
            shifted = [
                [rows[i][j] - (root if i == j else 0) for j in range(dim)]
                for i in range(dim)
            ]
            for basis in subspaces:
                # columns of the restricted system are the basis vectors of the subspace
                system = [
                    [sum((shifted[i][k] * vector[k] for k in range(dim)), QQ(0)) for vector in basis]
                    for i in range(dim)
                ]
                solutions = nullspace([row for row in system if any(row)], len(basis))
                if solutions:
                    refined.append([
                        [
                            sum((weight * vector[k] for weight, vector in zip(solution, basis)), QQ(0))
                            for k in range(dim)
                        ]
                        for solution in solutions
                    ])
        subspaces = refined
        if not subspaces:
            return []
    return [
        [LaurentPolynomial.constant(value) for value in vector]
        for basis in subspaces
        for vector in basis
    ]


def irreducibility_check(
    n,
    q,
    lambdas=None,
    reading=ANTI_TRANSPOSE,
    max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE,
):
    """
    Minor criterion for every 0 <= r <= n/2 plus the commutant oracle.

    """
    if reading not in READINGS:
        raise ParameterError("unknown minor reading: {}".format(reading))
    q = _numeric(q, "q")
    lambdas = LambdaVector.ones(n, q) if lambdas is None else lambdas
    for r, value in enumerate(lambdas):
        _numeric(value, "lambda_{}".format(r))

    per_r = []
    for r in range(n // 2 + 1):
        operator = f_operator(r, n, q, lambdas).matrix
        if reading == ANTI_TRANSPOSE:
            operator = anti_transpose(operator)
        per_r.append(MinorWitness(r, minor_witness(operator, r, n, max_symbolic_size)))
    operator_irreducible = all(entry.witness is not None for entry in per_r)

    rep = kosyak_rep(q, n, lambdas, packaging=TWISTED, strict=False)
    commutant_dim = commutant_dimension(rep)
    n_q_value = q_paren(n, q)
    # (n)_q decides the invariant subspace only for lambda = 1
    untwisted = all(value == ONE for value in lambdas)
    return IrreducibilityReport(
        n=n,
        q=q,
        lambdas=list(lambdas),
        reading=reading,
        per_r=per_r,
        operator_irreducible=operator_irreducible,
        n_q_value=n_q_value,
        subspace_irreducible=not n_q_value.is_zero if untwisted else None,
        commutant_dim=commutant_dim,
        oracle_agrees=operator_irreducible == (commutant_dim == 1),
        invariant_vectors=common_eigenvectors(rep),
    )


def sample_points(count, seed=DEFAULT_SEED):
    """
    Reproducible assignments {v, t} of rationals away from 0 and +-1.

    """
    generator = Random(seed)
    points = []
    while len(points) < count:
        point = {}
        for name in ("v", "t"):
            value = rational(generator.randint(2, 9), generator.randint(1, 5))
            while value == 1:
                value = rational(generator.randint(2, 9), generator.randint(1, 5))
            point[name] = value
        points.append(point)
    return points


def _substituted_images(rep, sample):
    images = [image.substitute(**sample) for image in rep.images]
    for image in images:
        if not image.is_numeric:
            raise ParameterError("sample {} leaves symbols in the {} images".format(sample, rep.family))
    return images


def _invertible_combination(basis, generator, attempts):
    if len(basis) == 1:
        candidates = [basis[0]]
    else:
        candidates = []
        for _ in range(attempts):
            combination = basis[0] * 0
            for element in basis:
                combination = combination + generator.randint(-9, 9) * element
            candidates.append(combination)
    for candidate in candidates:
        if not determinant(candidate).is_zero:
            return candidate
    return None


def equivalence_check(rep_a, rep_b, samples, seed=DEFAULT_SEED, attempts=8):
    """
    Decide equivalence at numeric sample points.

    Characteristic polynomials of each image and of sigma_1 sigma_2 refute first; otherwise an
    invertible intertwiner is searched for in the rational solution space at every sample.

    """
    if rep_a.strands != rep_b.strands:
        raise ShapeError("representations of B_{} and B_{} cannot be compared".format(rep_a.strands, rep_b.strands))
    if rep_a.partial or rep_b.partial:
        raise ParameterError("equivalence needs complete representations")
    if rep_a.dim != rep_b.dim:
        return EquivalenceReport(INEQUIVALENT, "dimensions differ: {} and {}".format(rep_a.dim, rep_b.dim), [])

    generator = Random(seed)
    for sample in samples:
        left = _substituted_images(rep_a, sample)
        right = _substituted_images(rep_b, sample)
        for index, (a, b) in enumerate(zip(left, right)):
            if char_poly(a) != char_poly(b):
                return EquivalenceReport(
                    INEQUIVALENT,
                    "characteristic polynomials of sigma_{} differ".format(index + 1),
                    [sample],
                )
        if len(left) > 1 and char_poly(left[0].matmul(left[1])) != char_poly(right[0].matmul(right[1])):
            return EquivalenceReport(INEQUIVALENT, "characteristic polynomials of sigma_1 sigma_2 differ", [sample])

    for sample in samples:
        basis = intertwiners(_substituted_images(rep_a, sample), _substituted_images(rep_b, sample))
        if not basis:
            return EquivalenceReport(INEQUIVALENT, "no intertwiner exists", [sample])
        if _invertible_combination(basis, generator, attempts) is None:
            return EquivalenceReport(
                UNDETERMINED,
                "no invertible intertwiner found in {} attempts".format(attempts),
                [sample],
            )

    return EquivalenceReport(
        EQUIVALENT_AT_SAMPLES,
        "invertible intertwiner found at every sample (evidence, not proof)",
        list(samples),
    )


def spectra_check(rep, samples):
    """
    Characteristic polynomials of consecutive generator images agree at every sample.

    """
    failures = []
    for sample in samples:
        images = _substituted_images(rep, sample)
        polynomials = [char_poly(image) for image in images]
        for index in range(len(polynomials) - 1):
            if polynomials[index] != polynomials[index + 1]:
                failures.append((sample, index + 1))
    return SpectraReport(FAIL if failures else PASS, list(samples), failures)
