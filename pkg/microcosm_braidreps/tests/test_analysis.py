"""
Irreducibility, equivalence and spectra tests.

"""
from hamcrest import (
    assert_that,
    calling,
    equal_to,
    greater_than,
    has_length,
    is_,
    none,
    raises,
)
from nose.plugins.attrib import attr

from microcosm_braidreps.analysis import (
    RAW,
    commutant_dimension,
    common_eigenvectors,
    equivalence_check,
    f_operator,
    irreducibility_check,
    minor_witness,
    rational_roots,
    sample_points,
    spectra_check,
)
from microcosm_braidreps.braids import BraidRep
from microcosm_braidreps.errors import ParameterError, ShapeError
from microcosm_braidreps.families import (
    ABSORBED,
    LambdaVector,
    burau_full,
    burau_reduced,
    kosyak_rep,
    lawrence_krammer,
    pascal_rep,
    tuba_wenzl_rep,
)
from microcosm_braidreps.matrix import RingMatrix
from microcosm_braidreps.reports import EQUIVALENT_AT_SAMPLES, FAIL, INEQUIVALENT, PASS
from microcosm_braidreps.ring import ONE, Q, T, V, ZERO


class TestFOperator:

    def test_smallest_case(self):
        operator = f_operator(0, 1, 1, LambdaVector.ones(1, 1))
        assert_that(operator.matrix, is_(equal_to(RingMatrix([[0, 1], [0, 0]]))))
        assert_that(operator.exp_factor, is_(equal_to(RingMatrix([[1, 1], [0, 1]]))))

    def test_humphries_is_strictly_upper_triangular(self):
        for n in range(1, 5):
            for r in range(n + 1):
                operator = f_operator(r, n, 1, LambdaVector.ones(n, 1))
                assert_that(operator.matrix.is_upper_triangular(strict=True), is_(equal_to(True)))

    def test_rejects_bad_indices(self):
        assert_that(calling(f_operator).with_args(3, 2, 1, LambdaVector.ones(2, 1)), raises(ParameterError))
        assert_that(calling(f_operator).with_args(0, 2, 1, LambdaVector.ones(3, 1)), raises(ParameterError))

    def test_minor_witness(self):
        assert_that(minor_witness(RingMatrix.identity(3), 0, 2), is_(equal_to((1, 2))))
        assert_that(minor_witness(RingMatrix.zeros(3), 0, 2), is_(equal_to(None)))


class TestCommutant:

    def test_humphries_is_operator_irreducible(self):
        for n in range(1, 5):
            assert_that(commutant_dimension(pascal_rep(1, n)), is_(equal_to(1)))

    def test_full_burau_splits(self):
        assert_that(commutant_dimension(burau_full(3).substitute(t=2)), is_(equal_to(2)))

    def test_rational_roots(self):
        assert_that(rational_roots(RingMatrix([[2, 1], [0, 3]])), is_(equal_to([2, 3])))
        assert_that(rational_roots(RingMatrix([[0, -1], [1, 0]])), is_(equal_to([])))

    def test_common_eigenvectors(self):
        assert_that(common_eigenvectors(pascal_rep(1, 2)), is_(equal_to([])))
        rep = BraidRep(3, [RingMatrix.diagonal([1, 2]), RingMatrix([[1, 0], [1, 2]])], "test")
        vectors = common_eigenvectors(rep)
        assert_that(vectors, has_length(1))
        assert_that(vectors[0][0], is_(equal_to(ZERO)))


class TestIrreducibilityCheck:

    def test_humphries(self):
        for n in range(1, 5):
            report = irreducibility_check(n, 1)
            assert_that(report.commutant_dim, is_(equal_to(1)))
            assert_that(report.subspace_irreducible, is_(equal_to(True)))
            assert_that(report.n_q_value, is_(equal_to(n)))
            assert_that(report.per_r, has_length(n // 2 + 1))
            assert_that(report.invariant_vectors, is_(equal_to([])))

    @attr("slow")
    def test_humphries_large(self):
        for n in (5, 6):
            assert_that(irreducibility_check(n, 1).commutant_dim, is_(equal_to(1)))

    def test_boundary_at_minus_one(self):
        """
        (2)_q vanishes at q = -1 and the representation has an invariant line.

        """
        report = irreducibility_check(2, -1)
        assert_that(report.n_q_value, is_(equal_to(ZERO)))
        assert_that(report.subspace_irreducible, is_(equal_to(False)))
        assert_that(report.invariant_vectors, has_length(1))
        vector = report.invariant_vectors[0]
        assert_that([vector[0], vector[2]], is_(equal_to([ZERO, ZERO])))
        assert_that(vector[1].is_zero, is_(equal_to(False)))
        assert_that(report.to_dict()["subspace_irreducible_lambda1"], is_(equal_to(False)))

    def test_raw_reading(self):
        report = irreducibility_check(2, 2, reading=RAW)
        assert_that(report.reading, is_(equal_to(RAW)))
        assert_that(report.to_dict()["per_r"], has_length(2))

    def test_free_parameters(self):
        lambdas = LambdaVector.from_free_parameters(3, [1, 2, 3], 2)
        report = irreducibility_check(3, 2, lambdas)
        assert_that(report.commutant_dim, is_(greater_than(0)))
        assert_that(report.to_dict()["lambda"], is_(equal_to(["1", "2", "3/2", "3"])))
        assert_that(report.subspace_irreducible, is_(none()))
        assert_that(report.to_dict()["subspace_irreducible_lambda1"], is_(none()))

    def test_rejects_bad_input(self):
        assert_that(calling(irreducibility_check).with_args(2, 1, reading="sideways"), raises(ParameterError))
        assert_that(calling(irreducibility_check).with_args(2, Q), raises(ParameterError))
        assert_that(
            calling(irreducibility_check).with_args(1, 1, LambdaVector([V, ONE])),
            raises(ParameterError),
        )


class TestEquivalence:

    def setup(self):
        self.samples = sample_points(3)

    def test_sample_points(self):
        assert_that(self.samples, has_length(3))
        assert_that(sample_points(3), is_(equal_to(self.samples)))
        for sample in self.samples:
            for value in sample.values():
                assert_that(value > 0 and value != 1, is_(equal_to(True)))

    def test_identical_images(self):
        report = equivalence_check(tuba_wenzl_rep(3, [1, 1, 1]), kosyak_rep(1, 2), self.samples)
        assert_that(report.verdict, is_(equal_to(EQUIVALENT_AT_SAMPLES)))

    def test_tuba_wenzl_dimension_2(self):
        report = equivalence_check(
            tuba_wenzl_rep(2, [V, T]),
            kosyak_rep(Q, 1, LambdaVector([V, T]), packaging=ABSORBED),
            self.samples,
        )
        assert_that(report.verdict, is_(equal_to(EQUIVALENT_AT_SAMPLES)))
        assert_that(report.samples, has_length(3))

    def test_tuba_wenzl_dimension_3(self):
        """
        q^-1 = lambda_1^2 / (lambda_0 lambda_2) relates the two parametrisations.

        """
        q = T * V ** -4
        report = equivalence_check(
            tuba_wenzl_rep(3, [ONE, Q, T]),
            kosyak_rep(q, 2, LambdaVector([ONE, Q, T]), packaging=ABSORBED),
            self.samples,
        )
        assert_that(report.verdict, is_(equal_to(EQUIVALENT_AT_SAMPLES)))

    def test_inequivalent(self):
        report = equivalence_check(pascal_rep(1, 2), pascal_rep(Q, 2), self.samples)
        assert_that(report.verdict, is_(equal_to(INEQUIVALENT)))
        report = equivalence_check(pascal_rep(1, 2), pascal_rep(1, 3), self.samples)
        assert_that(report.verdict, is_(equal_to(INEQUIVALENT)))
        assert_that(report.reason, is_(equal_to("dimensions differ: 3 and 4")))

    def test_reflexive_and_symmetric(self):
        families = [
            [pascal_rep(1, 2), pascal_rep(Q, 2), tuba_wenzl_rep(3, [1, 1, 1]), burau_full(3), lawrence_krammer(3)],
            [burau_reduced(4), burau_full(4)],
        ]
        for reps in families:
            for rep in reps:
                report = equivalence_check(rep, rep, self.samples)
                assert_that(report.verdict, is_(equal_to(EQUIVALENT_AT_SAMPLES)))
            for a in reps:
                for b in reps:
                    forward = equivalence_check(a, b, self.samples).verdict
                    assert_that(equivalence_check(b, a, self.samples).verdict, is_(equal_to(forward)))

    def test_rejects_incomparable(self):
        assert_that(
            calling(equivalence_check).with_args(burau_reduced(4), pascal_rep(1, 2), self.samples),
            raises(ShapeError),
        )
        assert_that(
            calling(equivalence_check).with_args(
                tuba_wenzl_rep(5, [1, 1, 1, 1, 1], gamma=1),
                pascal_rep(1, 4),
                self.samples,
            ),
            raises(ParameterError),
        )
        assert_that(
            calling(equivalence_check).with_args(burau_reduced(3), burau_reduced(3), [dict(v=2)]),
            raises(ParameterError),
        )


class TestSpectra:

    def test_conjugate_generators(self):
        report = spectra_check(burau_reduced(4), sample_points(2))
        assert_that(report.status, is_(equal_to(PASS)))

    def test_failure(self):
        rep = BraidRep(3, [RingMatrix.diagonal([1, T]), RingMatrix.identity(2)], "broken")
        report = spectra_check(rep, [dict(v=2, t=3)])
        assert_that(report.status, is_(equal_to(FAIL)))
        assert_that(report.to_dict()["failures"], is_(equal_to([dict(sample=dict(t="3", v="2"), generator=1)])))
