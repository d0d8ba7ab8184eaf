"""
Verification and analysis report records.

Reports are plain namedtuples; `to_dict` renders the JSON shapes used by the command line.

"""
from collections import namedtuple


PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"

EQUIVALENT_AT_SAMPLES = "equivalent_at_samples"
INEQUIVALENT = "inequivalent"
UNDETERMINED = "undetermined"


def _matrix_dict(matrix):
    return None if matrix is None else matrix.to_json()


class RelationFailure(namedtuple("RelationFailure", ["relation", "generators", "difference"])):
    """
    A braid or commutation relation that does not hold, with left minus right side.

    """
    __slots__ = ()

    def to_dict(self):
        return dict(
            relation=self.relation,
            generators=list(self.generators),
            difference=_matrix_dict(self.difference),
        )


class RelationReport(namedtuple("RelationReport", ["family", "n", "dim", "status", "checked", "failures"])):
    __slots__ = ()

    @property
    def passed(self):
        return self.status != FAIL

    def to_dict(self):
        return dict(
            check="braid_relations",
            family=self.family,
            n=self.n,
            dim=self.dim,
            status=self.status,
            checked=self.checked,
            failures=[failure.to_dict() for failure in self.failures],
        )


class CheckReport(namedtuple("CheckReport", ["check", "n", "status", "witness", "details"])):
    """
    Outcome of a named identity check; the witness is the offending difference matrix.

    """
    __slots__ = ()

    def __new__(cls, check, n, status, witness=None, details=None):
        return super(CheckReport, cls).__new__(cls, check, n, status, witness, details or [])

    @property
    def passed(self):
        return self.status != FAIL

    @classmethod
    def combine(cls, check, n, reports):
        """
        Fold sub-checks into one report that fails if any of them fails.

        """
        failed = [report for report in reports if not report.passed]
        return cls(
            check=check,
            n=n,
            status=FAIL if failed else PASS,
            witness=failed[0].witness if failed else None,
            details=[report.check for report in failed],
        )

    def to_dict(self):
        return dict(
            check=self.check,
            n=self.n,
            status=self.status,
            witness=_matrix_dict(self.witness),
            details=list(self.details),
        )


class MinorWitness(namedtuple("MinorWitness", ["r", "witness"])):
    __slots__ = ()

    def to_dict(self):
        return dict(r=self.r, witness=None if self.witness is None else list(self.witness))


class IrreducibilityReport(namedtuple("IrreducibilityReport", [
    "n",
    "q",
    "lambdas",
    "reading",
    "per_r",
    "operator_irreducible",
    "n_q_value",
    "subspace_irreducible",
    "commutant_dim",
    "oracle_agrees",
    "invariant_vectors",
])):
    """
    Minor criterion per r alongside the commutant oracle.

    `operator_irreducible` is the minor-criterion verdict; `oracle_agrees` compares it with
    `commutant_dim == 1` and is recorded, never enforced.

    """
    __slots__ = ()

    def to_dict(self):
        return {
            "n": self.n,
            "q": self.q.to_text(),
            "lambda": [value.to_text() for value in self.lambdas],
            "reading": self.reading,
            "per_r": [entry.to_dict() for entry in self.per_r],
            "operator_irreducible": self.operator_irreducible,
            "n_q_value": self.n_q_value.to_text(),
            "subspace_irreducible_lambda1": self.subspace_irreducible,
            "commutant_dim": self.commutant_dim,
            "oracle_agrees": self.oracle_agrees,
            "invariant_vectors": [
                [value.to_text() for value in vector]
                for vector in self.invariant_vectors
            ],
        }


class EquivalenceReport(namedtuple("EquivalenceReport", ["verdict", "reason", "samples"])):
    """
    Equivalence verdict; `equivalent_at_samples` is evidence at the listed points, not a proof.

    """
    __slots__ = ()

    def to_dict(self):
        return dict(
            check="equivalence",
            verdict=self.verdict,
            reason=self.reason,
            samples=[_sample_dict(sample) for sample in self.samples],
        )


class SpectraReport(namedtuple("SpectraReport", ["status", "samples", "failures"])):
    __slots__ = ()

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        return dict(
            check="spectra",
            status=self.status,
            samples=[_sample_dict(sample) for sample in self.samples],
            failures=[
                dict(sample=_sample_dict(sample), generator=generator)
                for sample, generator in self.failures
            ],
        )


def _sample_dict(sample):
    return {
        name: "{}".format(value)
        for name, value in sorted(sample.items())
    }
