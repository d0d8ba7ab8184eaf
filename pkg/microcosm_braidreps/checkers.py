"""
Verification services bound into the object graph.

Each service wraps the pure functions of `braids` and `analysis` with its configuration and
logs what it finds.

"""
from microcosm_logging.decorators import logger

from microcosm_braidreps.analysis import (
    equivalence_check,
    irreducibility_check,
    sample_points,
    spectra_check,
)
from microcosm_braidreps.braids import verify_braid_relations


@logger
class BraidVerifier:

    def __init__(self, graph):
        self.graph = graph

    def verify(self, rep):
        """
        Check the braid relations of a representation and log each failing relation.

        """
        report = verify_braid_relations(rep)
        for failure in report.failures:
            self.logger.debug(
                "{} relation {} fails for {!r}".format(failure.relation, failure.generators, rep),
            )
        self.logger.info("Braid relations for {!r}: {} ({} checked)".format(rep, report.status, report.checked))
        return report


@logger
class IrreducibilityChecker:

    def __init__(self, graph, minor_reading, max_symbolic_size):
        self.graph = graph
        self.minor_reading = minor_reading
        self.max_symbolic_size = max_symbolic_size

    def check(self, n, q, lambdas=None):
        report = irreducibility_check(
            n,
            q,
            lambdas,
            reading=self.minor_reading,
            max_symbolic_size=self.max_symbolic_size,
        )
        for entry in report.per_r:
            self.logger.debug("n={} r={} witness={}".format(n, entry.r, entry.witness))
        if not report.oracle_agrees:
            self.logger.info(
                "Minor criterion ({}) and commutant oracle disagree at n={}, q={}: {} vs commutant dimension {}".format(
                    self.minor_reading,
                    n,
                    q,
                    report.operator_irreducible,
                    report.commutant_dim,
                ),
            )
        return report

    def sweep(self, configurations):
        """
        Run the check over (n, q, lambdas) configurations and log the agreement count.

        """
        reports = [self.check(n, q, lambdas) for n, q, lambdas in configurations]
        agreeing = sum(1 for report in reports if report.oracle_agrees)
        self.logger.info("Irreducibility sweep: oracle agrees on {} of {} configurations".format(
            agreeing,
            len(reports),
        ))
        return reports


@logger
class EquivalenceChecker:

    def __init__(self, graph, seed, attempts, sample_count):
        self.graph = graph
        self.seed = seed
        self.attempts = attempts
        self.sample_count = sample_count

    def check(self, rep_a, rep_b, samples=None):
        samples = sample_points(self.sample_count, self.seed) if samples is None else samples
        report = equivalence_check(rep_a, rep_b, samples, seed=self.seed, attempts=self.attempts)
        self.logger.info("Equivalence of {!r} and {!r}: {} ({})".format(rep_a, rep_b, report.verdict, report.reason))
        return report


@logger
class SpectraChecker:

    def __init__(self, graph, seed, sample_count):
        self.graph = graph
        self.seed = seed
        self.sample_count = sample_count

    def check(self, rep, samples=None):
        samples = sample_points(self.sample_count, self.seed) if samples is None else samples
        report = spectra_check(rep, samples)
        if not report.passed:
            self.logger.warning("Spectra differ for {!r} at {} points".format(rep, len(report.failures)))
        return report
