"""
Object graph factories.

"""
from microcosm.api import binding, defaults

from microcosm_braidreps.analysis import ANTI_TRANSPOSE, DEFAULT_SEED
from microcosm_braidreps.checkers import BraidVerifier, EquivalenceChecker, IrreducibilityChecker, SpectraChecker
from microcosm_braidreps.matrix import DEFAULT_MAX_SYMBOLIC_SIZE
from microcosm_braidreps.registry import FamilyRegistry


@binding("family_registry")
def configure_family_registry(graph):
    return FamilyRegistry(graph)


@binding("braid_verifier")
def configure_braid_verifier(graph):
    return BraidVerifier(graph)


@binding("irreducibility_checker")
@defaults(
    minor_reading=ANTI_TRANSPOSE,
    max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE,
)
def configure_irreducibility_checker(graph):
    """
    Configure which reading of the minor criterion is evaluated.

    """
    return IrreducibilityChecker(
        graph,
        minor_reading=graph.config.irreducibility_checker.minor_reading,
        max_symbolic_size=int(graph.config.irreducibility_checker.max_symbolic_size),
    )


@binding("equivalence_checker")
@defaults(
    seed=DEFAULT_SEED,
    attempts=8,
    sample_count=3,
)
def configure_equivalence_checker(graph):
    config = graph.config.equivalence_checker
    return EquivalenceChecker(
        graph,
        seed=int(config.seed),
        attempts=int(config.attempts),
        sample_count=int(config.sample_count),
    )


@binding("spectra_checker")
@defaults(
    seed=DEFAULT_SEED,
    sample_count=3,
)
def configure_spectra_checker(graph):
    config = graph.config.spectra_checker
    return SpectraChecker(
        graph,
        seed=int(config.seed),
        sample_count=int(config.sample_count),
    )
