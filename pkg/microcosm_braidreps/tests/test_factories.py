"""
Factory tests.

"""
from hamcrest import (
    assert_that,
    equal_to,
    instance_of,
    is_,
)

from microcosm.api import create_object_graph
from microcosm.loaders import load_from_dict

import microcosm_braidreps.factories  # noqa: F401
from microcosm_braidreps.analysis import ANTI_TRANSPOSE, DEFAULT_SEED, RAW
from microcosm_braidreps.checkers import BraidVerifier, EquivalenceChecker, IrreducibilityChecker, SpectraChecker
from microcosm_braidreps.matrix import DEFAULT_MAX_SYMBOLIC_SIZE
from microcosm_braidreps.registry import FamilyRegistry


def test_configure_services():
    """
    Should create every service with its default configuration.

    """
    graph = create_object_graph(name="braidreps", testing=True)
    assert_that(graph.family_registry, is_(instance_of(FamilyRegistry)))
    assert_that(graph.braid_verifier, is_(instance_of(BraidVerifier)))
    assert_that(graph.irreducibility_checker, is_(instance_of(IrreducibilityChecker)))
    assert_that(graph.equivalence_checker, is_(instance_of(EquivalenceChecker)))
    assert_that(graph.spectra_checker, is_(instance_of(SpectraChecker)))

    assert_that(graph.irreducibility_checker.minor_reading, is_(equal_to(ANTI_TRANSPOSE)))
    assert_that(graph.irreducibility_checker.max_symbolic_size, is_(equal_to(DEFAULT_MAX_SYMBOLIC_SIZE)))
    assert_that(graph.equivalence_checker.seed, is_(equal_to(DEFAULT_SEED)))
    assert_that(graph.equivalence_checker.attempts, is_(equal_to(8)))
    assert_that(graph.spectra_checker.sample_count, is_(equal_to(3)))


def test_configure_overrides():
    """
    Should honor loaded configuration.

    """
    loader = load_from_dict(
        irreducibility_checker=dict(minor_reading=RAW, max_symbolic_size="6"),
        equivalence_checker=dict(seed=7, sample_count=2),
    )
    graph = create_object_graph(name="braidreps", testing=True, loader=loader)
    assert_that(graph.irreducibility_checker.minor_reading, is_(equal_to(RAW)))
    assert_that(graph.irreducibility_checker.max_symbolic_size, is_(equal_to(6)))
    assert_that(graph.equivalence_checker.seed, is_(equal_to(7)))
    assert_that(graph.equivalence_checker.sample_count, is_(equal_to(2)))
