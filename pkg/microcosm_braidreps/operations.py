"""
Batch operations over the object graph.

"""
from microcosm_braidreps.families import LambdaVector
from microcosm_braidreps.quantum import (
    SYMMETRIC_SQUARE,
    sl2_module,
    uq_sl2_module,
    verify_antipode,
    verify_chevalley_defining,
    verify_classical_limit,
    verify_classical_tensor_power,
    verify_coassociativity,
    verify_exp_classical,
    verify_exp_quantum,
    verify_lemma_sym,
    verify_sl2_relations,
    verify_uq_relations,
)
from microcosm_braidreps.ring import rational, scalar


KOSYAK_SAMPLES = (
    dict(n=2, **{"lambda": ["1", "1", "q"], "packaging": "absorbed"}),
    dict(n=2, **{"lambda": ["q", "q^2", "q^3"], "packaging": "twisted"}),
    dict(n=3, **{"lambda": ["1", "q", "q^-1", "1"], "packaging": "twisted"}),
    dict(n=4, **{"lambda": ["q", "t", "q", "q^2*t^-1", "q"], "packaging": "twisted"}),
)

IRREDUCIBILITY_Q_VALUES = (1, 2, 3, -2, rational(1, 2), rational(1, 3))
IRREDUCIBILITY_RATIOS = (2, rational(1, 3))


def builtin_specs():
    """
    The representation specs verified by `verify --sweep`.

    """
    specs = [dict(family="pascal", n=n) for n in range(1, 7)]
    specs.extend(dict(family="burau", n=n) for n in range(2, 7))
    specs.extend(dict(family="burau-reduced", n=n) for n in range(3, 7))
    specs.extend(dict(family="lk", n=n) for n in range(3, 6))
    specs.extend(dict(family="kosyak", **sample) for sample in KOSYAK_SAMPLES)
    specs.extend(dict(family="chevalley", n=n) for n in (4, 5))
    specs.extend(dict(family="chevalley", n=n, module=SYMMETRIC_SQUARE) for n in (4, 5))
    return specs


def irreducibility_configurations(max_n=4):
    """
    The (n, q, lambdas) configurations checked by `irreducible --sweep`.

    Every q avoids the roots of unity where (n)_q vanishes; lambda is either all ones or the
    geometric vector lambda_k = c^k.

    """
    configurations = []
    for n in range(1, max_n + 1):
        for q in IRREDUCIBILITY_Q_VALUES:
            configurations.append((n, q, None))
            for ratio in map(scalar, IRREDUCIBILITY_RATIOS):
                configurations.append((n, q, LambdaVector([ratio ** k for k in range(n + 1)], q)))
    return configurations


def irreducibility_sweep(graph, configurations=None):
    return graph.irreducibility_checker.sweep(
        irreducibility_configurations() if configurations is None else configurations,
    )


def verify_sweep(graph, specs=None):
    """
    Build and verify every spec; returns the relation reports.

    """
    registry = graph.family_registry
    verifier = graph.braid_verifier
    return [
        verifier.verify(registry.build(spec))
        for spec in (builtin_specs() if specs is None else specs)
    ]


def quantum_checks(n):
    """
    Every quantum-module identity at highest weight n.

    """
    reports = [
        verify_sl2_relations(sl2_module(n)),
        verify_uq_relations(uq_sl2_module(n, 1)),
        verify_uq_relations(uq_sl2_module(n, -1)),
        verify_classical_limit(n),
        verify_exp_classical(n),
        verify_exp_quantum(n),
        verify_antipode(uq_sl2_module(n)),
        verify_classical_tensor_power(n),
    ]
    if n <= 3:
        reports.append(verify_lemma_sym(n))
    if n == 1:
        reports.append(verify_coassociativity())
    if n >= 2:
        reports.append(verify_chevalley_defining(n + 2))
    return reports
