"""
Command line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

"""
from argparse import ArgumentParser
from json import loads
from sys import argv as sys_argv, exit, stderr, stdout

from microcosm.api import create_object_graph
from microcosm.loaders import load_from_dict

import microcosm_braidreps.factories  # noqa: F401 (registers bindings)
from microcosm_braidreps.braids import evaluate_word
from microcosm_braidreps.errors import BraidRepsError, ParameterError, VerificationFailure
from microcosm_braidreps.export import FORMATS, JSON, TEXT, render_matrix, render_rep, render_reports
from microcosm_braidreps.families import PACKAGINGS, LambdaVector
from microcosm_braidreps.operations import irreducibility_sweep, quantum_checks, verify_sweep
from microcosm_braidreps.parsing import parse_poly, parse_poly_list, parse_word
from microcosm_braidreps.quantum import MODULES
from microcosm_braidreps.registry import FAMILIES
from microcosm_braidreps.reports import EQUIVALENT_AT_SAMPLES


SUBCOMMANDS = ("build", "verify", "word", "irreducible", "equiv", "quantum-check", "export")

SPEC_FLAGS = ("family", "n", "q", "t", "dim", "D", "gamma", "packaging", "module")


def parse_args(argv):
    parser = ArgumentParser(prog="braidreps", description="Exact braid group representations")
    parser.add_argument("command", choices=SUBCOMMANDS)
    parser.add_argument("--family", choices=sorted(FAMILIES))
    parser.add_argument("--n", type=int)
    parser.add_argument("--q")
    parser.add_argument("--t")
    parser.add_argument("--lambda", dest="lambdas")
    parser.add_argument("--D")
    parser.add_argument("--gamma")
    parser.add_argument("--dim", type=int)
    parser.add_argument("--packaging", choices=PACKAGINGS)
    parser.add_argument("--module", choices=MODULES)
    parser.add_argument("--non-strict", action="store_true", help="build even if the lambda condition fails")
    parser.add_argument("--word")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--out")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--reading", choices=("anti_transpose", "raw"))
    parser.add_argument("--sweep", action="store_true", help="run the built-in sweep (verify, irreducible)")
    parser.add_argument("--spec", action="append", default=[], help="representation spec as JSON")
    return parser.parse_args(argv)


def create_graph(args):
    config = {}
    if args.seed is not None:
        config["equivalence_checker"] = dict(seed=args.seed)
        config["spectra_checker"] = dict(seed=args.seed)
    if args.reading is not None:
        config["irreducibility_checker"] = dict(minor_reading=args.reading)
    graph = create_object_graph(name="braidreps", loader=load_from_dict(config))
    graph.use("logging")
    return graph


def spec_from_args(args, text=None):
    """
    Representation spec from a JSON document overlaid with the command line flags.

    """
    try:
        spec = loads(text) if text else {}
    except ValueError as error:
        raise ParameterError("--spec is not valid JSON: {}".format(error))
    if not isinstance(spec, dict):
        raise ParameterError("--spec must be a JSON object")
    for flag in SPEC_FLAGS:
        value = getattr(args, flag)
        if value is not None:
            spec[flag] = value
    if args.lambdas is not None:
        spec["lambda"] = args.lambdas.split(",")
    if args.non_strict:
        spec["strict"] = False
    if not spec.get("family"):
        raise ParameterError("a representation family is required (--family or --spec)")
    return spec


def build_rep(graph, args):
    return graph.family_registry.build(spec_from_args(args, args.spec[0] if args.spec else None))


def run_build(graph, args):
    return render_rep(build_rep(graph, args), args.format or TEXT), 0


def run_export(graph, args):
    return render_rep(build_rep(graph, args), args.format or JSON), 0


def run_verify(graph, args):
    if args.sweep:
        reports = verify_sweep(graph)
    else:
        reports = [graph.braid_verifier.verify(build_rep(graph, args))]
    failed = any(not report.passed for report in reports)
    return render_reports(reports, args.format or JSON), 1 if failed else 0


def run_word(graph, args):
    if args.word is None:
        raise ParameterError("word needs --word")
    rep = build_rep(graph, args)
    word = parse_word(args.word, strands=rep.strands)
    return render_matrix(evaluate_word(rep, word), args.format or TEXT), 0


def run_irreducible(graph, args):
    if args.sweep:
        return render_reports(irreducibility_sweep(graph), args.format or JSON), 0
    n = 2 if args.n is None else args.n
    q = parse_poly(args.q or "1")
    lambdas = None
    if args.lambdas is not None:
        lambdas = LambdaVector(parse_poly_list(args.lambdas), q)
    report = graph.irreducibility_checker.check(n, q, lambdas)
    return render_reports([report], args.format or JSON), 0


def run_equiv(graph, args):
    if len(args.spec) != 2:
        raise ParameterError("equiv needs exactly two --spec documents")
    reps = [graph.family_registry.build(spec_from_args(_no_flags(args), text)) for text in args.spec]
    report = graph.equivalence_checker.check(*reps)
    return render_reports([report], args.format or JSON), 0 if report.verdict == EQUIVALENT_AT_SAMPLES else 1


def run_quantum_check(graph, args):
    reports = quantum_checks(2 if args.n is None else args.n)
    failed = any(not report.passed for report in reports)
    return render_reports(reports, args.format or JSON), 1 if failed else 0


def _no_flags(args):
    # for equiv both representations come from their own documents
    stripped = type(args)(**vars(args))
    for flag in SPEC_FLAGS:
        setattr(stripped, flag, None)
    stripped.lambdas = None
    return stripped


COMMANDS = {
    "build": run_build,
    "export": run_export,
    "verify": run_verify,
    "word": run_word,
    "irreducible": run_irreducible,
    "equiv": run_equiv,
    "quantum-check": run_quantum_check,
}


def run(argv, output=None, errors=None):
    """
    Run one command and return its exit code.

    """
    output = output or stdout
    errors = errors or stderr
    try:
        args = parse_args(argv)
    except SystemExit as error:
        return error.code

    try:
        graph = create_graph(args)
        text, code = COMMANDS[args.command](graph, args)
    except BraidRepsError as error:
        errors.write("braidreps: {}\n".format(error))
        return error.exit_code

    if args.out:
        with open(args.out, "w") as file_:
            file_.write(text + "\n")
    else:
        output.write(text + "\n")
    if code:
        errors.write("braidreps: {}\n".format(VerificationFailure("verification failed")))
    return code


def main():
    exit(run(sys_argv[1:]))
