"""
Registry of representation families.

Builds a `BraidRep` from a representation spec such as
{"family": "kosyak", "n": 2, "q": "q", "lambda": ["1", "1", "q"], "packaging": "absorbed"}.
Text values are parsed as polynomials.

"""
from microcosm_logging.decorators import logger

from microcosm_braidreps.errors import FamilyNotFoundError, ParameterError
from microcosm_braidreps.families import (
    TWISTED,
    LambdaVector,
    burau_full,
    burau_reduced,
    kosyak_rep,
    lawrence_krammer,
    pascal_rep,
    tuba_wenzl_rep,
)
from microcosm_braidreps.parsing import parse_poly
from microcosm_braidreps.quantum import DEFINING, chevalley_braid_rep
from microcosm_braidreps.ring import Q, T, LaurentPolynomial, scalar


def scalar_value(value, default=None, name="value"):
    """
    Coerce a spec value (text, integer or polynomial) to a scalar.

    """
    if value is None:
        if default is None:
            raise ParameterError("{} is required".format(name))
        return default
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return scalar(value)
    raise ParameterError("{} must be a polynomial text or an integer, got {!r}".format(name, value))


def integer_value(value, default=None, name="n"):
    if value is None:
        if default is None:
            raise ParameterError("{} is required".format(name))
        return default
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ParameterError("{} must be an integer, got {!r}".format(name, value))


def _lambdas(spec, count):
    values = spec.get("lambda")
    if values is None:
        return None
    if not isinstance(values, (list, tuple)):
        raise ParameterError("lambda must be a list of polynomial texts or integers, got {!r}".format(values))
    values = [scalar_value(value, name="lambda") for value in values]
    if count is not None and len(values) != count:
        raise ParameterError("expected {} lambda entries, got {}".format(count, len(values)))
    return values


def _build_pascal(spec):
    return pascal_rep(scalar_value(spec.get("q"), Q, "q"), integer_value(spec.get("n"), 2))


def _build_kosyak(spec):
    n = integer_value(spec.get("n"), 2)
    q = scalar_value(spec.get("q"), Q, "q")
    values = _lambdas(spec, n + 1)
    return kosyak_rep(
        q,
        n,
        None if values is None else LambdaVector(values, q),
        packaging=spec.get("packaging") or TWISTED,
        strict=spec.get("strict", True),
    )


def _build_tuba_wenzl(spec):
    dim = integer_value(spec.get("dim"), name="dim")
    values = _lambdas(spec, dim)
    if values is None:
        raise ParameterError("tuba-wenzl needs a lambda vector")
    D = spec.get("D")
    gamma = spec.get("gamma")
    return tuba_wenzl_rep(
        dim,
        values,
        D=None if D is None else scalar_value(D, name="D"),
        gamma=None if gamma is None else scalar_value(gamma, name="gamma"),
    )


def _build_burau(spec):
    return burau_full(integer_value(spec.get("n"), 3), scalar_value(spec.get("t"), T, "t"))


def _build_burau_reduced(spec):
    return burau_reduced(integer_value(spec.get("n"), 3), scalar_value(spec.get("t"), T, "t"))


def _build_lawrence_krammer(spec):
    return lawrence_krammer(
        integer_value(spec.get("n"), 3),
        scalar_value(spec.get("t"), T, "t"),
        scalar_value(spec.get("q"), Q, "q"),
    )


def _build_chevalley(spec):
    return chevalley_braid_rep(integer_value(spec.get("n"), 4), spec.get("module") or DEFINING)


FAMILIES = {
    "pascal": _build_pascal,
    "kosyak": _build_kosyak,
    "tuba-wenzl": _build_tuba_wenzl,
    "burau": _build_burau,
    "burau-reduced": _build_burau_reduced,
    "lk": _build_lawrence_krammer,
    "chevalley": _build_chevalley,
}


@logger
class FamilyRegistry:

    def __init__(self, graph, families=None):
        self.graph = graph
        self.families = dict(FAMILIES if families is None else families)

    def names(self):
        return sorted(self.families)

    def register(self, name, builder):
        self.families[name] = builder

    def build(self, spec):
        """
        Build the representation a spec describes.

        :raises `FamilyNotFoundError` if the family is not registered

        """
        name = spec.get("family")
        try:
            builder = self.families[name]
        except KeyError:
            raise FamilyNotFoundError("unknown family {!r}; known families are {}".format(name, self.names()))
        rep = builder(spec)
        if rep.params.get("lambda_condition") == "violated":
            self.logger.warning(
                "Built {} representation although the lambda condition fails: {}".format(name, rep.params["lambda"]),
            )
        self.logger.debug("Built {!r}".format(rep))
        return rep
