"""Generalized b-orderings, factorial ideals and their power-series transfer."""

from importlib import resources

from .bridge import DigitSystem, digit_map, maxmin_certificate, property_c_check, t_ordering, transfer_check
from .domains import Integers, PolynomialsModP, get_domain
from .extnat import INF
from .factorials import FactoredIdealProduct, IdealSet, binomial, factorial, generalized_integer, support_ideals
from .ideals import FactoredIdeal, factor_ideal, ideal_divides, ord_ideal
from .orderings import OrderingConfig, OrderingResult, TieBreak, greedy_ordering, verify_well_definedness

__version__ = "0.1.0"


def schema_path():
    """Location of the JSON schema for CLI output."""
    return resources.files(__name__) / "schemas" / "output.schema.json"


__all__ = [
    "INF",
    "DigitSystem",
    "FactoredIdeal",
    "FactoredIdealProduct",
    "IdealSet",
    "Integers",
    "OrderingConfig",
    "OrderingResult",
    "PolynomialsModP",
    "TieBreak",
    "binomial",
    "digit_map",
    "factor_ideal",
    "factorial",
    "generalized_integer",
    "get_domain",
    "greedy_ordering",
    "ideal_divides",
    "maxmin_certificate",
    "ord_ideal",
    "property_c_check",
    "schema_path",
    "support_ideals",
    "t_ordering",
    "transfer_check",
    "verify_well_definedness",
]
