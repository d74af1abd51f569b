"""Wilson-type products over finite fields."""

from ._wilsonff import (
    SUITES,
    Field,
    brute_product,
    card_closed,
    dickson_first,
    dickson_second,
    evaluate,
    irrational_products,
    orbit_count,
    prod_S,
    prod_S_single,
    prod_T,
    quadruple_from_one,
    special_angle,
    sqrt2_class,
    table,
    tower,
    vanishing_poly,
    verify,
)

__all__ = [
    "SUITES",
    "Field",
    "brute_product",
    "card_closed",
    "dickson_first",
    "dickson_second",
    "evaluate",
    "irrational_products",
    "orbit_count",
    "prod_S",
    "prod_S_single",
    "prod_T",
    "quadruple_from_one",
    "special_angle",
    "sqrt2_class",
    "table",
    "tower",
    "vanishing_poly",
    "verify",
]
