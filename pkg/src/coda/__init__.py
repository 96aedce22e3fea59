"""Interpreter and algebra laboratory for the coda/data term calculus."""

from .terms import (
    Coda,
    Data,
    SizeBound,
    canonical_order,
    concat,
    count_pure_data,
    enumerate_pure_data,
    make_coda,
    measure,
    render,
    structural_eq,
)
from .engine import (
    Budget,
    Context,
    Definition,
    EvalOutcome,
    TriBool,
    add_definition,
    classify_atom,
    equal,
    evaluate,
    step,
)
from .encoding import bits, lang_atom, word
from .lang import parse
from .prelude import builtin, install_prelude, prelude
from .algebra import (
    ProbeSet,
    Verdict,
    check_associative,
    check_distributive,
    check_idempotent,
    check_left_distributivity,
    check_right_distributivity,
    default_probes,
    product,
    product_chain,
    sum_data,
)
from .spacelab import (
    CarrierTable,
    Endo,
    SemiringReport,
    classify,
    enumerate_endos,
    extract_carrier,
    field_check,
    iso_check,
    quotient_of_hom,
    verify_semialgebra,
)
from .organic import DEMOS, DemoReport, fibonacci, search_spaces

__all__ = [
    "CarrierTable",
    "DEMOS",
    "DemoReport",
    "Endo",
    "ProbeSet",
    "SemiringReport",
    "Verdict",
    "check_associative",
    "check_distributive",
    "check_idempotent",
    "check_left_distributivity",
    "check_right_distributivity",
    "classify",
    "default_probes",
    "enumerate_endos",
    "extract_carrier",
    "fibonacci",
    "field_check",
    "iso_check",
    "product",
    "product_chain",
    "quotient_of_hom",
    "search_spaces",
    "sum_data",
    "verify_semialgebra",
    "Coda",
    "Data",
    "SizeBound",
    "Budget",
    "Context",
    "Definition",
    "EvalOutcome",
    "TriBool",
    "add_definition",
    "bits",
    "builtin",
    "canonical_order",
    "classify_atom",
    "concat",
    "count_pure_data",
    "enumerate_pure_data",
    "equal",
    "evaluate",
    "install_prelude",
    "lang_atom",
    "make_coda",
    "measure",
    "parse",
    "prelude",
    "render",
    "step",
    "structural_eq",
    "word",
]
