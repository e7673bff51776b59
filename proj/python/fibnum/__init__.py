"""Zeckendorf and Chung-Graham numeration backed by synthesized automata.

Digit strings are least-significant digit first. Multi-track words use
bracketed tuples, e.g. ``"[2,1][0,0]"``.
"""

from ._fibnum import (
    Automaton,
    InputError,
    ParseError,
    RelationError,
    SynthesisError,
    apply_relation,
    automaton_names,
    build,
    cg_encode,
    cg_split,
    cg_valid,
    cg_violation,
    fib,
    phi_floor,
    value,
    verify,
    zeck_encode,
    zeck_valid,
)

__all__ = [
    "Automaton",
    "InputError",
    "ParseError",
    "RelationError",
    "SynthesisError",
    "apply_relation",
    "automaton_names",
    "build",
    "cg_encode",
    "cg_split",
    "cg_valid",
    "cg_violation",
    "fib",
    "phi_floor",
    "value",
    "verify",
    "zeck_encode",
    "zeck_valid",
]


def add(system: str, x: str, y: str) -> str:
    """Sum of two valid representations through the synthesized adder."""
    relation = build({"zeck": "zeckadd", "cg": "cgadd"}[system])
    (z,) = apply_relation(relation, [x, y], 2)
    return z
