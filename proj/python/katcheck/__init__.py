"""Decision procedures for Kleene algebra with tests.

Equivalence and inclusion of KAT expressions via partial derivatives and
bisimulation (with guarded-string counterexamples), elimination of the
reducible hypothesis shapes, while-program equivalence, and Hoare-triple
checking.
"""

from ._core import (
    CheckResult,
    Expr,
    HkatResult,
    ParseError,
    Prog,
    Signature,
    StateLimitError,
    __version__,
    equivalent,
    expr_to_text,
    gs_member,
    hkat_check,
    hoare_check,
    included,
    language_size,
    parse_expr,
    parse_prog,
    prog_equiv,
    prog_to_text,
    run_goal,
)

__all__ = [
    "CheckResult",
    "Expr",
    "HkatResult",
    "ParseError",
    "Prog",
    "Signature",
    "StateLimitError",
    "__version__",
    "equivalent",
    "expr_to_text",
    "gs_member",
    "hkat_check",
    "hoare_check",
    "included",
    "language_size",
    "parse_expr",
    "parse_prog",
    "prog_equiv",
    "prog_to_text",
    "run_goal",
]
