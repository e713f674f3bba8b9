from ._core import (
    InvalidData,
    ParseError,
    WindowOverflow,
    axioms,
    bracket,
    builtin_names,
    flow,
    run,
    w_algebra,
)

__all__ = [
    "InvalidData",
    "ParseError",
    "WindowOverflow",
    "axioms",
    "bracket",
    "builtin_names",
    "flow",
    "run",
    "w_algebra",
]
