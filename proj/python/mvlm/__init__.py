"""Multi-valued regulatory network models.

Parse and serialize models, compute their asynchronous or synchronous
dynamics, put tables into canonical, normalized or minimal form, and
decide whether two models generate the same transition system.
"""

from ._core import (  # noqa: F401
    CapacityError,
    ContractError,
    DomainError,
    Error,
    Model,
    ParseError,
    StructuralError,
    TransitionSystem,
    async_ts,
    canonize,
    complete,
    complete_step,
    contexts,
    equivalent,
    export_ts,
    is_canonical,
    is_normalized,
    minimize,
    minimize_step,
    mtv,
    normalize,
    observability,
    observable_in_param,
    observable_in_ts,
    oracle,
    parse,
    serialize,
    sync_ts,
    ts_equal,
    validate,
)

__all__ = [
    "CapacityError",
    "ContractError",
    "DomainError",
    "Error",
    "Model",
    "ParseError",
    "StructuralError",
    "TransitionSystem",
    "async_ts",
    "canonize",
    "complete",
    "complete_step",
    "contexts",
    "equivalent",
    "export_ts",
    "is_canonical",
    "is_normalized",
    "minimize",
    "minimize_step",
    "mtv",
    "normalize",
    "observability",
    "observable_in_param",
    "observable_in_ts",
    "oracle",
    "parse",
    "serialize",
    "sync_ts",
    "ts_equal",
    "validate",
]
