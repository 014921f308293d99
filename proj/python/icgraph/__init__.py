"""Intrinsic Cech persistence diagrams of finite metric graphs.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._icgraph import (
    GraphError,
    MetricGraph,
    bottleneck,
    computed_diagram,
    d_ic,
    generate,
    load,
    normalize,
    parse,
    predicted_diagram,
    shortest_loop_lengths,
    verify,
    __version__,
)

__all__ = [
    "GraphError",
    "MetricGraph",
    "bottleneck",
    "computed_diagram",
    "d_ic",
    "generate",
    "load",
    "normalize",
    "parse",
    "predicted_diagram",
    "shortest_loop_lengths",
    "verify",
    "__version__",
]
