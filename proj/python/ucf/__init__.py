"""Union-closed set family toolkit.

Thin wrapper over the compiled extension: closures and membership tests,
the colex/lex/max-lex orders, shadow computations, candidate-extremal
constructions, the exact minimizer for the smallest union-closed family
generated by n distinct k-sets, and the named verification suites.
"""

try:
    from ._ucf import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _ucf import *  # noqa: F401,F403  (build-tree layout)

__version__ = "0.1.0"
