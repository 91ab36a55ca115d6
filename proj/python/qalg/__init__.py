"""Exact computation in quantum matrix algebras.

Thin wrapper over the compiled _qalg extension; see the project README for
the operation catalogue.
"""

try:
    from ._qalg import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover
    from _qalg import *  # noqa: F401,F403  (in-tree build layout)

__version__ = "0.1.0"
