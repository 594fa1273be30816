"""Exact combinatorics of graphs without k+1 disjoint cycles.

Thin python layer over the C++ core: graph primitives, exact cycle packing
and blockers, redundant-blocker certificates, exhaustive censuses, seeded
uniform samplers, and high-precision generating-function constants.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree runs put the extension directly on sys.path
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
