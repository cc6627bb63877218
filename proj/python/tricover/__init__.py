"""Exact fractional and integer hyperplane k-covers of the triangular grid T_d(n)."""

try:
    from ._tricover import *  # installed layout: extension inside the package
    from ._tricover import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _tricover import *  # noqa: F401,F403
    from _tricover import __doc__  # noqa: F401
