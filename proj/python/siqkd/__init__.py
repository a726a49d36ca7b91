"""Finite-size secure key rate engine for interference-based QKD."""

try:
    from ._siqkd import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _siqkd import *  # noqa: F401,F403
