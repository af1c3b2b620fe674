"""Workbench for semi-transitive colorings, stable orders and budgeted
enumerations. The heavy lifting lives in the compiled extension; installed
wheels carry it inside the package, in-tree builds put it on sys.path."""

try:
    from . import _core as _impl
    from ._core import *  # noqa: F401,F403
except ImportError:
    import _core as _impl
    from _core import *  # noqa: F401,F403

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
