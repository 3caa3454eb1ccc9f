"""Exact first-order twisted Moyal algebra with numeric cross-checks."""

try:
    from ._twistedmoyal import *  # noqa: F401,F403  (installed package layout)
    from ._twistedmoyal import __version__  # noqa: F401
except ImportError:  # build-tree layout: the extension sits next to the package
    from _twistedmoyal import *  # noqa: F401,F403
    from _twistedmoyal import __version__  # noqa: F401
