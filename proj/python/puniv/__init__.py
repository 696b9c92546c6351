"""Exact universal constructions for finite-dimensional Poisson algebras.

The heavy lifting lives in the compiled extension `_puniv`; this package just
re-exports it.  When installed as a wheel the extension sits inside the
package, in a build tree it sits next to it on sys.path.
"""

try:
    from ._puniv import *  # noqa: F401,F403
    from ._puniv import __doc__  # noqa: F401
except ImportError:
    from _puniv import *  # noqa: F401,F403
    from _puniv import __doc__  # noqa: F401
