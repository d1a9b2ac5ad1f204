"""Outer independent Roman domination on cylinder graphs.

Thin wrapper around the compiled extension.  The extension lives inside the
package in an installed wheel; when running against a plain CMake build tree
it sits on sys.path as a top-level module instead.
"""

try:
    from ._oird import *  # noqa: F401,F403
except ImportError:  # CMake build tree layout
    from _oird import *  # noqa: F401,F403
