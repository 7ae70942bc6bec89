"""p-elastica energies of planar curve systems, level families and grids."""

try:
    from ._elastica import *  # noqa: F401,F403  (installed package layout)
    from ._elastica import __version__  # noqa: F401
except ImportError:  # build-tree layout: _elastica.so next to the package dir
    from _elastica import *  # noqa: F401,F403
    from _elastica import __version__  # noqa: F401
