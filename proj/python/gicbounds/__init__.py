try:
    from ._gicbounds import *  # noqa: F401,F403
except ImportError:  # build-tree layout puts the extension on sys.path directly
    from _gicbounds import *  # noqa: F401,F403
