from ._sincbounds import *  # noqa: F401,F403
from ._sincbounds import __version__  # noqa: F401
