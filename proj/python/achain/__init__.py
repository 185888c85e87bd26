"""Addition chains, Mersenne lifts and the Scholz bound l(2^n - 1) <= l(n) + n - 1."""

from ._achain import *  # noqa: F401,F403
from ._achain import __doc__  # noqa: F401
