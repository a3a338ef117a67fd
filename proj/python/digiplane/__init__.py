from _digiplane import *  # noqa: F401,F403
from _digiplane import catalog  # noqa: F401
