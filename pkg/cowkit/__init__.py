# flake8: noqa
from .abstracts import *
from .clocks import *
from .dispatcher import *
from .document import *
from .exceptions import *
from .formats import *
from .fpt import *
from .oracle import *
from .patterns import *
from .reductions import *
from .solvers import *
from .utils import *
