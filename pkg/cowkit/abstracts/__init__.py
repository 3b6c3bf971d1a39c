from .certificate import *  # noqa
from .clock import *  # noqa
from .graph import *  # noqa
from .limits import *  # noqa
from .partition import *  # noqa
from .result import *  # noqa
from .trace import *  # noqa
