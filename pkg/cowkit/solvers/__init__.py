# flake8: noqa
from .base import *
from .chain import *
from .pseudo_split import *
from .split import *
from .triangle_free import *
