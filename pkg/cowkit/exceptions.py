# pylint: disable=C0114,C0115
from typing import Any
from typing import Dict
from typing import Optional


class CowkitError(Exception):
    """Base class of every error raised by cowkit"""

    meta_info: Dict[str, Any]

    def __init__(self, error: str, **meta: Any):
        self.meta_info = {"error": error, **meta}
        super().__init__(error)


class GraphDomainError(CowkitError):
    """Vertex out of range, malformed graph rows or an invalid bipartition"""


class ClassificationError(CowkitError):
    def __init__(self, graph_class: str, obstruction: Optional[str] = None):
        error = f"Graph is not a {graph_class} graph"

        if obstruction:
            error = f"{error}: contains induced {obstruction}"

        super().__init__(error, graph_class=graph_class, obstruction=obstruction)


class LimitExceededError(CowkitError):
    def __init__(self, what: str, actual: int, allowed: int):
        error = f"{what} exceeds configured limit: actual={actual}, allowed={allowed}"
        super().__init__(error, what=what, actual=actual, allowed=allowed)


class ConfigurationError(CowkitError):
    """An environment override that is not a non-negative integer"""


class UnsolvedError(CowkitError):
    """No solver finished within the configured limits"""


class InvalidCertificateError(CowkitError):
    """A certificate handed to a translation fails verification"""


class FormatError(CowkitError):
    def __init__(self, error: str, offset: Optional[int] = None, line: Optional[int] = None):
        where = []

        if offset is not None:
            where.append(f"byte {offset}")

        if line is not None:
            where.append(f"line {line}")

        message = f"{error} (at {', '.join(where)})" if where else error
        super().__init__(message, offset=offset, line=line)
