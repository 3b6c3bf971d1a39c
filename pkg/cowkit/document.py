"""JSON result document written by the command line tool
"""
import json
from enum import Enum
from typing import Any
from typing import Dict
from typing import Optional
from typing import Union

from .abstracts import BicliqueCover
from .abstracts import CliqueCover
from .abstracts import Witness
from .exceptions import FormatError

Certificate = Union[Witness, CliqueCover, BicliqueCover]


class Problem(Enum):
    COW = "cow"
    ECC = "ecc"
    BICLIQUE = "biclique"
    RECOGNIZE = "recognize"
    TRANSFORM = "transform"
    GEN = "gen"
    VERIFY = "verify"


class ResultDocument:
    """Everything one command produced, serialized with sorted keys

    Args:
        problem: Command that produced the document
        input_digest: Fingerprint of the input graph, if there was one
        value: Width, class tag, decision or emitted graph6
        method: Route that produced `value`
        certificate: JSON-ready proof of `value`
        trace: Kernel trace summary
        timings: Milliseconds per phase, None to leave them out
        error: Reason the command stopped early
    """

    def __init__(
        self,
        problem: Problem,
        value: Any,
        input_digest: Optional[str] = None,
        method: Optional[str] = None,
        certificate: Any = None,
        trace: Optional[dict] = None,
        timings: Optional[Dict[str, float]] = None,
        error: Optional[str] = None,
    ):
        self.problem = problem
        self.value = value
        self.input_digest = input_digest
        self.method = method
        self.certificate = certificate
        self.trace = trace
        self.timings = timings
        self.error = error

    def to_dict(self) -> dict:
        payload = {
            "problem": self.problem.value,
            "input_digest": self.input_digest,
            "value": self.value,
            "method": self.method,
            "certificate": self.certificate,
            "trace": self.trace,
        }

        if self.timings is not None:
            payload["timings"] = self.timings

        if self.error is not None:
            payload["error"] = self.error

        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        try:
            payload = json.loads(text)
            problem = Problem(payload["problem"])
        except (ValueError, KeyError, TypeError) as err:
            raise FormatError(f"Not a result document: {err}") from err

        return cls(
            problem,
            payload.get("value"),
            input_digest=payload.get("input_digest"),
            method=payload.get("method"),
            certificate=payload.get("certificate"),
            trace=payload.get("trace"),
            timings=payload.get("timings"),
            error=payload.get("error"),
        )


def _int_sets(payload: Any, what: str) -> list:
    if not isinstance(payload, list) or not all(isinstance(s, list) for s in payload):
        raise FormatError(f"{what} must be a list of vertex lists")

    for vertex_set in payload:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in vertex_set):
            raise FormatError(f"{what} holds a vertex that is not an integer")

    return payload


def certificate_from_payload(payload: Any, kind: str) -> Certificate:
    """Rebuild a certificate from its JSON form: kind is witness, cliques or bicliques"""
    if kind == "witness":
        return Witness(_int_sets(payload, "Witness"))

    if kind == "cliques":
        return CliqueCover(_int_sets(payload, "Clique cover"))

    if kind == "bicliques":
        if not isinstance(payload, list) or not all(isinstance(pair, list) and len(pair) == 2 for pair in payload):
            raise FormatError("Biclique cover must be a list of [x part, y part] pairs")

        return BicliqueCover((xs, ys) for xs, ys in (_int_sets(pair, "Biclique") for pair in payload))

    raise FormatError(f"Unknown certificate kind: {kind}")


KIND_BY_PROBLEM = {
    Problem.COW: "witness",
    Problem.ECC: "cliques",
    Problem.BICLIQUE: "bicliques",
}


def load_certificate(text: str, kind: Optional[str] = None) -> Certificate:
    """Certificate stored in a result document, or a bare JSON list of sets"""
    try:
        payload = json.loads(text)
    except ValueError as err:
        raise FormatError(f"Certificate file is not JSON: {err}") from err

    if isinstance(payload, dict):
        document = ResultDocument.from_json(text)

        if kind is None:
            if document.problem not in KIND_BY_PROBLEM:
                raise FormatError(f"Documents of problem {document.problem.value} carry no cover")

            kind = KIND_BY_PROBLEM[document.problem]

        payload = document.certificate

    return certificate_from_payload(payload, kind or "witness")
