"""Fixed-parameter route to complete width

A graph has complete width at most k iff its twin-free kernel embeds as an
induced subgraph of the prototype G[k]. G[k] has one vertex per subset of
{1..k}, two subsets being adjacent iff they are disjoint. Embedding the
kernel means picking distinct non-empty subsets ("labels") so that
neighbours get disjoint labels and non-neighbours get intersecting ones.
"""
import logging
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Optional
from typing import Set
from typing import Tuple

from .abstracts import Graph
from .abstracts import KernelTrace
from .abstracts import Limits
from .abstracts import Method
from .abstracts import ReductionStep
from .abstracts import SolveResult
from .abstracts import StepKind
from .abstracts import Witness
from .abstracts import iter_bits
from .abstracts import mask_of
from .abstracts import popcount
from .exceptions import GraphDomainError
from .exceptions import LimitExceededError
from .exceptions import UnsolvedError
from .oracle import verify_witness

logger = logging.getLogger("cowkit")


def subset_label(mask: int) -> str:
    """Readable name of a subset of {1..k} given as a bit mask, bit i standing for i + 1"""
    return "{" + ",".join(str(i + 1) for i in iter_bits(mask)) + "}"


def gk(k: int, limits: Optional[Limits] = None) -> Graph:
    """Prototype G[k]: vertex M for every subset mask of {1..k}, adjacent iff disjoint

    Vertex 0 is the empty set and is universal.
    """
    limits = limits or Limits.from_env()

    if k < 1:
        raise GraphDomainError("G[k] needs k >= 1", k=k)

    if k > limits.max_k:
        raise LimitExceededError("Parameter k", k, limits.max_k)

    size = 1 << k
    rows = []

    for m in range(size):
        rows.append(mask_of(other for other in range(size) if not other & m and other != m))

    return Graph(size, rows, [subset_label(m) for m in range(size)])


def gk_witness(k: int) -> Witness:
    """Witness of G[k]: set i holds every subset that contains element i"""
    if k < 1:
        raise GraphDomainError("G[k] needs k >= 1", k=k)

    return Witness({m for m in range(1 << k) if m >> i & 1} for i in range(k))


class LabelAssignment:
    """Vertex -> subset of {1..k} as a bit mask, bit i standing for element i + 1"""

    labels: Dict[int, int]
    k: int

    def __init__(self, labels: Mapping[int, int], k: int):
        self.labels = dict(labels)
        self.k = k

    def subset(self, v: int) -> frozenset:
        return frozenset(i + 1 for i in iter_bits(self.labels[v]))

    def satisfies(self, graph: Graph, distinct: bool = True) -> bool:
        """Neighbours carry disjoint labels and non-neighbours intersecting ones"""
        if set(self.labels) != set(range(graph.n)):
            return False

        if any(label >> self.k for label in self.labels.values()):
            return False

        if distinct and len(set(self.labels.values())) != graph.n:
            return False

        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                disjoint = not self.labels[u] & self.labels[v]

                if graph.has_edge(u, v) != disjoint:
                    return False

        return True

    def witness(self) -> Witness:
        """Sets N_i = vertices whose label holds element i, empty ones dropped"""
        sets = [{v for v, label in self.labels.items() if label >> i & 1} for i in range(self.k)]
        return Witness(s for s in sets if s)

    def __repr__(self) -> str:
        shown = {v: subset_label(label) for v, label in sorted(self.labels.items())}
        return f"LabelAssignment(k={self.k}, labels={shown})"


def labels_from_witness(graph: Graph, witness: Witness) -> LabelAssignment:
    """Label every vertex with the indices of the witness sets that hold it"""
    labels = {v: 0 for v in range(graph.n)}

    for i, vertex_set in enumerate(witness):
        for v in vertex_set:
            labels[v] |= 1 << i

    return LabelAssignment(labels, len(witness))


def _next_step(rows: Tuple[int, ...], alive: int) -> Optional[ReductionStep]:
    size = popcount(alive)

    for v in iter_bits(alive):
        if popcount(rows[v] & alive) == size - 1:
            return ReductionStep(StepKind.REMOVE_UNIVERSAL, v)

    seen: Dict[int, int] = {}

    for u in iter_bits(alive):
        neighbours = rows[u] & alive

        if neighbours in seen:
            v = seen[neighbours]
            rest = alive & ~(1 << u) & ~(1 << v)

            if neighbours == rest:
                return ReductionStep(StepKind.TWIN_UNIVERSAL_DECREMENT, u, v)

            return ReductionStep(StepKind.MERGE_FALSE_TWINS, u, v)

        seen[neighbours] = u

    return None


def kernelize(graph: Graph, k: int = 0) -> Tuple[Graph, int, KernelTrace]:
    """Drop universal vertices and non-adjacent twins until neither rule applies

    Twins u, v with v universal once u is gone lower the parameter by one.
    The kernel keeps the surviving vertices in ascending original order.
    """
    alive = graph.full_mask
    steps = []

    while True:
        step = _next_step(graph.rows, alive)

        if step is None:
            break

        steps.append(step)
        alive &= ~(1 << step.removed)

    trace = KernelTrace(graph.n, steps)
    kernel, _ = graph.induced(trace.survivors())
    logger.debug("Kernelized %s to %s with parameter delta %s", graph, kernel, trace.parameter_delta)
    return kernel, k - trace.parameter_delta, trace


def lift_witness(trace: KernelTrace, sets: Iterable[Iterable[int]]) -> Witness:
    """Turn a witness of the kernel, in original ids, into one of the traced graph"""
    lifted: List[Set[int]] = [set(s) for s in sets if s]

    for step in reversed(trace.steps):
        if step.kind is StepKind.MERGE_FALSE_TWINS:
            for vertex_set in lifted:
                if step.kept in vertex_set:
                    vertex_set.add(step.removed)
        elif step.kind is StepKind.TWIN_UNIVERSAL_DECREMENT:
            lifted.insert(0, {step.kept, step.removed})

    return Witness(lifted)


def lift_result(result: SolveResult, trace: KernelTrace) -> SolveResult:
    """Map a result computed on the kernel of `trace` back to the traced graph"""
    assert not result.reduction_prefix, "Result was already lifted"
    survivors = dict(enumerate(trace.survivors()))
    witness = lift_witness(trace, result.witness.relabel(survivors))
    return SolveResult(result.width + trace.parameter_delta, witness, result.method, trace)


def _submasks(mask: int) -> List[int]:
    subs = []
    sub = mask

    while True:
        subs.append(sub)

        if sub == 0:
            break

        sub = (sub - 1) & mask

    return sorted(subs)


def _label_candidates(used: int, full: int) -> Iterator[int]:
    """Labels up to renaming of the unused elements: any part of `used` plus the lowest f fresh ones"""
    fresh_bits = list(iter_bits(full & ~used))
    fresh = 0

    for f in range(len(fresh_bits) + 1):
        if f:
            fresh |= 1 << fresh_bits[f - 1]

        for part in _submasks(used):
            if part | fresh:
                yield part | fresh


def embed_into_gk(graph: Graph, k: int) -> Optional[LabelAssignment]:
    """Backtracking search for distinct non-empty labels over {1..k} on a reduced graph

    Vertices are labelled by decreasing degree. After each choice, every
    unlabelled vertex must still be able to meet all its labelled
    non-neighbours while avoiding its labelled neighbours.
    """
    n = graph.n

    if n == 0:
        return LabelAssignment({}, k)

    if n > (1 << k) - 1:
        return None

    rows = graph.rows
    full = (1 << k) - 1
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    labels = [0] * n
    taken: Set[int] = set()

    def consistent(v: int, label: int, assigned: int) -> bool:
        if label in taken:
            return False

        for w in iter_bits(assigned):
            if rows[v] >> w & 1:
                if label & labels[w]:
                    return False
            elif not label & labels[w]:
                return False

        return True

    def forward_ok(assigned: int) -> bool:
        for x in range(n):
            if assigned >> x & 1:
                continue

            forbidden = 0

            for w in iter_bits(rows[x] & assigned):
                forbidden |= labels[w]

            for w in iter_bits(assigned & ~rows[x]):
                if not labels[w] & ~forbidden:
                    return False

        return True

    def search(depth: int, assigned: int, used: int) -> bool:
        if depth == n:
            return True

        v = order[depth]

        for label in _label_candidates(used, full):
            if not consistent(v, label, assigned):
                continue

            labels[v] = label
            taken.add(label)
            now_assigned = assigned | (1 << v)

            if forward_ok(now_assigned) and search(depth + 1, now_assigned, used | label):
                return True

            taken.discard(label)
            labels[v] = 0

        return False

    if not search(0, 0, 0):
        return None

    return LabelAssignment({v: labels[v] for v in range(n)}, k)


def _decide_kernel(kernel: Graph, trace: KernelTrace, k_remaining: int) -> Optional[Witness]:
    if k_remaining < 0:
        return None

    survivors = trace.survivors()
    non_edges = list(kernel.non_edges())

    if len(non_edges) <= k_remaining:
        kernel_sets = [{u, v} for u, v in non_edges]
    else:
        if kernel.n > 1 << k_remaining:
            logger.debug("Kernel of %s vertices exceeds 2^%s", kernel.n, k_remaining)
            return None

        assignment = embed_into_gk(kernel, k_remaining)

        if assignment is None:
            return None

        assert assignment.satisfies(kernel), f"Label search returned an invalid assignment {assignment}"
        kernel_sets = list(assignment.witness())

    return lift_witness(trace, ({survivors[v] for v in s} for s in kernel_sets))


def decide_k(graph: Graph, k: int, limits: Optional[Limits] = None) -> Optional[Witness]:
    """Witness with at most k sets, or None when complete width exceeds k"""
    limits = limits or Limits.from_env()

    if k < 0:
        return None

    kernel, k_remaining, trace = kernelize(graph, k)

    if k_remaining > limits.max_k and len(list(kernel.non_edges())) > k_remaining:
        raise LimitExceededError("Parameter k", k_remaining, limits.max_k)

    witness = _decide_kernel(kernel, trace, k_remaining)

    if witness is not None:
        assert len(witness) <= k, f"Witness of size {len(witness)} exceeds k={k}"
        assert verify_witness(graph, witness), "Lifted witness does not verify"

    return witness


def fpt_cow(graph: Graph, limits: Optional[Limits] = None) -> SolveResult:
    """Smallest k accepted by the kernel plus label search, with its witness"""
    limits = limits or Limits.from_env()
    kernel, _, trace = kernelize(graph)
    delta = trace.parameter_delta

    for k_remaining in range(limits.max_k + 1):
        witness = _decide_kernel(kernel, trace, k_remaining)

        if witness is not None:
            width = k_remaining + delta
            assert len(witness) == width, f"Witness of size {len(witness)}, expected {width}"
            logger.info("fpt_cow: width %s, kernel %s, delta %s", width, kernel, delta)
            return SolveResult(width, witness, Method.FPT, trace)

    raise UnsolvedError(
        f"Complete width of the kernel exceeds max_k={limits.max_k}",
        kernel_vertices=kernel.n,
        max_k=limits.max_k,
    )


def substitute_gk(k: int, clique_size: int, part_sizes: Optional[Mapping[int, int]] = None) -> Tuple[Graph, Witness]:
    """Blow G[k] up: the empty set becomes a clique, every other subset an independent set

    Sizes default to 1. The result has complete width at most k and the
    returned witness shows it.
    """
    prototype = gk(k)
    part_sizes = part_sizes or {}
    parts = {0: Graph.complete(clique_size)}

    for m in range(1, prototype.n):
        parts[m] = Graph.empty(part_sizes.get(m, 1))

    blocks = prototype.substitution_blocks(parts)
    graph = prototype.substitute(parts)
    sets = []

    for i in range(k):
        sets.append({v for m in range(prototype.n) if m >> i & 1 for v in blocks[m]})

    return graph, Witness(s for s in sets if s)
