"""Path counting and entropy through the block automaton.

States are the allowed blocks of length L-1, where L is at least 2 and at
least the longest forbidden block; an edge labeled s joins u to v when u
extended by s is allowed and v is that extension with the first symbol
dropped.  Allowed blocks of length n >= L-1 correspond one to one to paths
of length n-L+1, so counts come from iterating the adjacency matrix over
the integers.  Entropy comes from the dominant eigenvalue of the trimmed
automaton, computed by power iteration with a Collatz-Wielandt enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Block, ShiftSpaceSpec, validate_spec
from .enumeration import _require_length, _suffix_clear, _suffix_table, count_blocks, enumerate_blocks
from .errors import (
    ConvergenceError,
    EmptyShiftSpaceError,
    ParameterError,
    ResourceLimitError,
)
from .spectral import EntropyReport, _log, _require_tol

DEFAULT_MAX_STATES = 2**20
DEFAULT_MAX_ITERATIONS = 10**6


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Integer edge-count matrix of an automaton, indexed like its states."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class TransferAutomaton:
    """The block automaton of a spec.

    states are the allowed (window)-blocks in lexicographic order; edges
    are (source index, target index, symbol) triples.
    """

    spec: ShiftSpaceSpec
    window: int
    states: tuple[Block, ...]
    edges: tuple[tuple[int, int, int], ...]
    trimmed: bool = False

    @property
    def num_states(self) -> int:
        return len(self.states)

    def out_lists(self) -> list[list[int]]:
        """Target state indices per source state."""
        out: list[list[int]] = [[] for _ in self.states]
        for source, target, _symbol in self.edges:
            out[source].append(target)
        return out

    def adjacency_matrix(self) -> AdjacencyMatrix:
        n = self.num_states
        rows = [[0] * n for _ in range(n)]
        for source, target, _symbol in self.edges:
            rows[source][target] += 1
        return AdjacencyMatrix(rows=tuple(tuple(row) for row in rows))


def build_automaton(
    spec: ShiftSpaceSpec, *, max_states: int = DEFAULT_MAX_STATES
) -> TransferAutomaton:
    """Block automaton over windows of length max(2, longest forbidden) - 1.

    Raises ResourceLimitError when the window alphabet power k^(L-1)
    exceeds max_states.
    """
    validate_spec(spec)
    k = spec.alphabet_size
    window = max(2, spec.forbidden.max_length) - 1
    if k**window > max_states:
        raise ResourceLimitError(
            f"the automaton would need up to {k}^{window} states, over the cap of {max_states}"
        )
    states = tuple(enumerate_blocks(spec, window))
    index = {state.symbols: i for i, state in enumerate(states)}
    table = _suffix_table(spec)
    edges: list[tuple[int, int, int]] = []
    for i, state in enumerate(states):
        for s in range(k):
            grown = state.symbols + (s,)
            if _suffix_clear(grown, table):
                edges.append((i, index[grown[1:]], s))
    return TransferAutomaton(
        spec=spec, window=window, states=states, edges=tuple(edges), trimmed=False
    )


def trim(automaton: TransferAutomaton) -> TransferAutomaton:
    """Drop states without outgoing or incoming edges until none remain.

    The surviving automaton carries exactly the bi-infinite sequences, so
    it is the right carrier for entropy; finite-block counts must use the
    untrimmed automaton.
    """
    alive = set(range(automaton.num_states))
    while True:
        out_degree = {u: 0 for u in alive}
        in_degree = {u: 0 for u in alive}
        for source, target, _symbol in automaton.edges:
            if source in alive and target in alive:
                out_degree[source] += 1
                in_degree[target] += 1
        dead = {u for u in alive if out_degree[u] == 0 or in_degree[u] == 0}
        if not dead:
            break
        alive -= dead
    keep = sorted(alive)
    remap = {old: new for new, old in enumerate(keep)}
    states = tuple(automaton.states[old] for old in keep)
    edges = tuple(
        (remap[source], remap[target], symbol)
        for source, target, symbol in automaton.edges
        if source in alive and target in alive
    )
    return TransferAutomaton(
        spec=automaton.spec,
        window=automaton.window,
        states=states,
        edges=edges,
        trimmed=True,
    )


def count_via_matrix(automaton: TransferAutomaton, n: int) -> int:
    """Exact count of allowed blocks of length n via path counting.

    Lengths below the window fall back to the dynamic program; the
    automaton must be untrimmed, because trimming drops finite blocks that
    do not extend forever.
    """
    _require_length(n)
    if automaton.trimmed:
        raise ParameterError("block counting needs the untrimmed automaton")
    if n < automaton.window:
        return count_blocks(automaton.spec, n)
    weights = [1] * automaton.num_states
    out = automaton.out_lists()
    for _ in range(n - automaton.window):
        weights = [sum(weights[target] for target in targets) for targets in out]
    return sum(weights)


def _power_iteration(
    matrix: AdjacencyMatrix, tol: float, max_iterations: int
) -> tuple[float, float, int]:
    """Collatz-Wielandt enclosure of the dominant eigenvalue of A + I.

    Returns (eigenvalue of A, half-width of the final enclosure,
    iterations).  The shift by I keeps the iteration positive and removes
    periodicity, and the enclosure brackets the dominant eigenvalue of a
    nonnegative matrix at every step.
    """
    size = matrix.size
    vector = [1.0] * size
    lo, hi = 0.0, float("inf")
    for iteration in range(1, max_iterations + 1):
        image = [
            vector[i] + sum(weight * vector[j] for j, weight in enumerate(row) if weight)
            for i, row in enumerate(matrix.rows)
        ]
        ratios = [image[i] / vector[i] for i in range(size)]
        lo, hi = min(ratios), max(ratios)
        if hi - lo < tol:
            return 0.5 * (lo + hi) - 1.0, 0.5 * (hi - lo), iteration
        top = max(image)
        vector = [value / top for value in image]
    raise ConvergenceError(
        f"power iteration did not close the enclosure below tol={tol} "
        f"within {max_iterations} iterations",
        last_estimate=0.5 * (lo + hi) - 1.0,
        residual=0.5 * (hi - lo),
        iterations=max_iterations,
    )


def dominant_eigenvalue(
    matrix: AdjacencyMatrix, tol: float = 1e-9, *, max_iterations: int = DEFAULT_MAX_ITERATIONS
) -> float:
    """Dominant eigenvalue of a nonnegative integer matrix."""
    _require_tol(tol)
    if matrix.size == 0:
        raise EmptyShiftSpaceError("the automaton has no states; the shift space is empty")
    value, _residual, _iterations = _power_iteration(matrix, tol, max_iterations)
    return value


def entropy_numeric(
    spec: ShiftSpaceSpec,
    tol: float = 1e-9,
    log_base: str = "e",
    *,
    max_states: int = DEFAULT_MAX_STATES,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> EntropyReport:
    """Entropy of any finite-type spec from its trimmed automaton."""
    _require_tol(tol)
    automaton = trim(build_automaton(spec, max_states=max_states))
    if automaton.num_states == 0:
        raise EmptyShiftSpaceError(
            "every state dies under trimming; the shift space is empty and entropy is undefined"
        )
    value, residual, _iterations = _power_iteration(
        automaton.adjacency_matrix(), tol, max_iterations
    )
    return EntropyReport(
        lambda0=value,
        entropy=_log(value, log_base),
        log_base=log_base,
        method="transfer-matrix",
        residual=residual,
    )


def edge_list_text(automaton: TransferAutomaton) -> str:
    """One 'source target symbol' line per edge, sorted, trailing newline."""
    lines = [
        f"{source} {target} {symbol}"
        for source, target, symbol in sorted(automaton.edges, key=lambda e: (e[0], e[2], e[1]))
    ]
    return "\n".join(lines) + "\n" if lines else ""
