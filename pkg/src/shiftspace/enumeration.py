"""Counting and enumerating allowed blocks.

Enumeration is a depth-first search in lexicographic order that prunes a
prefix as soon as a forbidden block appears at its end.  Counting is a
dynamic program whose state is the window of the last L-1 symbols, where L
is the length of the longest forbidden block, so counts are exact integers
for lengths far beyond what enumeration could materialize.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .core import Block, ShiftSpaceSpec, TmkParams, tmk_spec, validate_spec
from .errors import OutOfAlphabetError, ParameterError, ResourceLimitError

DEFAULT_MAX_CANDIDATES = 2**24


@dataclass(frozen=True)
class CountSequence:
    """Counts of allowed blocks for consecutive lengths starting at n_min."""

    counts: tuple[int, ...]
    n_min: int = 1

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.counts) - 1

    def value_at(self, n: int) -> int:
        if not self.n_min <= n <= self.n_max:
            raise ParameterError(
                f"length {n} outside the computed range {self.n_min}..{self.n_max}"
            )
        return self.counts[n - self.n_min]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


def _require_length(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParameterError(f"block length must be an integer >= 0, got {n!r}")


def _suffix_table(spec: ShiftSpaceSpec) -> dict[int, set[tuple[int, ...]]]:
    table: dict[int, set[tuple[int, ...]]] = {}
    for f in spec.forbidden:
        table.setdefault(len(f), set()).add(f.symbols)
    return table


def _suffix_clear(prefix, table) -> bool:
    """Whether no forbidden block ends at the last symbol of prefix."""
    t = len(prefix)
    for length, members in table.items():
        if length <= t and tuple(prefix[t - length :]) in members:
            return False
    return True


def is_allowed(spec: ShiftSpaceSpec, block: Block) -> bool:
    """Whether the block avoids every forbidden block as a factor."""
    validate_spec(spec)
    for s in block:
        if s >= spec.alphabet_size:
            raise OutOfAlphabetError(
                f"symbol {s} does not fit in alphabet of size {spec.alphabet_size}"
            )
    return not any(block.contains_factor(f) for f in spec.forbidden)


def enumerate_blocks(
    spec: ShiftSpaceSpec, n: int, *, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> list[Block]:
    """All allowed blocks of length n in lexicographic order.

    Raises ResourceLimitError when the candidate space k^n exceeds
    max_candidates; counts stay available through count_blocks in that
    regime.
    """
    validate_spec(spec)
    _require_length(n)
    k = spec.alphabet_size
    if k**n > max_candidates:
        raise ResourceLimitError(
            f"enumerating {k}^{n} candidate blocks exceeds the cap of {max_candidates}; "
            "use count_blocks for counts at this length"
        )
    if n == 0:
        return [Block(())]
    table = _suffix_table(spec)
    out: list[Block] = []
    prefix: list[int] = []
    pending: list[int] = [0]
    while pending:
        s = pending[-1]
        if s == k:
            pending.pop()
            if prefix:
                prefix.pop()
            continue
        pending[-1] += 1
        prefix.append(s)
        if _suffix_clear(prefix, table):
            if len(prefix) == n:
                out.append(Block(tuple(prefix)))
                prefix.pop()
            else:
                pending.append(0)
        else:
            prefix.pop()
    return out


def enumerate_blocks_constructive(
    params: TmkParams, n: int, *, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> list[Block]:
    """Allowed blocks of the spaced family in constructive order.

    Lengths up to m+1 are lexicographic.  A longer length n lists the
    length n-1 blocks with 0 appended, then, for each nonzero symbol a in
    increasing order, the length n-m-1 blocks with 0^m a appended.  The
    result is the same set as enumerate_blocks(tmk_spec(params), n), in the
    order in which the recurrence builds it.
    """
    _require_length(n)
    spec = tmk_spec(params)
    if count_blocks(spec, n) > max_candidates:
        raise ResourceLimitError(
            f"materializing {count_blocks(spec, n)} blocks exceeds the cap of {max_candidates}"
        )
    m, k = params.m, params.k
    seed_top = min(n, m + 1)
    orders: list[list[tuple[int, ...]]] = [
        [b.symbols for b in enumerate_blocks(spec, j, max_candidates=max_candidates)]
        for j in range(seed_top + 1)
    ]
    zero_tail = (0,) * m
    for j in range(seed_top + 1, n + 1):
        step = [t + (0,) for t in orders[j - 1]]
        for a in range(1, k):
            step.extend(t + zero_tail + (a,) for t in orders[j - m - 1])
        orders.append(step)
    return [Block(t) for t in orders[n]]


def _count_iter(spec: ShiftSpaceSpec) -> Iterator[int]:
    """Yields the number of allowed blocks of length 0, 1, 2, ..."""
    k = spec.alphabet_size
    table = _suffix_table(spec)
    window = max(0, spec.forbidden.max_length - 1)
    states: dict[tuple[int, ...], int] = {(): 1}
    yield 1
    while True:
        nxt: dict[tuple[int, ...], int] = {}
        for state, ways in states.items():
            for s in range(k):
                grown = state + (s,)
                if not _suffix_clear(grown, table):
                    continue
                key = grown[-window:] if window else ()
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
        yield sum(states.values())


def count_blocks(spec: ShiftSpaceSpec, n: int) -> int:
    """Exact number of allowed blocks of length n."""
    validate_spec(spec)
    _require_length(n)
    return next(islice(_count_iter(spec), n, None))


def count_sequence(spec: ShiftSpaceSpec, n_max: int) -> CountSequence:
    """Exact counts for every length 1..n_max."""
    validate_spec(spec)
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ParameterError(f"n_max must be an integer >= 1, got {n_max!r}")
    counts = tuple(islice(_count_iter(spec), 1, n_max + 1))
    return CountSequence(counts=counts, n_min=1)
