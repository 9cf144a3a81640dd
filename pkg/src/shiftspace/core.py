"""Data model for shift spaces presented by finite forbidden-block sets.

A shift space over the alphabet {0, ..., k-1} is described by a finite set
of forbidden blocks.  A block is allowed exactly when none of the forbidden
blocks occurs in it as a contiguous factor.  This module holds the value
types (blocks, forbidden sets, specs, parameters of the built-in spaced
family), text parsing for blocks and spec files, normalization of forbidden
sets, and validation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import (
    OutOfAlphabetError,
    ParameterError,
    ParseError,
    ValidationError,
)

_SPEC_HEADER = re.compile(r"^k\s*=\s*(\d+)$")


@dataclass(frozen=True, order=True)
class Block:
    """A finite word of symbols.  The empty block is a valid value."""

    symbols: tuple[int, ...] = ()

    def __post_init__(self):
        symbols = tuple(self.symbols)
        for s in symbols:
            if not isinstance(s, int) or isinstance(s, bool) or s < 0:
                raise ParameterError(f"block symbols must be non-negative integers, got {s!r}")
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def contains_factor(self, factor: "Block") -> bool:
        """Whether ``factor`` occurs in this block as a contiguous run."""
        m = len(factor.symbols)
        if m == 0:
            return True
        mine = self.symbols
        target = factor.symbols
        return any(mine[i : i + m] == target for i in range(len(mine) - m + 1))


@dataclass(frozen=True)
class ForbiddenSet:
    """A finite set of nonempty forbidden blocks."""

    blocks: frozenset[Block]

    def __init__(self, blocks: Iterable[Block] = ()):
        members = frozenset(blocks)
        if any(len(b) == 0 for b in members):
            raise ValidationError(["forbidden blocks must be nonempty"])
        object.__setattr__(self, "blocks", members)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, block: Block) -> bool:
        return block in self.blocks

    @property
    def max_length(self) -> int:
        """Length of the longest member, 0 for the empty set."""
        return max((len(b) for b in self.blocks), default=0)


@dataclass(frozen=True)
class ShiftSpaceSpec:
    """Alphabet size together with the forbidden blocks."""

    alphabet_size: int
    forbidden: ForbiddenSet = ForbiddenSet()

    def __post_init__(self):
        if not isinstance(self.alphabet_size, int) or isinstance(self.alphabet_size, bool):
            raise ParameterError("alphabet_size must be an integer")


@dataclass(frozen=True)
class TmkParams:
    """Parameters of the built-in spaced family.

    The family over {0, ..., k-1} requires at least m zeroes between
    consecutive nonzero symbols.
    """

    m: int
    k: int

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise ParameterError(f"m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 2:
            raise ParameterError(f"k must be an integer >= 2, got {self.k!r}")


def tmk_spec(params: TmkParams) -> ShiftSpaceSpec:
    """Spec of the spaced family: nonzero symbols at least m apart.

    The forbidden set is every block a 0^j b with a, b nonzero and
    0 <= j < m, which is (k-1)^2 * m blocks and already minimal.
    """
    m, k = params.m, params.k
    blocks = [
        Block((a,) + (0,) * j + (b,))
        for a in range(1, k)
        for b in range(1, k)
        for j in range(m)
    ]
    return ShiftSpaceSpec(alphabet_size=k, forbidden=ForbiddenSet(blocks))


def normalize_forbidden_set(blocks: Iterable[Block]) -> ForbiddenSet:
    """Drop every block that contains another member as a factor.

    The result defines the same shift space with a minimal, duplicate-free
    set.  Normalizing twice gives the same result as normalizing once.
    """
    members = sorted(set(blocks), key=lambda b: (len(b), b.symbols))
    kept: list[Block] = []
    for candidate in members:
        if not any(candidate.contains_factor(shorter) for shorter in kept):
            kept.append(candidate)
    return ForbiddenSet(kept)


def parse_block(text: str, alphabet_size: int) -> Block:
    """Parse block text: compact digits for k <= 10, comma-separated above.

    Raises ParseError for malformed text and OutOfAlphabetError for symbol
    values outside {0, ..., k-1}.
    """
    if not isinstance(alphabet_size, int) or alphabet_size < 1:
        raise ParameterError(f"alphabet_size must be an integer >= 1, got {alphabet_size!r}")
    text = text.strip()
    if not text:
        return Block(())
    if alphabet_size <= 10:
        if "," in text:
            raise ParseError(
                f"comma-separated blocks are only accepted for alphabets larger than 10: {text!r}"
            )
        if not text.isdigit():
            raise ParseError(f"block text must be a digit string: {text!r}")
        symbols = tuple(int(ch) for ch in text)
    else:
        tokens = [tok.strip() for tok in text.split(",")]
        if any(not tok.isdigit() for tok in tokens):
            raise ParseError(f"block text must be comma-separated decimal integers: {text!r}")
        symbols = tuple(int(tok) for tok in tokens)
    for s in symbols:
        if s >= alphabet_size:
            raise OutOfAlphabetError(
                f"symbol {s} does not fit in alphabet of size {alphabet_size}"
            )
    return Block(symbols)


def block_text(block: Block, alphabet_size: int) -> str:
    """Inverse of parse_block for blocks over the given alphabet."""
    for s in block:
        if s >= alphabet_size:
            raise OutOfAlphabetError(
                f"symbol {s} does not fit in alphabet of size {alphabet_size}"
            )
    if alphabet_size <= 10:
        return "".join(str(s) for s in block)
    return ",".join(str(s) for s in block)


def validate_spec(spec: ShiftSpaceSpec) -> ShiftSpaceSpec:
    """Return the spec unchanged, or raise ValidationError with every violation."""
    violations: list[str] = []
    if spec.alphabet_size < 1:
        violations.append(f"alphabet size must be at least 1, got {spec.alphabet_size}")
    else:
        for block in sorted(spec.forbidden, key=lambda b: (len(b), b.symbols)):
            bad = [s for s in block if s >= spec.alphabet_size]
            if bad:
                violations.append(
                    f"block {block.symbols} uses symbols {sorted(set(bad))} outside "
                    f"alphabet of size {spec.alphabet_size}"
                )
    if violations:
        raise ValidationError(violations)
    return spec


def load_spec_file(path: str | Path) -> ShiftSpaceSpec:
    """Load, validate, and normalize a spec from a text file.

    Format: a line ``k=<int>``, then one forbidden block per line in the
    syntax of parse_block.  ``#`` starts a comment, blank lines are skipped.
    """
    path = Path(path)
    alphabet_size: int | None = None
    raw: list[Block] = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        header = _SPEC_HEADER.match(content)
        if alphabet_size is None:
            if header is None:
                raise ParseError(f"{path}:{lineno}: expected a k=<int> line before any block")
            alphabet_size = int(header.group(1))
            if alphabet_size < 1:
                raise ValidationError([f"{path}:{lineno}: alphabet size must be at least 1"])
            continue
        if header is not None:
            raise ParseError(f"{path}:{lineno}: duplicate k= line")
        try:
            raw.append(parse_block(content, alphabet_size))
        except (ParseError, OutOfAlphabetError) as exc:
            raise type(exc)(f"{path}:{lineno}: {exc}") from None
    if alphabet_size is None:
        raise ParseError(f"{path}: no k=<int> line found")
    spec = ShiftSpaceSpec(alphabet_size=alphabet_size, forbidden=ForbiddenSet(raw))
    validate_spec(spec)
    return ShiftSpaceSpec(
        alphabet_size=alphabet_size,
        forbidden=normalize_forbidden_set(spec.forbidden),
    )
