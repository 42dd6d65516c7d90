"""Dyck and Schroder step sequences with their flaw statistics.

Steps: U rises by 1 over x-extent 1, D falls by 1 over x-extent 1, and the
Schroder horizontal step H keeps height over x-extent 2. A path is *free*
when it ends back on the x-axis, with no constraint on dipping below it.
Semilength is #U + #H, which is half the x-extent of any free path.

Every free path splits uniquely at its axis touchpoints into irreducible
segments: elevated pieces (strictly above the axis between their endpoints),
negative elevated pieces (strictly below; these are the flaw blocks), and
lone H steps sitting on the axis. A step counts as below the axis exactly
when it lies in a negative segment, which settles every edge case for steps
that merely touch the axis; in particular an axis-level H is never a flaw.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError, ParseError
from .limits import ensure_within

UP = "U"
DOWN = "D"
HORIZ = "H"

RISE = {UP: 1, DOWN: -1, HORIZ: 0}

DYCK = "dyck"
SCHRODER = "schroder"

# classification tags
FREE = "free"
ELEVATED = "elevated"
NEGATIVE_ELEVATED = "negative_elevated"


@dataclass(frozen=True)
class LatticePath:
    """A step sequence over {U, D} (dyck alphabet) or {U, D, H} (schroder)."""

    steps: str
    alphabet: str = DYCK

    def __post_init__(self):
        if self.alphabet not in (DYCK, SCHRODER):
            raise DomainError(f"unknown alphabet {self.alphabet!r}")
        allowed = "UD" if self.alphabet == DYCK else "UDH"
        for offset, ch in enumerate(self.steps):
            if ch not in allowed:
                raise ParseError(f"step {ch!r} not in {self.alphabet} alphabet", offset)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def semilength(self) -> int:
        return self.steps.count(UP) + self.steps.count(HORIZ)

    def heights(self) -> list[int]:
        """Height after each step (the profile; exportable for plotting)."""
        out = []
        h = 0
        for ch in self.steps:
            h += RISE[ch]
            out.append(h)
        return out

    @property
    def final_height(self) -> int:
        return sum(RISE[ch] for ch in self.steps)

    @property
    def is_free(self) -> bool:
        return self.final_height == 0

    @property
    def is_nonnegative(self) -> bool:
        return all(h >= 0 for h in self.heights())

    def to_json_obj(self) -> dict:
        return {"alphabet": self.alphabet, "steps": self.steps}


def from_json_obj(obj: dict) -> LatticePath:
    try:
        return LatticePath(obj["steps"], obj["alphabet"])
    except (KeyError, TypeError):
        raise ParseError("path JSON needs 'alphabet' and 'steps' fields") from None


def parse_path(text: str, alphabet: str | None = None) -> LatticePath:
    """Parse a step string; the alphabet is inferred as schroder iff H occurs."""
    if alphabet is None:
        alphabet = SCHRODER if HORIZ in text else DYCK
    return LatticePath(text, alphabet)


def classify(path: LatticePath) -> frozenset[str]:
    """Tags among {free, dyck, schroder, elevated, negative_elevated}.

    All tags require freeness; dyck/schroder additionally require the path
    never to dip below the axis (the tag follows the path's alphabet).
    Elevated means strictly above the axis between the endpoints, so the
    single step H is not elevated: it runs along the axis.
    """
    tags: set[str] = set()
    if not path.is_free:
        return frozenset(tags)
    tags.add(FREE)
    profile = path.heights()
    if all(h >= 0 for h in profile):
        tags.add(path.alphabet)
    if path.steps:
        interior = profile[:-1]
        if path.steps[0] == UP and path.steps[-1] == DOWN and all(h >= 1 for h in interior):
            tags.add(ELEVATED)
        if path.steps[0] == DOWN and path.steps[-1] == UP and all(h <= -1 for h in interior):
            tags.add(NEGATIVE_ELEVATED)
    return frozenset(tags)


POSITIVE = "positive"
NEGATIVE = "negative"
AXIS_HORIZ = "axis_horiz"


class Segment(NamedTuple):
    kind: str  # positive | negative | axis_horiz
    steps: str


@dataclass(frozen=True)
class SegmentDecomposition:
    """The unique irreducible-segment decomposition of a free path.

    Concatenating the segments recovers the path. Negative segments are the
    flaw blocks; flaws are the U steps (plus H steps, for the schroder
    alphabet) inside them.
    """

    segments: tuple[Segment, ...]
    alphabet: str

    def recompose(self) -> LatticePath:
        return LatticePath("".join(seg.steps for seg in self.segments), self.alphabet)

    @property
    def flaw_blocks(self) -> int:
        return sum(1 for seg in self.segments if seg.kind == NEGATIVE)

    @property
    def flaws(self) -> int:
        return sum(
            seg.steps.count(UP) + seg.steps.count(HORIZ)
            for seg in self.segments
            if seg.kind == NEGATIVE
        )


def decompose(path: LatticePath) -> SegmentDecomposition:
    """Split a free path at its returns to the axis."""
    if not path.is_free:
        raise DomainError("only free paths decompose into irreducible segments")
    segments: list[Segment] = []
    buffer: list[str] = []
    height = 0
    for ch in path.steps:
        if ch == HORIZ and height == 0:
            # buffer is always empty here: pieces close the moment height hits 0
            segments.append(Segment(AXIS_HORIZ, ch))
            continue
        buffer.append(ch)
        height += RISE[ch]
        if height == 0:
            kind = POSITIVE if buffer[0] == UP else NEGATIVE
            segments.append(Segment(kind, "".join(buffer)))
            buffer.clear()
    return SegmentDecomposition(tuple(segments), path.alphabet)


def flaws(path: LatticePath) -> int:
    """Number of U steps (and H steps, for schroder) below the axis."""
    return decompose(path).flaws


def flaw_blocks(path: LatticePath) -> int:
    """Number of maximal below-axis (negative elevated) segments."""
    return decompose(path).flaw_blocks


def reflect(path: LatticePath) -> LatticePath:
    """Mirror across the x-axis: swap U and D, keep H. An involution."""
    return LatticePath(reflect_steps(path.steps), path.alphabet)


def reflect_steps(steps: str) -> str:
    return steps.translate(str.maketrans({UP: DOWN, DOWN: UP}))


FREE_CONSTRAINT = "free"
NONNEG_CONSTRAINT = "nonneg"


def enumerate_paths(alphabet: str, n: int, constraint: str) -> Iterator[LatticePath]:
    """All paths of semilength ``n``, lexicographic with U < D < H.

    ``constraint`` is "free" (end on the axis) or "nonneg" (additionally
    never dip below it).
    """
    if alphabet not in (DYCK, SCHRODER):
        raise DomainError(f"unknown alphabet {alphabet!r}")
    if constraint not in (FREE_CONSTRAINT, NONNEG_CONSTRAINT):
        raise DomainError(f"unknown constraint {constraint!r}")
    if n < 0:
        raise DomainError("semilength must be non-negative")
    ensure_within("paths", n)
    nonneg = constraint == NONNEG_CONSTRAINT
    horiz_ok = alphabet == SCHRODER
    word: list[str] = []

    def extend(budget: int, height: int) -> Iterator[LatticePath]:
        # budget counts the U and H steps still to be placed
        if budget == 0 and height == 0:
            yield LatticePath("".join(word), alphabet)
        if budget > 0:
            word.append(UP)
            yield from extend(budget - 1, height + 1)
            word.pop()
        new_h = height - 1
        if (new_h >= 0 if nonneg else budget >= -new_h):
            word.append(DOWN)
            yield from extend(budget, new_h)
            word.pop()
        if horiz_ok and budget > 0 and (height >= 0 if nonneg else budget - 1 >= -height):
            word.append(HORIZ)
            yield from extend(budget - 1, height)
            word.pop()

    yield from extend(n, 0)
