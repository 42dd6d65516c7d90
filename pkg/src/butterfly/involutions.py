"""Two parity-reversing involutions on free paths and their signed sums.

The parity of a free path is the parity of its flaw-block count. Reflecting
the final irreducible segment of a free Dyck path flips exactly one segment
sign, so it reverses parity; the same move on free Schroder paths skips any
trailing axis-level H steps. The signed block-count sums these involutions
prove telescope to 0 (Dyck) and to 1 (Schroder, the all-H path being the
lone survivor).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DomainError, ExactnessError
from .lattice_paths import (
    AXIS_HORIZ,
    DYCK,
    NEGATIVE,
    POSITIVE,
    LatticePath,
    Segment,
    SegmentDecomposition,
    decompose,
    reflect_steps,
)
from .series_counting import a_nk


def _with_reflected_segment(decomposition: SegmentDecomposition, index: int) -> LatticePath:
    segments = list(decomposition.segments)
    old = segments[index]
    segments[index] = Segment(
        NEGATIVE if old.kind == POSITIVE else POSITIVE,
        reflect_steps(old.steps),
    )
    return SegmentDecomposition(tuple(segments), decomposition.alphabet).recompose()


def dyck_flip(path: LatticePath) -> LatticePath:
    """Reflect the final irreducible segment of a nonempty free Dyck path.

    An involution without fixed points that flips flaw-block parity.
    """
    if path.alphabet != DYCK:
        raise DomainError("dyck_flip works on the Dyck alphabet")
    decomposition = decompose(path)  # also enforces freeness
    if not decomposition.segments:
        raise DomainError("dyck_flip needs semilength at least 1")
    return _with_reflected_segment(decomposition, len(decomposition.segments) - 1)


def schroder_flip(path: LatticePath) -> LatticePath:
    """Reflect the last non-axis segment of a free Schroder path.

    Trailing axis-level H steps stay put. Defined on paths with at least
    one U step; the all-H path has no reflectable segment and is the unique
    point the involution leaves unmatched for each semilength.
    """
    decomposition = decompose(path)
    for index in range(len(decomposition.segments) - 1, -1, -1):
        if decomposition.segments[index].kind != AXIS_HORIZ:
            return _with_reflected_segment(decomposition, index)
    raise DomainError("schroder_flip needs at least one up step")


def signed_block_sum_dyck(n: int) -> int:
    """Evaluate sum_i (-1)^i ((2i+1)/(2n+1)) binom(2n+1, n-i); always 0.

    The unsigned term is the number of free Dyck paths with i flaw blocks,
    so the involution forces the alternating sum to vanish.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    total = Fraction(0)
    for i in range(n + 1):
        term = Fraction((2 * i + 1) * comb(2 * n + 1, n - i), 2 * n + 1)
        if term.denominator != 1:
            raise ExactnessError(f"block count term i={i} is not integral: {term}")
        total += -term if i % 2 else term
    if total.denominator != 1:
        raise ExactnessError(f"signed sum failed to clear: {total}")
    return int(total)


def signed_block_sum_schroder(n: int) -> int:
    """Evaluate sum_i (-1)^i a(n-i, 2i+1); always 1 (the all-H path)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    total = 0
    for i in range(n + 1):
        term = a_nk(n - i, 2 * i + 1)
        total += -term if i % 2 else term
    return total
