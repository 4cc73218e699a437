"""Swap permutations encoded as binary strings, and the three-way analysis.

A swap exchanges two adjacent distinct symbols. A set of pairwise disjoint,
non-adjacent swaps is encoded as a binary string of length n-1 whose bit p
(1-based) marks a swap of positions (p, p+1); validity means no two adjacent
ones. Between matching words this encoding is unique and is found by one
left-to-right pass: the first mismatching position forces a swap there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    INF,
    LengthMismatch,
    NotMatching,
    PrerequisiteNotMatching,
    Word,
)

__all__ = [
    "SwapStr",
    "Matching",
    "Blocked",
    "ThreeWayOutcome",
    "swap_string",
    "apply_swaps",
    "swap_distance",
    "xor_compose",
    "three_way_match",
]


@dataclass(frozen=True)
class SwapStr:
    """A valid swap permutation: bits of length home_length-1, no "11".

    home_length is stored so length-1 words (empty bit sequence) remain
    representable.
    """

    bits: str
    home_length: int

    def __post_init__(self) -> None:
        if len(self.bits) != self.home_length - 1:
            raise LengthMismatch(
                f"{len(self.bits)} bits for home length {self.home_length}"
            )
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"non-binary swap string {self.bits!r}")
        if "11" in self.bits:
            raise ValueError(f"adjacent swaps in {self.bits!r}")

    def ones(self) -> tuple[int, ...]:
        """1-based swap positions."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b == "1")

    @property
    def popcount(self) -> int:
        return self.bits.count("1")

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True)
class Matching:
    """Three-way outcome: the outer pair matches, with this swap string."""

    h: SwapStr


@dataclass(frozen=True)
class Blocked:
    """Three-way outcome: every common match is pinned around position p.

    p is the second of the first adjacent pair of ones in the XOR (1-based,
    2 <= p <= n-1); any word matching both outer words carries forced_window
    (the middle word's symbols) at positions p-1..p+1.
    """

    p: int
    forced_window: str


ThreeWayOutcome = Matching | Blocked


def swap_string(s: Word, t: Word) -> SwapStr:
    """The unique swap permutation transforming s into t.

    Raises LengthMismatch on unequal lengths and NotMatching (carrying the
    1-based position of the first forced swap that fails) when no swap
    permutation exists.
    """
    n = len(s)
    if len(t) != n:
        raise LengthMismatch(f"|s|={n} vs |t|={len(t)}")
    bits = ["0"] * (n - 1)
    i = 0
    while i < n:
        if s[i] == t[i]:
            i += 1
            continue
        # First unmatched symbol: the swap (i, i+1) is forced.
        if i + 1 < n and s[i] == t[i + 1] and s[i + 1] == t[i]:
            # Symbols are distinct automatically: s[i+1] == t[i] != s[i].
            bits[i] = "1"
            i += 2
            continue
        raise NotMatching(i + 1)
    return SwapStr("".join(bits), n)


def apply_swaps(s: Word, h: SwapStr) -> Word:
    """Exchange every marked adjacent pair of s.

    Marked pairs may swap equal symbols; in that case h is not the swap string
    of (s, result) and callers wanting validity must check.
    """
    if h.home_length != len(s):
        raise LengthMismatch(f"swap string for length {h.home_length}, word of {len(s)}")
    out = list(s)
    for i, b in enumerate(h.bits):
        if b == "1":
            out[i], out[i + 1] = out[i + 1], out[i]
    return "".join(out)


def swap_distance(s: Word, t: Word) -> float:
    """Number of swaps between matching words, INF otherwise."""
    try:
        return swap_string(s, t).popcount
    except NotMatching:
        return INF


def xor_compose(h1: str | SwapStr, h2: str | SwapStr) -> str:
    """Position-wise XOR of two raw bit sequences.

    Deliberately returns a raw string, not a SwapStr: the interesting case of
    the three-way analysis is exactly when the result contains "11".
    """
    b1 = h1.bits if isinstance(h1, SwapStr) else h1
    b2 = h2.bits if isinstance(h2, SwapStr) else h2
    if len(b1) != len(b2):
        raise LengthMismatch(f"{len(b1)} vs {len(b2)} bits")
    return "".join("1" if x != y else "0" for x, y in zip(b1, b2))


def three_way_match(s1: Word, s2: Word, s3: Word) -> ThreeWayOutcome:
    """Analyze matching of (s1, s3) through a middle word s2.

    Requires s1~s2 and s2~s3 (PrerequisiteNotMatching otherwise). If the XOR
    of the two swap strings has no adjacent ones it IS the swap string of
    (s1, s3); otherwise (s1, s3) do not match, and every word matching both is
    forced to s2's symbols on the 3-window around the collision.
    """
    try:
        h12 = swap_string(s1, s2)
    except NotMatching as e:
        raise PrerequisiteNotMatching(f"s1 and s2 do not match ({e})") from e
    try:
        h23 = swap_string(s2, s3)
    except NotMatching as e:
        raise PrerequisiteNotMatching(f"s2 and s3 do not match ({e})") from e
    h = xor_compose(h12, h23)
    j = h.find("11")
    if j < 0:
        return Matching(SwapStr(h, len(s1)))
    # Bits j, j+1 (0-based) are the first adjacent ones; second 1-based index:
    p = j + 2
    return Blocked(p=p, forced_window=s2[p - 2 : p + 1])
