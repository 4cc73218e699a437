"""The swap+Hamming distance: cheapest mix of disjoint swaps and substitutions.

The distance between s and t is the minimum, over all valid swap permutations
h applicable to s, of |h| plus the Hamming distance of the swapped s to t.
One greedy left-to-right pass computes it exactly: at each mismatch whose
2-window is the reversal of the target's window, take the swap unless one was
just taken at the previous position; every remaining mismatch is a
substitution. Ties between equal-cost decompositions are resolved canonically
as the greedy witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LengthMismatch, Word

__all__ = ["SHWitness", "sh_distance", "sh_cost", "greedy_swap_positions"]


@dataclass(frozen=True)
class SHWitness:
    """An optimal decomposition: swap positions and substitution positions.

    Both tuples are ascending and 1-based; swap positions are pairwise
    non-adjacent, and no substitution position is touched by a listed swap.
    Applying the swaps to the source and then substituting the target's
    symbols at the substitution positions yields the target.
    """

    swaps: tuple[int, ...]
    substitutions: tuple[int, ...]

    @property
    def cost(self) -> int:
        return len(self.swaps) + len(self.substitutions)


def sh_distance(s: Word, t: Word) -> tuple[int, SHWitness]:
    """Swap+Hamming distance with the canonical greedy witness."""
    n = len(s)
    if len(t) != n:
        raise LengthMismatch(f"|s|={n} vs |t|={len(t)}")
    swaps: list[int] = []
    subs: list[int] = []
    i = 0
    while i < n:
        if s[i] == t[i]:
            i += 1
            continue
        if i + 1 < n and s[i] == t[i + 1] and s[i + 1] == t[i]:
            # Reversed 2-window; symbols distinct since s[i+1] == t[i] != s[i].
            # Skipping 2 positions enforces "no swap right after a swap".
            swaps.append(i + 1)
            i += 2
            continue
        subs.append(i + 1)
        i += 1
    w = SHWitness(tuple(swaps), tuple(subs))
    return w.cost, w


def sh_cost(s: Word, t: Word) -> int:
    """Distance only (no witness)."""
    return sh_distance(s, t)[0]


def greedy_swap_positions(s: Word, t: Word) -> tuple[int, ...]:
    """1-based positions where the greedy trace records a swap."""
    return sh_distance(s, t)[1].swaps
