"""Disentanglement: apply exactly the necessary swaps so all words match.

Scanning left to right, a dirty column either pairs benignly with its right
neighbor (2-gram set {xy, yx}: a common match may keep either order, so no
swap is necessary) or it starts a tangled interval, inside which every common
match is forced letter by letter. Each string mismatching the forced letter
must take a swap there; those swaps are necessary (common to every match) and
are the only ones applied. The result is a set of pairwise-matching words plus
per-string budgets of consumed swaps.

Infeasibility (no common match exists) is detected in layers: a symbol
multiset precheck, per-step legality checks inside intervals, and a final
pairwise-matching certification as the safety net.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance, NotMatching, Word, multiset_signature
from .swaps import swap_string, xor_compose

__all__ = ["Disentanglement", "Infeasible", "disentangle"]


@dataclass(frozen=True)
class Disentanglement:
    """Pairwise-matching words, per-string swap budgets, and where they came from."""

    strings_prime: tuple[Word, ...]
    budgets: tuple[int, ...]
    total: int
    tangled_intervals: tuple[tuple[int, int], ...]  # 1-based inclusive


@dataclass(frozen=True)
class Infeasible:
    """No word matches every input; reason names the violating column."""

    reason: str
    column: int | None = None


def disentangle(inst: Instance) -> Disentanglement | Infeasible:
    """Construct the disentanglement, or certify that no common match exists."""
    words = [list(w) for w in inst.words]
    k, n = inst.k, inst.n

    sig0 = multiset_signature(inst.words[0])
    for j in range(1, k):
        if multiset_signature(inst.words[j]) != sig0:
            return Infeasible(
                f"word {j + 1} has a different symbol multiset than word 1"
            )

    budgets = [0] * k
    intervals: list[tuple[int, int]] = []

    i = 0  # 0-based column under scan
    while i < n:
        column = {w[i] for w in words}
        if len(column) == 1:
            i += 1
            continue

        # Dirty column: benign if the 2-gram set is exactly {xy, yx}.
        if i + 1 < n:
            grams = {(w[i], w[i + 1]) for w in words}
            if len(grams) == 2:
                g1, g2 = sorted(grams)
                if g1 == (g2[1], g2[0]) and g1[0] != g1[1]:
                    i += 2
                    continue

        if i + 1 >= n:
            return Infeasible(
                f"words disagree at the last column {i + 1} with no room to swap",
                column=i + 1,
            )

        # Tangled interval starting at i0 = i. Seed: strings that cannot swap
        # (i0, i0+1) pin the match's symbol there.
        i0 = i
        cannot_swap = [
            j
            for j in range(k)
            if words[j][i0 + 1] not in column or words[j][i0] == words[j][i0 + 1]
        ]
        if not cannot_swap:
            return Infeasible(
                f"column {i0 + 1}: every word could swap, no symbol is pinned",
                column=i0 + 1,
            )
        pinned = {words[j][i0] for j in cannot_swap}
        if len(pinned) > 1:
            return Infeasible(
                f"column {i0 + 1}: words that cannot swap disagree "
                f"({sorted(pinned)})",
                column=i0 + 1,
            )
        (forced,) = pinned

        # Strings mismatching the forced symbol must swap (i0, i0+1); the swap
        # must bring the forced symbol in, and all swappers must agree on what
        # they push to i0+1 (that symbol becomes forced next).
        movers = [j for j in range(k) if words[j][i0] != forced]
        # movers is nonempty: a clean column would not have been dirty.
        revealed = {words[j][i0] for j in movers}
        if any(words[j][i0 + 1] != forced for j in movers):
            bad = next(j for j in movers if words[j][i0 + 1] != forced)
            return Infeasible(
                f"column {i0 + 1}: word {bad + 1} cannot bring the forced "
                f"symbol {forced!r} in by a swap",
                column=i0 + 1,
            )
        if len(revealed) > 1:
            return Infeasible(
                f"column {i0 + 1}: swapping words disagree on the symbol "
                f"pushed to column {i0 + 2} ({sorted(revealed)})",
                column=i0 + 1,
            )
        for j in movers:
            words[j][i0], words[j][i0 + 1] = words[j][i0 + 1], words[j][i0]
            budgets[j] += 1
        (forced,) = revealed  # now the forced symbol at column i0+1

        # Frontier propagation: column p carries a forced symbol; everyone
        # mismatching it swaps (p, p+1) and the swap reveals column p+1.
        p = i0 + 1
        while True:
            movers = [j for j in range(k) if words[j][p] != forced]
            if not movers:
                intervals.append((i0 + 1, p + 1))  # 1-based inclusive
                break
            if p + 1 >= n:
                return Infeasible(
                    f"column {p + 1}: forced symbol {forced!r} missing in word "
                    f"{movers[0] + 1} with no room to swap",
                    column=p + 1,
                )
            if any(words[j][p + 1] != forced for j in movers):
                bad = next(j for j in movers if words[j][p + 1] != forced)
                return Infeasible(
                    f"column {p + 1}: word {bad + 1} cannot bring the forced "
                    f"symbol {forced!r} in by a swap",
                    column=p + 1,
                )
            revealed = {words[j][p] for j in movers}
            if len(revealed) > 1:
                return Infeasible(
                    f"column {p + 1}: swapping words disagree on the symbol "
                    f"pushed to column {p + 2} ({sorted(revealed)})",
                    column=p + 1,
                )
            for j in movers:
                words[j][p], words[j][p + 1] = words[j][p + 1], words[j][p]
                budgets[j] += 1
            (forced,) = revealed
            p += 1
        i = p + 1

    strings_prime = tuple("".join(w) for w in words)

    # Safety net: all results must match the first one, and all pairwise XORs
    # of their swap strings must stay free of adjacent ones (which certifies
    # pairwise matching through the three-way analysis).
    try:
        hs = [swap_string(strings_prime[0], w) for w in strings_prime]
    except NotMatching:
        return Infeasible("certification failed: results do not pairwise match")
    for a in range(k):
        for b in range(a + 1, k):
            if "11" in xor_compose(hs[a], hs[b]):
                return Infeasible(
                    "certification failed: results do not pairwise match"
                )

    return Disentanglement(
        strings_prime=strings_prime,
        budgets=tuple(budgets),
        total=sum(budgets),
        tangled_intervals=tuple(intervals),
    )
