"""Bounded search tree for radius consensus under the swap+substitution distance.

The candidate starts as the first input word and is repaired step by step: at
each node the first word farther than d is located, and the candidate is
rewritten at or next to one of their disagreements, copying symbols from that
word. Each rewrite consumes one unit of a 2d depth budget (the root counts as
depth 0). A node is trimmed when some word disagrees with the candidate in at
least 4d-depth+1 positions, since no completion within the remaining budget
can rescue it. Any returned witness is re-certified from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CertificationFailure,
    ConsensusAnswer,
    Instance,
    SearchStats,
    Timer,
    Word,
)
from .hamming import hamming_distance
from .sh_metric import sh_cost

__all__ = ["BranchMove", "radius_consensus_sh"]


@dataclass(frozen=True)
class BranchMove:
    """One child step: rewrite a window of the candidate from a violating word.

    ``kind`` is "substitute" (a one-symbol window) or "swap-in" (a two-symbol
    window receiving the word's symbols in exchanged order). ``position`` is
    the 1-based left edge of the window, ``symbols`` the replacement text, and
    ``source_string_index`` the 1-based index of the word copied from.
    """

    kind: str
    position: int
    symbols: str
    source_string_index: int


def _apply(cand: Word, move: BranchMove) -> Word:
    p = move.position - 1
    return cand[:p] + move.symbols + cand[p + len(move.symbols) :]


def _moves(cand: Word, w: Word, idx: int, d: int) -> list[BranchMove]:
    """Branch moves for the violating word ``w`` (1-based index ``idx``)."""
    n = len(cand)
    mism = [p for p in range(n) if cand[p] != w[p]]
    ham = len(mism)
    moves: list[BranchMove] = []
    if ham >= 2 * d + 1:
        # Any witness agrees with w on all but at most 2d of these, so some
        # of the first 2d+1 disagreements must be resolved by copying.
        for p in mism[: 2 * d + 1]:
            moves.append(BranchMove("substitute", p + 1, w[p], idx))
        return moves
    assert d + 1 <= ham <= 2 * d
    for p in mism:
        moves.append(BranchMove("substitute", p + 1, w[p], idx))
    for p in mism:
        if p + 1 < n:
            moves.append(BranchMove("swap-in", p + 1, w[p + 1] + w[p], idx))
        if p - 1 >= 0:
            moves.append(BranchMove("swap-in", p, w[p] + w[p - 1], idx))
    return moves


def _search(
    inst: Instance, cand: Word, d: int, depth: int, stats: SearchStats
) -> Word | None:
    assert depth <= 2 * d
    stats.nodes_expanded += 1
    for w in inst.words:
        if hamming_distance(cand, w) >= 4 * d - depth + 1:
            return None
    violating = None
    for idx, w in enumerate(inst.words):
        if sh_cost(cand, w) > d:
            violating = idx
            break
    if violating is None:
        return cand
    if depth == 2 * d:
        return None
    for move in _moves(cand, inst.words[violating], violating + 1, d):
        child = _apply(cand, move)
        if child == cand:
            continue
        found = _search(inst, child, d, depth + 1, stats)
        if found is not None:
            return found
    return None


def radius_consensus_sh(
    inst: Instance, d: int, all_roots: bool = False
) -> ConsensusAnswer:
    """Find a word within swap+substitution distance d of every input.

    The search is rooted at the first input word; ``all_roots`` retries from
    every input in order (useful for robustness experiments, never needed for
    correctness). The first witness found in the fixed branch order is
    returned, with all distances recomputed from scratch.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    stats = SearchStats()
    witness: Word | None = None
    with Timer(stats):
        roots = inst.words if all_roots else inst.words[:1]
        for root in roots:
            witness = _search(inst, root, d, 0, stats)
            if witness is not None:
                break
    if witness is None:
        return ConsensusAnswer.none(
            f"no word within swap+substitution radius {d} of all inputs", stats
        )
    dists = tuple(float(sh_cost(w, witness)) for w in inst.words)
    if max(dists) > d:
        raise CertificationFailure(
            f"witness exceeds the radius: {int(max(dists))} > {d}"
        )
    return ConsensusAnswer.found(witness, dists, stats)
