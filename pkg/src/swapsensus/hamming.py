"""Hamming-distance consensus: column majority, budgeted branching, and padding.

The budgeted ("mixed") variants give each input word a consumed budget x_s, so
its effective radius slack is d - x_s; plain consensus is the all-zero-budget
case. The radius solver is the classic bounded search tree; the radius+sum
solver is a complete depth-first search over column-restricted words with
admissible pruning. pad_mixed reduces a budgeted query to a plain one by
appending per-string binary pads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BudgetedInstance,
    ConsensusAnswer,
    Instance,
    LengthMismatch,
    ReservedSymbolPresent,
    SearchStats,
    Timer,
    Word,
)

__all__ = [
    "MixedRadiusQuery",
    "MixedRadiusSumQuery",
    "hamming_distance",
    "sum_consensus_ham",
    "radius_consensus_ham_mixed",
    "rs_consensus_ham_mixed",
    "pad_mixed",
]

#: Symbols reserved by the pad construction.
PAD_SYMBOLS = ("0", "1")


@dataclass(frozen=True)
class MixedRadiusQuery:
    """Radius consensus where word s_i must end up within d - x_i."""

    budgeted: BudgetedInstance
    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("radius bound must be non-negative")
        if any(x > self.d for x in self.budgeted.budgets):
            raise ValueError("a budget exceeds the radius bound")


@dataclass(frozen=True)
class MixedRadiusSumQuery:
    """Radius+sum consensus with per-string budgets x_i.

    Constraints on a witness t: hamming(s_i, t) <= d - x_i for every i, and
    sum_i hamming(s_i, t) <= D - sum_i x_i.
    """

    budgeted: BudgetedInstance
    d: int
    D: int

    def __post_init__(self) -> None:
        if self.d < 0 or self.D < 0:
            raise ValueError("bounds must be non-negative")
        if any(x > self.d for x in self.budgeted.budgets):
            raise ValueError("a budget exceeds the radius bound")
        if sum(self.budgeted.budgets) > self.D:
            raise ValueError("budgets already exceed the sum bound")


def hamming_distance(s: Word, t: Word) -> int:
    """Number of mismatching positions."""
    if len(s) != len(t):
        raise LengthMismatch(f"|s|={len(s)} vs |t|={len(t)}")
    return sum(a != b for a, b in zip(s, t))


def sum_consensus_ham(inst: Instance) -> ConsensusAnswer:
    """Minimize the sum of Hamming distances: per-column majority.

    Ties go to the smaller symbol, which makes the result the lex-minimal
    optimum. Always feasible.
    """
    stats = SearchStats()
    with Timer(stats):
        cols = []
        for p in range(inst.n):
            counts: dict[str, int] = {}
            for w in inst.words:
                counts[w[p]] = counts.get(w[p], 0) + 1
            best = max(sorted(counts), key=lambda c: counts[c])
            # max() keeps the first (smallest) symbol on count ties.
            cols.append(best)
        solution = "".join(cols)
        dists = tuple(float(hamming_distance(w, solution)) for w in inst.words)
    return ConsensusAnswer.found(solution, dists, stats)


def radius_consensus_ham_mixed(q: MixedRadiusQuery) -> ConsensusAnswer:
    """Bounded search tree for budgeted radius consensus.

    The candidate starts at the first input word. At each node, the first word
    whose slack is violated drives the branching: copy its symbol at each of
    the first slack+1 mismatch positions. Depth is capped at d; a node is
    pruned when some word's distance provably cannot reach its slack within
    the remaining depth. The witness is the first found under this canonical
    order (violated word by index, positions left to right).
    """
    inst = q.budgeted.instance
    words = inst.words
    slacks = [q.d - x for x in q.budgeted.budgets]
    stats = SearchStats()

    def search(cand: str, depth: int) -> str | None:
        stats.nodes_expanded += 1
        dists = [hamming_distance(cand, w) for w in words]
        remaining = q.d - depth
        violated = -1
        for i, (dist, slack) in enumerate(zip(dists, slacks)):
            if dist > slack:
                if dist - slack > remaining:
                    return None  # unreachable even if every move helps word i
                if violated < 0:
                    violated = i
        if violated < 0:
            return cand
        if remaining == 0:
            return None
        w = words[violated]
        branch_positions = [p for p in range(inst.n) if cand[p] != w[p]]
        for p in branch_positions[: slacks[violated] + 1]:
            child = cand[:p] + w[p] + cand[p + 1 :]
            hit = search(child, depth + 1)
            if hit is not None:
                return hit
        return None

    with Timer(stats):
        witness = search(words[0], 0)
    if witness is None:
        return ConsensusAnswer.none(
            f"no word within slack of every input at radius {q.d}", stats
        )
    dists = tuple(float(hamming_distance(w, witness)) for w in words)
    return ConsensusAnswer.found(witness, dists, stats)


def rs_consensus_ham_mixed(q: MixedRadiusSumQuery) -> ConsensusAnswer:
    """Complete normalized search for budgeted radius+sum consensus.

    Any solution may be normalized column-wise to symbols occurring in that
    column (replacing a foreign symbol by the column majority never increases
    any distance), so the search runs over column-restricted words only,
    depth-first in lex order with admissible pruning:

    * per-string: mismatches so far must not exceed the string's slack;
    * sum: mismatches so far plus the per-column minimum achievable on the
      remaining suffix must stay within the sum budget and strictly under the
      best sum found so far (a tie can never beat an earlier, lex-smaller
      witness).

    Returns the minimum-sum witness, lex-min among optima.
    """
    inst = q.budgeted.instance
    words = inst.words
    k, n = inst.k, inst.n
    slacks = [q.d - x for x in q.budgeted.budgets]
    sum_budget = q.D - sum(q.budgeted.budgets)
    stats = SearchStats()

    columns = [inst.column(p) for p in range(n)]
    # suffix_min[p] = unavoidable mismatch count on positions p..n-1.
    suffix_min = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        col_min = min(sum(w[p] != b for w in words) for b in columns[p])
        suffix_min[p] = suffix_min[p + 1] + col_min

    best: tuple[int, str] | None = None

    def search(prefix: list[str], mism: list[int], total: int, p: int) -> None:
        nonlocal best
        stats.nodes_expanded += 1
        bound = sum_budget if best is None else min(sum_budget, best[0] - 1)
        if total + suffix_min[p] > bound:
            return
        if p == n:
            best = (total, "".join(prefix))
            return
        for b in columns[p]:
            new_mism = mism.copy()
            ok = True
            add = 0
            for i, w in enumerate(words):
                if w[p] != b:
                    new_mism[i] += 1
                    add += 1
                    if new_mism[i] > slacks[i]:
                        ok = False
                        break
            if not ok:
                continue
            prefix.append(b)
            search(prefix, new_mism, total + add, p + 1)
            prefix.pop()

    with Timer(stats):
        search([], [0] * k, 0, 0)
    if best is None:
        return ConsensusAnswer.none(
            f"no word meets radius {q.d} slacks with sum within {sum_budget}", stats
        )
    witness = best[1]
    dists = tuple(float(hamming_distance(w, witness)) for w in words)
    return ConsensusAnswer.found(witness, dists, stats)


def pad_mixed(
    q: MixedRadiusQuery | MixedRadiusSumQuery,
) -> tuple[Instance, int] | tuple[Instance, int, int]:
    """Reduce a budgeted query to a plain one by appending binary pads.

    With x = max budget, word s with budget x_s gets the two padded copies
    s + ("01" * x_s + "00" * (x - x_s)) and s + ("10" * x_s + "00" * (x - x_s)).
    The padded instance is radius-d feasible (and sum-2D feasible, for
    radius+sum queries) exactly when the original budgeted query is feasible.
    Returns (instance, d) or (instance, d, 2*D).
    """
    inst = q.budgeted.instance
    present = set(PAD_SYMBOLS) & set(inst.alphabet)
    if present:
        raise ReservedSymbolPresent(
            f"instance already uses reserved pad symbol(s) {sorted(present)}"
        )
    x = max(q.budgeted.budgets)
    a_rows = []
    b_rows = []
    for w, xs in zip(inst.words, q.budgeted.budgets):
        a_rows.append(w + "01" * xs + "00" * (x - xs))
        b_rows.append(w + "10" * xs + "00" * (x - xs))
    padded = Instance(tuple(a_rows + b_rows))
    if isinstance(q, MixedRadiusSumQuery):
        return padded, q.d, 2 * q.D
    return padded, q.d
