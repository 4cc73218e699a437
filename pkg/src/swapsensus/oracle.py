"""Ground truth by enumeration, a padding gadget, and reproducible generators.

The brute-force solver shares nothing with the real solvers except the
distance functions themselves, so agreement between the two is meaningful
evidence. Enumeration is restricted to the instance alphabet: a solution
under the swap distance must use exactly each word's symbols, and under the
Hamming and swap+substitution distances any out-of-instance symbol in a
candidate is dominated by an in-instance one.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass

from .core import (
    CapExceeded,
    ConsensusAnswer,
    INF,
    Instance,
    LengthMismatch,
    ReservedSymbolPresent,
    SearchStats,
    Timer,
    Word,
)
from .hamming import hamming_distance
from .sh_metric import sh_cost
from .swaps import swap_distance

__all__ = [
    "DEFAULT_CAP",
    "Radius",
    "Sum",
    "RadiusSum",
    "OracleQuery",
    "brute_force",
    "dollar_pad",
    "gen_planted",
]

DEFAULT_CAP = 2_000_000

METRICS = ("hamming", "swap", "swap-hamming")

_DISTANCE = {
    "hamming": hamming_distance,
    "swap": swap_distance,
    "swap-hamming": sh_cost,
}


@dataclass(frozen=True)
class Radius:
    """Decide whether some word is within distance d of every input."""

    d: int


@dataclass(frozen=True)
class Sum:
    """Minimize the total distance to all inputs."""


@dataclass(frozen=True)
class RadiusSum:
    """Within radius d, minimize the total distance and compare it to D."""

    d: int
    D: int


Objective = Radius | Sum | RadiusSum


@dataclass(frozen=True)
class OracleQuery:
    """A fully specified question for the brute-force reference solver.

    Optional per-word budgets are added to every computed distance, mirroring
    the budgeted problems left behind by disentanglement. The query is
    rejected up front when the enumeration space exceeds ``cap``.
    """

    instance: Instance
    metric: str
    objective: Objective
    budgets: tuple[int, ...] | None = None
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.budgets is not None:
            if len(self.budgets) != self.instance.k:
                raise LengthMismatch(
                    f"{len(self.budgets)} budgets for {self.instance.k} words"
                )
            if any(x < 0 for x in self.budgets):
                raise ValueError("budgets must be non-negative")
        space = len(self.instance.alphabet) ** self.instance.n
        if space > self.cap:
            raise CapExceeded(
                f"enumeration of {space} words exceeds the cap of {self.cap}"
            )


def brute_force(q: OracleQuery) -> ConsensusAnswer:
    """Enumerate every word over the instance alphabet, in lexicographic order.

    Radius queries return the first (hence lex-min) satisfying word. Sum and
    radius+sum queries keep the strictly best total seen, which again makes
    the reported witness lex-min among the optima.
    """
    inst = q.instance
    dist = _DISTANCE[q.metric]
    budgets = q.budgets or (0,) * inst.k
    stats = SearchStats()
    best: tuple[float, Word] | None = None
    with Timer(stats):
        for tup in itertools.product(inst.alphabet, repeat=inst.n):
            t = "".join(tup)
            stats.oracle_enumerated += 1
            dists = tuple(x + dist(w, t) for w, x in zip(inst.words, budgets))
            if isinstance(q.objective, Radius):
                if max(dists) <= q.objective.d:
                    return ConsensusAnswer.found(
                        t, tuple(float(v) for v in dists), stats
                    )
            elif isinstance(q.objective, Sum):
                total = sum(dists)
                if total != INF and (best is None or total < best[0]):
                    best = (total, t)
            else:
                if max(dists) <= q.objective.d:
                    total = sum(dists)
                    if best is None or total < best[0]:
                        best = (total, t)
    if isinstance(q.objective, Radius):
        return ConsensusAnswer.none(
            f"no word within {q.metric} radius {q.objective.d}", stats
        )
    if best is None:
        if isinstance(q.objective, Sum):
            return ConsensusAnswer.none("no word at finite total distance", stats)
        return ConsensusAnswer.none(
            f"no word within {q.metric} radius {q.objective.d}", stats
        )
    total, t = best
    if isinstance(q.objective, RadiusSum) and total > q.objective.D:
        return ConsensusAnswer.none(
            f"minimum total within radius {q.objective.d} is {int(total)} "
            f"> {q.objective.D}",
            stats,
        )
    dists = tuple(
        float(x + dist(w, t)) for w, x in zip(inst.words, budgets)
    )
    return ConsensusAnswer.found(t, dists, stats)


def dollar_pad(inst: Instance) -> Instance:
    """Interleave a '$' column between every pair of adjacent columns.

    The padding makes swaps useless (any swap would displace a '$'), so
    radius feasibility under the swap+substitution distance on the output
    coincides with plain Hamming radius feasibility on the input.
    """
    if "$" in inst.alphabet:
        raise ReservedSymbolPresent("the instance already uses the symbol '$'")
    return Instance(tuple("$".join(w) for w in inst.words))


def gen_planted(
    seed: int, n: int, k: int, sigma: int, ops_budget: int
) -> tuple[Instance, Word]:
    """Derive k words from a random center by disjoint random operations.

    Each word applies at most ``ops_budget`` operations to the center, every
    operation being a substitution or a swap of adjacent distinct symbols,
    all touching pairwise disjoint positions. That keeps every word within
    swap+substitution distance ``ops_budget`` of the center. Deterministic
    for a fixed argument tuple; the alphabet is the first ``sigma`` lowercase
    letters.
    """
    if not 2 <= sigma <= len(string.ascii_lowercase):
        raise ValueError("sigma must be between 2 and 26")
    if ops_budget < 0:
        raise ValueError("ops_budget must be non-negative")
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    rng = random.Random(seed)
    alphabet = string.ascii_lowercase[:sigma]
    center = "".join(rng.choice(alphabet) for _ in range(n))
    words = []
    for _ in range(k):
        w = list(center)
        blocked: set[int] = set()
        for _ in range(rng.randint(0, ops_budget)):
            if rng.random() < 0.5:
                pairs = [
                    p
                    for p in range(n - 1)
                    if p not in blocked and p + 1 not in blocked and w[p] != w[p + 1]
                ]
                if pairs:
                    p = rng.choice(pairs)
                    w[p], w[p + 1] = w[p + 1], w[p]
                    blocked.update((p, p + 1))
                    continue
                # No swap is available; fall back to a substitution.
            free = [p for p in range(n) if p not in blocked]
            if not free:
                break
            p = rng.choice(free)
            w[p] = rng.choice([c for c in alphabet if c != w[p]])
            blocked.add(p)
        words.append("".join(w))
    return Instance(tuple(words)), center
