"""Permutation statistics, skeleton codes and joint distribution tables.

Every statistic here depends only on the normalization of its argument.
Descent and peak positions are 1-based, matching one-line notation.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .perm import normalize


def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] > p[i])


def peak_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(2, len(p)) if p[i - 2] < p[i - 1] > p[i])


def peak(p: Sequence[int]) -> int:
    return len(peak_set(p))


def lmax(p: Sequence[int]) -> int:
    count, best = 0, 0
    for v in p:
        if v > best:
            count, best = count + 1, v
    return count


def rmax(p: Sequence[int]) -> int:
    count, best = 0, 0
    for v in reversed(p):
        if v > best:
            count, best = count + 1, v
    return count


def zeil(p: Sequence[int]) -> int:
    """Largest m such that n, n-1, ..., n-m+1 appear in decreasing order."""
    if not p:
        raise ValueError("zeil is only defined on nonempty permutations")
    q = normalize(p)
    n = len(q)
    pos = [0] * (n + 1)
    for i, v in enumerate(q):
        pos[v] = i
    m = 1
    while m < n and pos[n - m] > pos[n - m + 1]:
        m += 1
    return m


def tail_length(p: Sequence[int]) -> int:
    """Number of trailing fixed points n, n-1, ...; tl(12...n) = n."""
    q = normalize(p)
    n, ell = len(q), 0
    while ell < n and q[n - 1 - ell] == n - ell:
        ell += 1
    return ell


tl = tail_length


def skeleton_of_perm(p: Sequence[int]) -> str:
    """Shape of the decreasing binary plane tree whose in-order reading is ``p``.

    A vertex is written ``(LR)`` with its two slot codes; ``_`` marks an empty
    slot. The empty permutation is the single empty slot ``_``.
    """
    def code(lo: int, hi: int) -> str:
        if lo >= hi:
            return "_"
        m = max(range(lo, hi), key=p.__getitem__)
        return "(" + code(lo, m) + code(m + 1, hi) + ")"

    return code(0, len(p))


def in_order_has_right_child(p: Sequence[int]) -> list[bool]:
    """For each in-order position of I^{-1}(p), whether that vertex has a right child."""
    flags = [False] * len(p)

    def walk(lo: int, hi: int) -> None:
        if lo >= hi:
            return
        m = max(range(lo, hi), key=p.__getitem__)
        flags[m] = m + 1 < hi
        walk(lo, m)
        walk(m + 1, hi)

    walk(0, len(p))
    return flags


STATISTICS: dict[str, Callable[[Sequence[int]], object]] = {
    "des": des,
    "peak": peak,
    "lmax": lmax,
    "rmax": rmax,
    "zeil": zeil,
    "tl": tail_length,
    "desset": descent_set,
}

LenDesStatistic = Callable[[int, frozenset], object]
StatSpec = Union[str, LenDesStatistic]


def _stat_name(stat: StatSpec) -> str:
    return stat if isinstance(stat, str) else getattr(stat, "__name__", repr(stat))


def _evaluator(stat: StatSpec) -> Callable[[Sequence[int]], object]:
    if isinstance(stat, str):
        try:
            return STATISTICS[stat]
        except KeyError:
            raise ValueError(f"unknown statistic {stat!r}; known: {sorted(STATISTICS)}") from None
    return lambda p: stat(len(p), descent_set(p))


def _sort_key(value: object) -> object:
    if isinstance(value, frozenset):
        return (1, tuple(sorted(value)))
    return (0, value)


def _plain(value: object) -> object:
    if isinstance(value, frozenset):
        return sorted(value)
    return value


@dataclass(frozen=True, eq=False)
class DistributionTable:
    """Multiset of statistic tuples over a set of permutations."""

    stats: tuple[str, ...]
    counts: Counter = field(default_factory=Counter)
    source: str = ""

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[tuple, int]]:
        return sorted(self.counts.items(), key=lambda kv: tuple(_sort_key(v) for v in kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return self.stats == other.stats and +self.counts == +other.counts

    def __hash__(self):
        return hash((self.stats, frozenset((+self.counts).items())))

    def difference(self, other: "DistributionTable") -> dict:
        keys = set(self.counts) | set(other.counts)
        return {k: (self.counts[k], other.counts[k]) for k in keys if self.counts[k] != other.counts[k]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*self.stats, "multiplicity"])
        for key, mult in self.rows():
            writer.writerow([
                "{" + ",".join(str(x) for x in sorted(v)) + "}" if isinstance(v, frozenset) else v
                for v in key
            ] + [mult])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "source": self.source,
            "stats": list(self.stats),
            "rows": [{"values": [_plain(v) for v in key], "multiplicity": mult}
                     for key, mult in self.rows()],
        }
        return json.dumps(payload, sort_keys=True)


def joint_distribution(perms: Iterable[Sequence[int]], stats: Sequence[StatSpec],
                       source: str = "") -> DistributionTable:
    names = tuple(_stat_name(s) for s in stats)
    evals = [_evaluator(s) for s in stats]
    counts: Counter = Counter()
    for p in perms:
        counts[tuple(f(p) for f in evals)] += 1
    return DistributionTable(names, counts, source)


def stat_vector(p: Sequence[int]) -> dict[str, object]:
    """All named statistics of ``p``; zeil is omitted for the empty permutation."""
    out = {name: f(p) for name, f in STATISTICS.items() if p or name != "zeil"}
    return out
