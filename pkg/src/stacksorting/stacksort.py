"""West's stack-sorting map and preimage oracles.

Two independent routes compute preimages: a brute-force sweep of S_n, and
in-order readings of the decreasing binary plane trees whose postorder is the
target. They must agree; the tests hold them to that.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .perm import Perm, all_perms, check_normalized
from .trees import count_postorder_preimages, enumerate_postorder_preimages, in_order

# Largest n for which the full S_n image index is kept in memory.
BRUTE_INDEX_MAX = 8


def sort_once(p: Sequence[int]) -> Perm:
    """s(LnR) = s(L) s(R) n, s(empty) = empty."""
    p = tuple(p)
    if not p:
        return ()
    m = p.index(max(p))
    return sort_once(p[:m]) + sort_once(p[m + 1:]) + (p[m],)


def sort_iterate(p: Sequence[int], times: int) -> Perm:
    p = tuple(p)
    for _ in range(times):
        p = sort_once(p)
    return p


def sorts_to(sigma: Sequence[int], target: Sequence[int]) -> bool:
    """Whether s(sigma) == target, bailing out at the first mismatched output entry."""
    if len(sigma) != len(target):
        return False
    out = 0
    # Pending work, popped from the end: ("seg", lo, hi) or ("emit", value).
    todo: list = [("seg", 0, len(sigma))]
    while todo:
        item = todo.pop()
        if item[0] == "emit":
            if target[out] != item[1]:
                return False
            out += 1
            continue
        _, lo, hi = item
        if lo >= hi:
            continue
        m = max(range(lo, hi), key=sigma.__getitem__)
        todo.append(("emit", sigma[m]))
        todo.append(("seg", m + 1, hi))
        todo.append(("seg", lo, m))
    return True


@lru_cache(maxsize=BRUTE_INDEX_MAX + 1)
def _image_index(n: int) -> dict[Perm, tuple[Perm, ...]]:
    index = defaultdict(list)
    for sigma in all_perms(n):
        index[sort_once(sigma)].append(sigma)
    return {k: tuple(v) for k, v in index.items()}


def fertility_table(n: int) -> dict[Perm, int]:
    """|s^{-1}(p)| for every p in the image of S_n, by a full sweep."""
    return {k: len(v) for k, v in _image_index(n).items()}


@dataclass(frozen=True)
class PreimageSet:
    target: Perm
    members: tuple[Perm, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __contains__(self, sigma: object) -> bool:
        return sigma in self.members


def _brute_preimages(p: Perm) -> tuple[Perm, ...]:
    n = len(p)
    if n <= BRUTE_INDEX_MAX:
        return _image_index(n).get(p, ())
    if p[-1] != n:
        return ()
    return tuple(sigma for sigma in all_perms(n) if sorts_to(sigma, p))


@lru_cache(maxsize=None)
def _tree_preimages(p: Perm) -> tuple[Perm, ...]:
    if not p:
        return ((),)
    return tuple(sorted(in_order(t) for t in enumerate_postorder_preimages(p, "binary")))


def preimages(p: Sequence[int], method: str = "trees") -> PreimageSet:
    """s^{-1}(p) in lexicographic order.

    ``method`` is ``"trees"`` (binary postorder preimages read in-order) or
    ``"brute"`` (sweep of S_n).
    """
    p = tuple(p)
    check_normalized(p)
    if method == "trees":
        members = _tree_preimages(p)
    elif method == "brute":
        members = _brute_preimages(p)
    else:
        raise ValueError(f"unknown preimage method {method!r}")
    return PreimageSet(p, members)


def fertility(p: Sequence[int], method: str = "trees") -> int:
    p = tuple(p)
    check_normalized(p)
    if method == "trees":
        return count_postorder_preimages(p, "binary") if p else 1
    return len(preimages(p, method))


def preimages_of_set(perms: Iterable[Sequence[int]], method: str = "trees") -> list[Perm]:
    perms = [tuple(p) for p in perms]
    if len({len(p) for p in perms}) > 1:
        raise ValueError("preimages_of_set needs permutations of a single length")
    out = set()
    for p in perms:
        out.update(preimages(p, method))
    return sorted(out)


def set_fertility(perms: Iterable[Sequence[int]], method: str = "trees") -> int:
    """|s^{-1}(A)|; preimages of distinct targets are disjoint."""
    perms = {tuple(p) for p in perms}
    if len({len(p) for p in perms}) > 1:
        raise ValueError("set_fertility needs permutations of a single length")
    return sum(fertility(p, method) for p in perms)


def is_sorted_perm(p: Sequence[int]) -> bool:
    """Whether p has at least one preimage under s (brute force)."""
    p = tuple(p)
    check_normalized(p)
    if not p:
        return True
    return bool(_brute_preimages(p)) if len(p) <= BRUTE_INDEX_MAX else any(
        sorts_to(sigma, p) for sigma in all_perms(len(p)))
