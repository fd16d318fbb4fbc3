"""Permutations in one-line notation, pattern containment and class enumeration.

Permutations are plain tuples of distinct positive integers. The empty tuple is
the empty permutation. Operations that only make sense on normalized input
(elements of S_n) raise ``ValueError`` otherwise.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

EMPTY_TEXT = "e"


# -- construction and text form -------------------------------------------

def as_perm(entries: Iterable[int]) -> Perm:
    p = tuple(int(x) for x in entries)
    if len(set(p)) != len(p):
        raise ValueError(f"entries of a permutation must be distinct: {p}")
    if any(x < 1 for x in p):
        raise ValueError(f"entries of a permutation must be positive: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"3 1 2"``, the compact ``"312"`` (single digits only) or ``"e"``."""
    text = text.strip()
    if text in ("", EMPTY_TEXT, "ε"):
        return ()
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    elif text.isdigit():
        tokens = list(text)
    else:
        raise ValueError(f"malformed permutation text: {text!r}")
    if not all(tok.isdigit() for tok in tokens):
        raise ValueError(f"malformed permutation text: {text!r}")
    return as_perm(int(tok) for tok in tokens)


def format_perm(p: Sequence[int], compact: bool = False) -> str:
    if not p:
        return EMPTY_TEXT
    if compact and all(x < 10 for x in p):
        return "".join(str(x) for x in p)
    return " ".join(str(x) for x in p)


def parse_patterns(text: str) -> list[Perm]:
    """Parse a comma-separated pattern list such as ``"231,1423"``."""
    text = text.strip()
    if not text:
        return []
    pats = [parse_perm(chunk) for chunk in text.split(",")]
    for pat in pats:
        check_normalized(pat)
    return pats


def format_patterns(pats: Iterable[Sequence[int]]) -> str:
    return ",".join(format_perm(p, compact=True) for p in pats)


# -- basic predicates and constructors ------------------------------------

def is_normalized(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def check_normalized(p: Sequence[int], what: str = "permutation") -> None:
    if not is_normalized(p):
        raise ValueError(f"{what} must be normalized, got {tuple(p)}")


def normalize(p: Sequence[int]) -> Perm:
    rank = {v: r for r, v in enumerate(sorted(p), start=1)}
    return tuple(rank[v] for v in p)


def unnormalize(p: Sequence[int], values: Iterable[int]) -> Perm:
    """The permutation of ``values`` whose normalization is ``p``."""
    vals = sorted(values)
    if len(vals) != len(p):
        raise ValueError("value set and permutation differ in size")
    return tuple(vals[x - 1] for x in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def inverse(p: Sequence[int]) -> Perm:
    check_normalized(p)
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def reverse(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Perm:
    check_normalized(p)
    n = len(p)
    return tuple(n + 1 - v for v in p)


def all_perms(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


# -- pattern containment ---------------------------------------------------

@lru_cache(maxsize=None)
def _value_neighbours(pat: Perm) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # For each pattern position t, the earlier position holding the next smaller
    # and next larger pattern value (or -1).
    lower, upper = [], []
    for t, v in enumerate(pat):
        below = [(pat[s], s) for s in range(t) if pat[s] < v]
        above = [(pat[s], s) for s in range(t) if pat[s] > v]
        lower.append(max(below)[1] if below else -1)
        upper.append(min(above)[1] if above else -1)
    return tuple(lower), tuple(upper)


def contains(p: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff some subsequence of ``p`` normalizes to ``pat``."""
    pat = tuple(pat)
    check_normalized(pat, "pattern")
    k, n = len(pat), len(p)
    if k == 0:
        return True
    if k > n:
        return False
    lower, upper = _value_neighbours(pat)
    chosen = [0] * k

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo = chosen[lower[t]] if lower[t] >= 0 else 0
        hi = chosen[upper[t]] if upper[t] >= 0 else float("inf")
        for i in range(start, n - k + t + 1):
            v = p[i]
            if lo < v < hi:
                chosen[t] = v
                if extend(t + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def avoids_all(p: Sequence[int], pats: Iterable[Sequence[int]]) -> bool:
    return not any(contains(p, pat) for pat in pats)


def _canonical_patterns(pats: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    out = sorted({tuple(pat) for pat in pats}, key=lambda t: (len(t), t))
    for pat in out:
        check_normalized(pat, "pattern")
    return tuple(out)


@lru_cache(maxsize=None)
def _av(n: int, pats: tuple[Perm, ...]) -> tuple[Perm, ...]:
    if n == 0:
        return ((),) if avoids_all((), pats) else ()
    # Av is closed under deleting n, so every member arises by inserting n
    # into a member of Av_{n-1}; each candidate is still checked in full.
    out = set()
    for q in _av(n - 1, pats):
        for pos in range(n):
            cand = q[:pos] + (n,) + q[pos:]
            if avoids_all(cand, pats):
                out.add(cand)
    return tuple(sorted(out))


def enumerate_av(n: int, pats: Iterable[Sequence[int]] = ()) -> list[Perm]:
    """Av_n(pats), lexicographically sorted. An empty pattern list gives S_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_av(n, _canonical_patterns(pats)))


def count_av(n: int, pats: Iterable[Sequence[int]] = ()) -> int:
    return len(_av(n, _canonical_patterns(pats)))


# -- sums, rotations -------------------------------------------------------

def direct_sum(a: Sequence[int], b: Sequence[int]) -> Perm:
    check_normalized(a)
    check_normalized(b)
    k = len(a)
    return tuple(a) + tuple(x + k for x in b)


def skew_sum(a: Sequence[int], b: Sequence[int]) -> Perm:
    check_normalized(a)
    check_normalized(b)
    m = len(b)
    return tuple(x + m for x in a) + tuple(b)


def rot(p: Sequence[int]) -> Perm:
    """Rotate the plot a quarter turn counterclockwise (reverse of the inverse)."""
    return reverse(inverse(p))


def rot_inv(p: Sequence[int]) -> Perm:
    check_normalized(p)
    return inverse(reverse(p))


def is_sum_indecomposable(p: Sequence[int]) -> bool:
    check_normalized(p)
    if not p:
        raise ValueError("sum indecomposability is undefined for the empty permutation")
    running = 0
    for k in range(1, len(p)):
        running = max(running, p[k - 1])
        if running == k:
            return False
    return True


def is_skew_indecomposable(p: Sequence[int]) -> bool:
    check_normalized(p)
    if not p:
        raise ValueError("skew indecomposability is undefined for the empty permutation")
    n = len(p)
    running = n + 1
    for k in range(1, n):
        running = min(running, p[k - 1])
        if running == n - k + 1:
            return False
    return True


def chi(m: int, p: Sequence[int]) -> Perm:
    """Wrap ``p`` in m new large entries: odd offsets descending in front,
    even offsets ascending behind."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    check_normalized(p)
    n = len(p)
    front = tuple(n + k for k in range(m, 0, -1) if k % 2 == 1)
    back = tuple(n + k for k in range(2, m + 1, 2))
    return front + tuple(p) + back


def chi_tilde(m: int, p: Sequence[int]) -> Perm:
    return rot_inv(chi(m, rot(p)))


# -- containment classes, misc ---------------------------------------------

def containment_class(witnesses: Iterable[Sequence[int]], n: int) -> list[Perm]:
    """Normalized length-n permutations contained in at least one witness."""
    found = set()
    for w in witnesses:
        w = tuple(w)
        check_normalized(w, "witness")
        if n > len(w):
            continue
        for idx in itertools.combinations(range(len(w)), n):
            found.add(normalize([w[i] for i in idx]))
    return sorted(found)


def drop_last_star(p: Sequence[int]) -> Perm:
    """Normalization of ``p`` with its final entry removed."""
    if not p:
        raise ValueError("drop_last_star needs a nonempty permutation")
    return normalize(p[:-1])
