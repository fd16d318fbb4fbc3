"""Valid hook configurations, their induced compositions, and fertility formulas.

Positions are 1-based. A hook joins a southwest endpoint at position ``sw``
to a northeast endpoint at position ``ne`` with ``sw < ne`` and a larger
value at ``ne``. A configuration owns its base permutation, which need not be
normalized; only the relative order of entries matters.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Optional, Sequence

from .perm import Perm, normalize
from .stats import descent_set
from .trees import LPolynomial, catalan, l_polynomial, motzkin

Composition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Hook:
    sw: int
    ne: int

    def __post_init__(self):
        if self.sw >= self.ne:
            raise ValueError(f"hook needs sw < ne, got {self}")


@dataclass(frozen=True)
class ValidHookConfiguration:
    base: Perm
    hooks: tuple[Hook, ...]

    @property
    def composition(self) -> Composition:
        return induced_composition(self)

    @property
    def type(self) -> Composition:
        return type_of(self.composition)

    def to_dict(self) -> dict:
        return {"base": list(self.base), "hooks": [[h.sw, h.ne] for h in self.hooks]}


VHC = ValidHookConfiguration


def descents(p: Sequence[int]) -> list[int]:
    return sorted(descent_set(p))


def descent_tops(p: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, p[i - 1]) for i in descents(p)]


# -- condition predicates --------------------------------------------------

def nothing_above(p: Sequence[int], h: Hook) -> bool:
    """Every entry strictly between the endpoints sits below the NE value."""
    top = p[h.ne - 1]
    return p[h.sw - 1] < top and all(p[x - 1] < top for x in range(h.sw + 1, h.ne))


def compatible(h1: Hook, h2: Hook) -> bool:
    """Whether two hooks, each with nothing above them, may coexist.

    Spans must be disjoint (touching at NE-of-one = SW-of-other allowed) or
    strictly nested.
    """
    if h1.sw > h2.sw:
        h1, h2 = h2, h1
    if h1.sw == h2.sw:
        return False
    return h2.sw >= h1.ne or h2.ne < h1.ne


def _segments(p: Sequence[int], h: Hook):
    x0, y0 = h.sw, p[h.sw - 1]
    x1, y1 = h.ne, p[h.ne - 1]
    return [((x0, y0), (x0, y1)), ((x0, y1), (x1, y1))]


def _segment_meet(s, t):
    """Intersection of two closed axis-parallel segments: None, a point, or 'overlap'."""
    (ax0, ay0), (ax1, ay1) = s
    (bx0, by0), (bx1, by1) = t
    lox, hix = max(min(ax0, ax1), min(bx0, bx1)), min(max(ax0, ax1), max(bx0, bx1))
    loy, hiy = max(min(ay0, ay1), min(by0, by1)), min(max(ay0, ay1), max(by0, by1))
    if lox > hix or loy > hiy:
        return None
    if lox == hix and loy == hiy:
        return (lox, loy)
    return "overlap"


def nothing_above_drawn(p: Sequence[int], h: Hook) -> bool:
    """Geometric form of :func:`nothing_above`: no plotted point directly above the hook."""
    if not (h.sw < h.ne and p[h.sw - 1] < p[h.ne - 1]):
        return False
    top = p[h.ne - 1]
    for x in range(1, len(p) + 1):
        if x in (h.sw, h.ne):
            continue
        if h.sw <= x <= h.ne and p[x - 1] > top:
            return False
    return True


def compatible_drawn(p: Sequence[int], h1: Hook, h2: Hook) -> bool:
    """Geometric form of :func:`compatible`, by intersecting the drawn segments."""
    allowed = set()
    if h1.ne == h2.sw:
        allowed.add((h1.ne, p[h1.ne - 1]))
    if h2.ne == h1.sw:
        allowed.add((h2.ne, p[h2.ne - 1]))
    for s in _segments(p, h1):
        for t in _segments(p, h2):
            meet = _segment_meet(s, t)
            if meet is None:
                continue
            if meet == "overlap" or meet not in allowed:
                return False
    return True


def is_valid(p: Sequence[int], hooks: Sequence[Hook]) -> bool:
    """Full check of conditions 1-3 for a hook tuple ordered by southwest endpoint."""
    if [h.sw for h in hooks] != descents(p):
        return False
    if any(h.ne > len(p) or not nothing_above(p, h) for h in hooks):
        return False
    return all(compatible(a, b) for i, a in enumerate(hooks) for b in hooks[i + 1:])


# -- enumeration -----------------------------------------------------------

def _ne_candidates(p: Sequence[int], d: int) -> list[int]:
    out = []
    best = 0
    base = p[d - 1]
    for j in range(d + 1, len(p) + 1):
        v = p[j - 1]
        if v > best:
            # v exceeds everything strictly between d and j
            if v > base:
                out.append(j)
            best = v
    return out


@lru_cache(maxsize=None)
def _vhc_hooks(p: Perm) -> tuple[tuple[Hook, ...], ...]:
    ds = descents(p)
    if not ds:
        return ((),)
    found = []
    placed: list[Hook] = []

    # Right to left over descent tops.
    def place(idx: int) -> None:
        if idx < 0:
            found.append(tuple(reversed(placed)))
            return
        d = ds[idx]
        for j in _ne_candidates(p, d):
            h = Hook(d, j)
            if all(compatible(h, other) for other in placed):
                placed.append(h)
                place(idx - 1)
                placed.pop()

    place(len(ds) - 1)
    return tuple(sorted(found))


def enumerate_vhcs(p: Sequence[int]) -> list[ValidHookConfiguration]:
    p = tuple(p)
    if len(set(p)) != len(p):
        raise ValueError("entries must be distinct")
    return [ValidHookConfiguration(p, hooks) for hooks in _vhc_hooks(normalize(p))]


def make_vhc(p: Sequence[int], pairs: Sequence[tuple[int, int]]) -> ValidHookConfiguration:
    p = tuple(p)
    hooks = tuple(sorted(Hook(a, b) for a, b in pairs))
    if not is_valid(p, hooks):
        raise ValueError(f"not a valid hook configuration of {p}: {pairs}")
    return ValidHookConfiguration(p, hooks)


# -- colorings and compositions --------------------------------------------

def coloring(h: ValidHookConfiguration) -> list[Optional[int]]:
    """Color of each position: 0 for sky, t for the t-th hook, None for NE endpoints.

    A point takes the color of the innermost hook whose span strictly contains
    it; a southwest endpoint is not inside its own hook, which models looking
    past the left side of the hook's vertical segment.
    """
    n = len(h.base)
    ne_points = {hk.ne for hk in h.hooks}
    colors: list[Optional[int]] = []
    for x in range(1, n + 1):
        if x in ne_points:
            colors.append(None)
            continue
        best, width = 0, None
        for t, hk in enumerate(h.hooks, start=1):
            if hk.sw < x < hk.ne and (width is None or hk.ne - hk.sw < width):
                best, width = t, hk.ne - hk.sw
        colors.append(best)
    return colors


def induced_composition(h: ValidHookConfiguration) -> Composition:
    counts = [0] * (len(h.hooks) + 1)
    for c in coloring(h):
        if c is not None:
            counts[c] += 1
    return tuple(counts)


def type_of(c: Sequence[int]) -> Composition:
    return tuple(sorted(c, reverse=True))


def valid_compositions(p: Sequence[int]) -> list[Composition]:
    return [h.composition for h in enumerate_vhcs(p)]


# -- fertility formulas ----------------------------------------------------

def fertility_via_vhc(p: Sequence[int]) -> int:
    """|s^{-1}(p)| as a sum over valid compositions of products of Catalan numbers."""
    if not p:
        return 1
    return sum(prod(catalan(q) for q in c) for c in valid_compositions(p))


def fertility_polynomial(p: Sequence[int]) -> LPolynomial:
    """Sum over valid compositions of prod L_{q_t}(x, y)."""
    if not p:
        return LPolynomial.one()
    total = LPolynomial()
    for c in valid_compositions(p):
        term = LPolynomial.one()
        for q in c:
            term = term * l_polynomial(q)
        total = total + term
    return total


def weighted_count(p: Sequence[int], weight: str = "catalan") -> int:
    if weight == "catalan":
        f = catalan
    elif weight == "motzkin":
        def f(q):
            return motzkin(q - 1)
    else:
        raise ValueError(f"unknown weight {weight!r}")
    if not p:
        return 1
    return sum(prod(f(q) for q in c) for c in valid_compositions(p))


# -- hook decomposition ----------------------------------------------------

def _check_splittable(p: Sequence[int], hook: Hook) -> None:
    ds = descents(p)
    if hook.sw not in ds:
        raise ValueError(f"{hook} does not start at a descent top")
    if ds and hook.ne <= ds[-1]:
        raise ValueError(f"{hook} must end after the last descent {ds[-1]}")


def split_parts(p: Sequence[int], hook: Hook) -> tuple[Perm, Perm]:
    """(unsheltered, sheltered) subpermutations cut out by ``hook``."""
    p = tuple(p)
    i, j = hook.sw, hook.ne
    return p[:i] + p[j:], p[i:j - 1]


def split_by_hook(h: ValidHookConfiguration, hook: Hook) -> tuple[ValidHookConfiguration, ValidHookConfiguration]:
    if hook not in h.hooks:
        raise ValueError(f"{hook} is not a hook of the configuration")
    _check_splittable(h.base, hook)
    i, j = hook.sw, hook.ne
    unsheltered, sheltered = split_parts(h.base, hook)

    def shift(x: int) -> int:
        return x if x <= i else x - (j - i)

    u_hooks, s_hooks = [], []
    for hk in h.hooks:
        if hk.sw < i:
            u_hooks.append(Hook(shift(hk.sw), shift(hk.ne)))
        elif hk.sw > i:
            s_hooks.append(Hook(hk.sw - i, hk.ne - i))
    return (ValidHookConfiguration(unsheltered, tuple(u_hooks)),
            ValidHookConfiguration(sheltered, tuple(s_hooks)))


def join_by_hook(base: Sequence[int], hook: Hook, unsheltered: ValidHookConfiguration,
                 sheltered: ValidHookConfiguration) -> ValidHookConfiguration:
    """Inverse of :func:`split_by_hook` for the configurations of ``base`` containing ``hook``."""
    base = tuple(base)
    _check_splittable(base, hook)
    u_base, s_base = split_parts(base, hook)
    if unsheltered.base != u_base or sheltered.base != s_base:
        raise ValueError("parts do not match the split of the base permutation")
    i, j = hook.sw, hook.ne

    def unshift(x: int) -> int:
        return x if x <= i else x + (j - i)

    hooks = [Hook(unshift(hk.sw), unshift(hk.ne)) for hk in unsheltered.hooks]
    hooks.append(hook)
    hooks += [Hook(hk.sw + i, hk.ne + i) for hk in sheltered.hooks]
    hooks.sort()
    if not is_valid(base, hooks):
        raise ValueError("joined hooks do not form a valid configuration")
    return ValidHookConfiguration(base, tuple(hooks))


def transport(h: ValidHookConfiguration, new_base: Sequence[int]) -> ValidHookConfiguration:
    """Move ``h`` onto a permutation with the same normalization, keeping hook positions."""
    new_base = tuple(new_base)
    if normalize(new_base) != normalize(h.base):
        raise ValueError("transport needs permutations with equal normalizations")
    return ValidHookConfiguration(new_base, h.hooks)


def is_composition_of(c: Composition, n: int, k: int) -> bool:
    """Whether c has k+1 positive parts summing to n-k."""
    return len(c) == k + 1 and all(q >= 1 for q in c) and sum(c) == n - k


__all__ = [
    "Hook", "ValidHookConfiguration", "VHC", "Composition", "descents", "descent_tops",
    "nothing_above", "compatible", "nothing_above_drawn", "compatible_drawn",
    "is_valid", "enumerate_vhcs", "make_vhc", "coloring", "induced_composition", "type_of",
    "valid_compositions", "fertility_via_vhc", "fertility_polynomial", "weighted_count",
    "split_parts", "split_by_hook", "join_by_hook", "transport", "is_composition_of",
]
