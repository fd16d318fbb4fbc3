"""Sliding operators swu/swl and the type-preserving hook-configuration bijection theta.

``swu`` maps Av(231) onto Av(132); ``swl = rot^-1 . swu . rot`` maps Av(132)
onto Av(312). Both accept permutations of arbitrary label sets by working on
the normalization and relabelling the result.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .perm import (Perm, contains, direct_sum, enumerate_av, is_normalized, normalize,
                   rot, rot_inv, skew_sum, unnormalize)
from .stats import tail_length
from .vhc import (Hook, ValidHookConfiguration, enumerate_vhcs, is_valid, join_by_hook,
                  split_by_hook, split_parts, transport)


def _relabelled(f):
    """Extend a map on normalized permutations to arbitrary label sets."""
    def wrapper(p: Sequence[int]) -> Perm:
        p = tuple(p)
        if is_normalized(p):
            return f(p)
        return unnormalize(f(normalize(p)), p)

    wrapper.__name__ = f.__name__
    wrapper.__doc__ = f.__doc__
    return wrapper


@lru_cache(maxsize=None)
def _swu(p: Perm) -> Perm:
    if not p:
        return p
    n = len(p)
    m = p.index(n)
    left, right = p[:m], p[m + 1:]
    # p = L + (1 - R): everything before n is below everything after it.
    if left and right and max(left) > min(right):
        raise ValueError(f"{p} contains 231")
    lo, hi = normalize(left), normalize(right)
    return skew_sum(direct_sum(_swu(lo), (1,)), _swu(hi))


@lru_cache(maxsize=None)
def _swu_inv(p: Perm) -> Perm:
    if not p:
        return p
    n = len(p)
    m = p.index(n)
    left, right = p[:m], p[m + 1:]
    # p = (L + 1) - R: everything before n is above everything after it.
    if left and right and min(left) < max(right):
        raise ValueError(f"{p} contains 132")
    lo, hi = normalize(left), normalize(right)
    return direct_sum(_swu_inv(lo), skew_sum((1,), _swu_inv(hi)))


@_relabelled
def swu(p: Perm) -> Perm:
    """Slide southwest points up: Av(231) -> Av(132)."""
    return _swu(p)


@_relabelled
def swu_inv(p: Perm) -> Perm:
    return _swu_inv(p)


@_relabelled
def swl(p: Perm) -> Perm:
    """Slide southwest points left: Av(132) -> Av(312)."""
    if contains(p, (1, 3, 2)):
        raise ValueError(f"{p} contains 132")
    return rot_inv(_swu(rot(p)))


@_relabelled
def swl_inv(p: Perm) -> Perm:
    if contains(p, (3, 1, 2)):
        raise ValueError(f"{p} contains 312")
    return rot_inv(_swu_inv(rot(p)))


def swu_class_image(pats: Iterable[Sequence[int]], n: int) -> bool:
    """Whether swu(Av_n(231, aux)) == Av_n(132, swu(aux)) where aux = pats minus 231."""
    aux = [tuple(t) for t in pats if tuple(t) != (2, 3, 1)]
    left = {swu(p) for p in enumerate_av(n, [(2, 3, 1), *aux])}
    right = set(enumerate_av(n, [(1, 3, 2), *(swu(t) for t in aux)]))
    return left == right


def swl_class_image(pats: Iterable[Sequence[int]], n: int) -> bool:
    """Whether swl(Av_n(132, 3412, aux)) == Av_n(312, 1342, swl(aux))."""
    fixed = {(1, 3, 2), (3, 4, 1, 2)}
    aux = [tuple(t) for t in pats if tuple(t) not in fixed]
    left = {swl(p) for p in enumerate_av(n, [(1, 3, 2), (3, 4, 1, 2), *aux])}
    right = set(enumerate_av(n, [(3, 1, 2), (1, 3, 4, 2), *(swl(t) for t in aux)]))
    return left == right


def swu_hooks(h: ValidHookConfiguration) -> ValidHookConfiguration:
    """Keep every hook on the same positions while the base slides to swu(base)."""
    moved = ValidHookConfiguration(swu(h.base), h.hooks)
    if not is_valid(moved.base, moved.hooks):
        raise ValueError("hooks do not survive the slide")
    return moved


# -- theta -----------------------------------------------------------------

def _hook_at(hooks: Sequence[Hook], sw: int) -> Hook:
    for hk in hooks:
        if hk.sw == sw:
            return hk
    raise AssertionError(f"no hook starts at position {sw}")


@lru_cache(maxsize=None)
def _theta(p: Perm, hooks: tuple[Hook, ...]) -> tuple[Hook, ...]:
    n = len(p)
    q = swl(p)
    if n <= 2 or p == q:
        return hooks
    a = n - tail_length(p)
    if a == n:
        raise AssertionError("a permutation not ending in its maximum has no configurations")
    h = ValidHookConfiguration(p, hooks)
    b = p[a - 1]
    if b == 1:
        # Every configuration has a hook from the descent top at a-1.
        if q[a - 2:] != p[a - 2:]:
            raise AssertionError("swl moved the forced descent top")
        H = _hook_at(hooks, a - 1)
        H2 = Hook(a - 1, H.ne)
        u, s = split_by_hook(h, H)
        u_target, s_target = split_parts(q, H2)
        u2 = theta(u.base, u)
        s2 = theta(s.base, s)
        if u2.base != u_target or s2.base != s_target:
            raise AssertionError("swl does not commute with the hook split")
        return join_by_hook(q, H2, u2, s2).hooks

    # p = (delta_{a-b} - (mu + 1)) + Id_{n-a}
    if list(p[:a - b]) != list(range(a, b, -1)):
        raise AssertionError("lambda cannot have an ascent")
    H = _hook_at(hooks, a - b)
    ell = H.ne - a
    H2 = Hook(b, n + 1 - ell)
    u, s = split_by_hook(h, H)
    u_target, s_target = split_parts(q, H2)
    psi1 = transport(theta(u.base, u), s_target)
    psi2 = transport(theta(s.base, s), u_target)
    return join_by_hook(q, H2, psi2, psi1).hooks


def theta(p: Sequence[int], h: ValidHookConfiguration) -> ValidHookConfiguration:
    """Type-preserving bijection VHC(p) -> VHC(swl(p)) for p avoiding 132 and 3412."""
    p = tuple(p)
    if h.base != p:
        raise ValueError("configuration does not belong to p")
    if contains(p, (1, 3, 2)) or contains(p, (3, 4, 1, 2)):
        raise ValueError(f"theta needs a permutation avoiding 132 and 3412, got {p}")
    if not is_valid(p, h.hooks):
        raise ValueError("invalid hook configuration")
    q = normalize(p)
    hooks = _theta(q, h.hooks)
    return ValidHookConfiguration(swl(p), hooks)


def theta_map(p: Sequence[int]) -> dict[ValidHookConfiguration, ValidHookConfiguration]:
    return {h: theta(p, h) for h in enumerate_vhcs(p)}
