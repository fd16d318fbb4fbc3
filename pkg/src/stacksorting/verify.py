"""Finite-level checks of the equivalence notions and the named claims built on them.

Every check walks n = 0..n_max (or 1..n_max where a statistic needs a
nonempty permutation) and stops at the first length where the two sides
differ. A bijection between two finite fibered sets exists exactly when the
fiber sizes agree, so equivalences are decided by comparing multisets of
skeleton codes, partition types or statistic tuples.
"""
from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

from .perm import (Perm, all_perms, check_normalized, chi, chi_tilde, containment_class, contains, drop_last_star,
                   enumerate_av, format_patterns, format_perm, rot, rot_inv)
from .series import boolean_catalan_sequence
from .sliding import (swl, swl_class_image, swl_inv, swu, swu_class_image, swu_hooks, swu_inv,
                      theta_map)
from .stacksort import fertility, fertility_table, preimages, sort_once
from .stats import descent_set, des, joint_distribution, peak, rmax, tail_length, zeil
from .trees import count_postorder_preimages, enumerate_postorder_preimages, postorder, skeleton_code, to_text
from .vhc import (Hook, enumerate_vhcs, fertility_polynomial, fertility_via_vhc, join_by_hook,
                  nothing_above, split_by_hook, split_parts, weighted_count)

PASS, FAIL = "pass", "fail"


@dataclass
class VerificationReport:
    claim: str
    status: str
    witness: Optional[dict] = None
    ms: float = 0.0
    detail: Optional[dict] = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"status must be pass or fail, got {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out = {"claim": self.claim, "status": self.status, "ms": round(self.ms, 3)}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["claim"], d["status"], d.get("witness"), d.get("ms", 0.0), d.get("detail"))


# -- permutation classes ---------------------------------------------------

@dataclass(frozen=True)
class PermClass:
    """A permutation class given by a basis (``av``) or by maximal elements (``contained``)."""

    kind: str
    perms: tuple[Perm, ...]

    def members(self, n: int) -> list[Perm]:
        if self.kind == "av":
            return enumerate_av(n, self.perms)
        return containment_class(self.perms, n)

    @property
    def label(self) -> str:
        if self.kind == "av":
            return f"Av({format_patterns(self.perms)})"
        return f"C({format_patterns(self.perms)})"


def av(*pats: Sequence[int]) -> PermClass:
    for t in pats:
        check_normalized(tuple(t), "pattern")
    return PermClass("av", tuple(sorted({tuple(p) for p in pats}, key=lambda t: (len(t), t))))


def contained_in(*witnesses: Sequence[int]) -> PermClass:
    for w in witnesses:
        check_normalized(tuple(w), "witness")
    return PermClass("contained", tuple(sorted({tuple(w) for w in witnesses})))


ClassLike = Union[PermClass, Iterable[Sequence[int]]]


def as_class(x: ClassLike) -> PermClass:
    return x if isinstance(x, PermClass) else av(*x)


def _timed(claim: str, run: Callable[[], tuple[Optional[dict], Optional[dict]]]) -> VerificationReport:
    start = time.perf_counter()
    witness, detail = run()
    ms = (time.perf_counter() - start) * 1000
    return VerificationReport(claim, PASS if witness is None else FAIL, witness, ms, detail)


def _counter_diff(left: Counter, right: Counter) -> list:
    keys = sorted(set(left) | set(right), key=repr)
    return [[_plain(k), left[k], right[k]] for k in keys if left[k] != right[k]]


def _plain(x):
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    return x


# -- cached per-permutation data --------------------------------------------

@lru_cache(maxsize=None)
def _type_counter(p: Perm) -> Counter:
    return Counter(h.type for h in enumerate_vhcs(p))


@lru_cache(maxsize=None)
def _skeleton_counter(p: Perm, family: str) -> Counter:
    return Counter(skeleton_code(t) for t in enumerate_postorder_preimages(p, family))


def _preimage_set(perms: Iterable[Perm]) -> list[Perm]:
    out: list[Perm] = []
    for p in perms:
        out.extend(preimages(p))
    return out


def preimage_sequence(cls: ClassLike, n_max: int, start: int = 1) -> list[int]:
    cls = as_class(cls)
    return [sum(fertility(p) for p in cls.members(n)) for n in range(start, n_max + 1)]


# -- equivalence checks ----------------------------------------------------

def check_fertility_wilf(A: ClassLike, B: ClassLike, n_max: int,
                         claim: Optional[str] = None) -> VerificationReport:
    A, B = as_class(A), as_class(B)
    claim = claim or f"fertility-wilf:{A.label}|{B.label}/n<={n_max}"

    def run():
        seq_a, seq_b = [], []
        for n in range(n_max + 1):
            fa = sum(fertility(p) for p in A.members(n))
            fb = sum(fertility(p) for p in B.members(n))
            seq_a.append(fa)
            seq_b.append(fb)
            if fa != fb:
                return {"n": n, "left": fa, "right": fb}, None
        return None, {"sequence": seq_a}

    return _timed(claim, run)


def check_strong_fertility_wilf(A: ClassLike, B: ClassLike, n_max: int,
                                claim: Optional[str] = None) -> VerificationReport:
    A, B = as_class(A), as_class(B)
    claim = claim or f"strong-fertility-wilf:{A.label}|{B.label}/n<={n_max}"

    def run():
        counts = []
        for n in range(n_max + 1):
            left, right = Counter(), Counter()
            for p in A.members(n):
                left.update(_type_counter(p))
            for p in B.members(n):
                right.update(_type_counter(p))
            counts.append(sum(left.values()))
            if left != right:
                return {"n": n, "left_vhcs": sum(left.values()), "right_vhcs": sum(right.values()),
                        "types": _counter_diff(left, right)}, None
        return None, {"vhc_counts": counts}

    return _timed(claim, run)


def check_postorder_wilf(A: ClassLike, B: ClassLike, n_max: int,
                         families: Sequence[str] = ("binary",),
                         claim: Optional[str] = None) -> VerificationReport:
    A, B = as_class(A), as_class(B)
    claim = claim or f"postorder-wilf[{'+'.join(families)}]:{A.label}|{B.label}/n<={n_max}"

    def surplus_tree(cls: PermClass, n: int, family: str, code: str):
        for p in cls.members(n):
            for t in enumerate_postorder_preimages(p, family):
                if skeleton_code(t) == code:
                    return {"tree": to_text(t), "postorder": format_perm(postorder(t), compact=True)}
        return None

    def run():
        for family in families:
            for n in range(1, n_max + 1):
                left, right = Counter(), Counter()
                for p in A.members(n):
                    left.update(_skeleton_counter(p, family))
                for p in B.members(n):
                    right.update(_skeleton_counter(p, family))
                if left != right:
                    diff = _counter_diff(left, right)
                    code, lc, rc = diff[0]
                    side = A if lc > rc else B
                    return {"family": family, "n": n, "skeletons": diff,
                            "side": "left" if side is A else "right",
                            "example": surplus_tree(side, n, family, code)}, None
        return None, None

    return _timed(claim, run)


def check_joint_distribution(A: ClassLike, B: ClassLike, stats: Sequence, n_max: int,
                             claim: Optional[str] = None) -> VerificationReport:
    A, B = as_class(A), as_class(B)
    names = ",".join(s if isinstance(s, str) else getattr(s, "__name__", "f") for s in stats)
    claim = claim or f"joint[{names}]:{A.label}|{B.label}/n<={n_max}"

    def run():
        for n in range(1, n_max + 1):
            left = joint_distribution(_preimage_set(A.members(n)), stats)
            right = joint_distribution(_preimage_set(B.members(n)), stats)
            if left != right:
                return {"n": n, "stats": list(left.stats),
                        "rows": _counter_diff(left.counts, right.counts)}, None
        return None, None

    return _timed(claim, run)


# -- statistic and configuration checks --------------------------------------

def _zeil_sets(p: Perm) -> dict:
    """sigma in s^-1(p) grouped by (zeil, des, peak)."""
    groups: dict = {}
    for sigma in preimages(p):
        groups.setdefault((zeil(sigma), des(sigma), peak(sigma)), set()).add(sigma)
    return groups


def _z(groups: dict, c: int, a: int, b: int, at_least: bool = False) -> set:
    out = set()
    for (cc, aa, bb), members in groups.items():
        if aa == a and bb == b and (cc >= c if at_least else cc == c):
            out |= members
    return out


def check_zeil_star_split(n_max: int = 6, literal: bool = False,
                 claim: str = "zeil-star-bijections") -> VerificationReport:
    """sigma -> sigma* splits Z_c^{a,b}(p) three ways onto sets for p*, 1 <= c <= tl(p) - 1.

    The second and third targets are restricted to permutations whose descent
    status at n-2 matches the source part; removing the last entry keeps that
    status. With ``literal=True`` the targets are the unrestricted fibers
    Z_{c-1}^{a-1,b-1}(p*) and Z_{c-1}^{a-1,b}(p*), which already fails at p = 123.
    """

    def run():
        checked = 0
        for n in range(3, n_max + 1):
            for p in all_perms(n):
                ell = tail_length(p)
                if ell < 2:
                    continue
                ps = drop_last_star(p)
                here, there = _zeil_sets(p), _zeil_sets(ps)

                def at_n2(s):
                    return s[n - 3] > s[n - 2]

                for c in range(1, ell):
                    for a in range(n):
                        for b in range(n):
                            z = _z(here, c, a, b)
                            peak_t, flat_t = _z(there, c - 1, a - 1, b - 1), _z(there, c - 1, a - 1, b)
                            if not literal:
                                peak_t = {t for t in peak_t if not at_n2(t)}
                                flat_t = {t for t in flat_t if at_n2(t)}
                            parts = [
                                ({s for s in z if s[n - 2] < s[n - 1]}, _z(there, c, a, b, at_least=True)),
                                ({s for s in z if s[n - 2] > s[n - 1] and not at_n2(s)}, peak_t),
                                ({s for s in z if s[n - 2] > s[n - 1] and at_n2(s)}, flat_t),
                            ]
                            for part, (src, dst) in enumerate(parts, start=1):
                                image = [drop_last_star(s) for s in src]
                                if len(set(image)) != len(image) or set(image) != dst:
                                    return {"p": format_perm(p, compact=True), "a": a, "b": b, "c": c,
                                            "part": part, "source": sorted(map(list, src)),
                                            "target": sorted(map(list, dst))}, None
                                checked += 1
        return None, {"checked": checked}

    return _timed(claim, run)


def zeil_star_counts(p: Sequence[int], a: int, b: int, c: int) -> tuple[int, int]:
    """(|Z_c^{a,b}(p)|, |Z_{>=c}^{a,b}(p*)| + |Z_{c-1}^{a-1,b-1}(p*)| + |Z_{c-1}^{a-1,b}(p*)|)."""
    p = tuple(p)
    here, there = _zeil_sets(p), _zeil_sets(drop_last_star(p))
    lhs = len(_z(here, c, a, b))
    rhs = (len(_z(there, c, a, b, at_least=True)) + len(_z(there, c - 1, a - 1, b - 1))
           + len(_z(there, c - 1, a - 1, b)))
    return lhs, rhs


def zeil_star_literal_counterexample(claim: str = "zeil-star-literal-counterexample") -> VerificationReport:
    """The unrestricted three-way split is not a bijection: p = 123, (a, b, c) = (1, 0, 2)."""

    def run():
        rep = check_zeil_star_split(3, literal=True)
        counts = zeil_star_counts((1, 2, 3), 1, 0, 2)
        w = rep.witness or {}
        if rep.passed or (w.get("p"), w.get("a"), w.get("b"), w.get("c")) != ("123", 1, 0, 2) or counts != (1, 2):
            return {"literal": rep.to_dict(), "counts": list(counts)}, None
        return None, {**w, "counts": list(counts)}

    return _timed(claim, run)


def check_zeil_rmax_tail(n_max: int = 7, claim: str = "zeil-rmax-tail") -> VerificationReport:
    def run():
        for n in range(1, n_max + 1):
            for sigma in all_perms(n):
                if zeil(sigma) != min(rmax(sigma), tail_length(sort_once(sigma))):
                    return {"sigma": list(sigma)}, None
        return None, None

    return _timed(claim, run)


def check_vhc_fertility(n_max: int = 7, poly_n_max: int = 6,
                        claim: str = "vhc-fertility") -> VerificationReport:
    """Catalan-product formula against brute force, and the (des, peak) polynomial."""

    def run():
        for n in range(n_max + 1):
            table = fertility_table(n)
            for p in all_perms(n):
                if fertility_via_vhc(p) != table.get(p, 0):
                    return {"p": list(p), "vhc": fertility_via_vhc(p), "brute": table.get(p, 0)}, None
        for n in range(1, poly_n_max + 1):
            for p in all_perms(n):
                poly = fertility_polynomial(p)
                brute = Counter((des(s) + 1, peak(s) + 1) for s in preimages(p, "brute"))
                if dict(poly.coeffs) != dict(brute):
                    return {"p": list(p), "polynomial": repr(poly), "brute": _plain(sorted(brute.items()))}, None
        return None, None

    return _timed(claim, run)


def check_vhc_injective(n_max: int = 6, claim: str = "vhc-composition-injective") -> VerificationReport:
    def run():
        for n in range(n_max + 1):
            for p in all_perms(n):
                comps = [h.composition for h in enumerate_vhcs(p)]
                if len(set(comps)) != len(comps):
                    return {"p": list(p), "compositions": _plain(comps)}, None
        return None, None

    return _timed(claim, run)


def eligible_split_hooks(p: Perm) -> list[Hook]:
    """Hooks from a descent top whose NE endpoint lies past every descent."""
    ds = sorted(descent_set(p))
    if not ds:
        return []
    return [Hook(d, j) for d in ds for j in range(ds[-1] + 1, len(p) + 1)
            if nothing_above(p, Hook(d, j))]


def check_hook_split(n_max: int = 6, claim: str = "hook-split-bijection") -> VerificationReport:
    def run():
        checked = 0
        for n in range(2, n_max + 1):
            for p in all_perms(n):
                ds = sorted(descent_set(p))
                for H in eligible_split_hooks(p):
                    i = ds.index(H.sw) + 1
                    u_base, s_base = split_parts(p, H)
                    with_h = [h for h in enumerate_vhcs(p) if H in h.hooks]
                    images = set()
                    for h in with_h:
                        u, s = split_by_hook(h, H)
                        c = h.composition
                        if u.composition != c[:i] or s.composition != c[i:]:
                            return {"p": list(p), "hook": [H.sw, H.ne], "composition": list(c)}, None
                        if join_by_hook(p, H, u, s) != h:
                            return {"p": list(p), "hook": [H.sw, H.ne], "join": "not inverse"}, None
                        images.add((u, s))
                    product = set(itertools.product(enumerate_vhcs(u_base), enumerate_vhcs(s_base)))
                    if len(images) != len(with_h) or images != product:
                        return {"p": list(p), "hook": [H.sw, H.ne], "left": len(with_h),
                                "right": len(product)}, None
                    checked += 1
        return None, {"checked": checked}

    return _timed(claim, run)


def check_sliding(n_max: int = 8, claim: str = "sliding-bijections") -> VerificationReport:
    def run():
        for n in range(n_max + 1):
            a231 = enumerate_av(n, [(2, 3, 1)])
            a132 = enumerate_av(n, [(1, 3, 2)])
            img = [swu(p) for p in a231]
            if sorted(img) != a132:
                return {"n": n, "map": "swu"}, None
            for p, q in zip(a231, img):
                if descent_set(p) != descent_set(q) or tail_length(p) != tail_length(q) or swu_inv(q) != p:
                    return {"n": n, "map": "swu", "p": list(p)}, None
            img = [swl(p) for p in a132]
            if sorted(img) != enumerate_av(n, [(3, 1, 2)]):
                return {"n": n, "map": "swl"}, None
            for p, q in zip(a132, img):
                if des(p) != des(q) or tail_length(p) != tail_length(q) or swl_inv(q) != p:
                    return {"n": n, "map": "swl", "p": list(p)}, None
                if q != rot_inv(swu(rot(p))):
                    return {"n": n, "map": "rot", "p": list(p)}, None
            both = enumerate_av(n, [(1, 3, 2), (2, 3, 1)])
            if sorted(swl(p) for p in both) != enumerate_av(n, [(2, 3, 1), (3, 1, 2)]):
                return {"n": n, "map": "swl on Av(132,231)"}, None
        return None, None

    return _timed(claim, run)


def check_theta(n_max: int = 7, claim: str = "theta-type-bijection") -> VerificationReport:
    def run():
        checked = 0
        for n in range(n_max + 1):
            for p in enumerate_av(n, [(1, 3, 2), (3, 4, 1, 2)]):
                mapping = theta_map(p)
                target = set(enumerate_vhcs(swl(p)))
                images = list(mapping.values())
                if len(set(images)) != len(images) or set(images) != target:
                    return {"p": list(p), "reason": "not a bijection"}, None
                for h, g in mapping.items():
                    if h.type != g.type:
                        return {"p": list(p), "hooks": h.to_dict(), "image": g.to_dict()}, None
                checked += 1
        return None, {"permutations": checked}

    return _timed(claim, run)


def check_motzkin(n_max: int = 6, claim: str = "motzkin-weights") -> VerificationReport:
    def run():
        for n in range(1, n_max + 1):
            for p in all_perms(n):
                w, d = weighted_count(p, "motzkin"), count_postorder_preimages(p, "motzkin")
                if w != d:
                    return {"p": list(p), "formula": w, "trees": d}, None
        return None, None

    return _timed(claim, run)


# -- pattern families --------------------------------------------------------

SWU_SEEDS: tuple[Perm, ...] = ((1,), (1, 2), (1, 4, 2, 3), (2, 1, 4, 3))
SWL_SEEDS: tuple[Perm, ...] = ((1,), (2, 1), (4, 2, 1, 3))


def family_A(m_max: int = 3) -> list[Perm]:
    """Patterns chi_m(seed) for the swu-compatible seeds, m <= m_max."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    return sorted({chi(m, s) for m in range(m_max + 1) for s in SWU_SEEDS}, key=lambda t: (len(t), t))


def family_B(m_max: int = 3) -> list[Perm]:
    """Patterns chi~_m(seed) for the swl-compatible seeds, m <= m_max."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    return sorted({chi_tilde(m, s) for m in range(m_max + 1) for s in SWL_SEEDS}, key=lambda t: (len(t), t))


def _subsets(pool: Sequence[Perm], size: int) -> Iterable[tuple[Perm, ...]]:
    for k in range(size + 1):
        yield from itertools.combinations(pool, k)


SKELETAL_STATS = ("desset", "lmax", "rmax", "tl", "zeil")
DES_PEAK_ZEIL = ("des", "peak", "zeil")


def family_A_core(m_max: int = 3) -> list[Perm]:
    """Members of :func:`family_A` that pass the class-image check through n = 9:
    chi_m(1) and chi_m(12) for every m, and the unwrapped seeds 1423 and 2143."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    pool = {chi(m, s) for m in range(m_max + 1) for s in SWU_SEEDS[:2]} | set(SWU_SEEDS[2:])
    return sorted(pool, key=lambda t: (len(t), t))


def _swu_pair_failure(extra: tuple[Perm, ...], n_max: int) -> Optional[dict]:
    A = av((2, 3, 1), *extra)
    B = av((1, 3, 2), *(swu(t) for t in extra))
    for n in range(n_max + 1):
        if not swu_class_image([(2, 3, 1), *extra], n):
            return {"patterns": format_patterns(extra), "n": n, "check": "class image"}
    for rep in (check_postorder_wilf(A, B, n_max, ("binary",)),
                check_joint_distribution(A, B, SKELETAL_STATS, n_max)):
        if not rep.passed:
            return {"patterns": format_patterns(extra), "check": rep.claim.split(":")[0], **rep.witness}
    return None


def swu_family_sweep(m_max: int = 3, size: int = 2, n_max: int = 7, core_only: bool = False,
                     claim: str = "swu-family") -> VerificationReport:
    """Av(231, S) vs Av(132, swu(S)): class image, binary skeletons, skeletal statistics.

    Every pattern set is checked; a failing report lists all failing sets.
    """

    def run():
        pool = family_A_core(m_max) if core_only else family_A(m_max)
        failures, checked = [], 0
        for extra in _subsets(pool, size):
            checked += 1
            bad = _swu_pair_failure(extra, n_max)
            if bad is not None:
                failures.append(bad)
        if failures:
            return {"failing_sets": len(failures), "checked_sets": checked,
                    "failing_patterns": sorted({f["patterns"] for f in failures}),
                    "first": failures[0]}, None
        return None, {"pattern_sets": checked}

    return _timed(claim, run)


def swu_skew_counterexample(claim: str = "swu-skew-wrap-counterexample") -> VerificationReport:
    """Wrapping 1423 as 1 - 1423 = 51423 breaks the class image: 312645 avoids 231 and
    51423, yet swu(312645) = 534612 contains swu(51423) = 53412."""

    def run():
        tau, pi = (5, 1, 4, 2, 3), (3, 1, 2, 6, 4, 5)
        facts = {
            "pi_avoids": not contains(pi, (2, 3, 1)) and not contains(pi, tau),
            "image": format_perm(swu(pi), compact=True),
            "image_contains": contains(swu(pi), swu(tau)),
            "class_image_n6": swu_class_image([(2, 3, 1), tau], 6),
            "fertility": check_fertility_wilf(av((2, 3, 1), tau), av((1, 3, 2), swu(tau)), 7).witness,
        }
        if not (facts["pi_avoids"] and facts["image_contains"] and not facts["class_image_n6"]):
            return facts, None
        return None, facts

    return _timed(claim, run)


def check_swu_hook_transport(n_max: int = 7, claim: str = "swu-hook-transport") -> VerificationReport:
    """Keeping hooks on the same positions is a composition-preserving bijection
    VHC(p) -> VHC(swu(p)) for every p avoiding 231."""

    def run():
        for n in range(n_max + 1):
            for p in enumerate_av(n, [(2, 3, 1)]):
                q = swu(p)
                moved = [swu_hooks(h) for h in enumerate_vhcs(p)]
                if set(moved) != set(enumerate_vhcs(q)) or len(set(moved)) != len(moved):
                    return {"p": list(p)}, None
                for h, g in zip(enumerate_vhcs(p), moved):
                    if h.composition != g.composition:
                        return {"p": list(p), "hooks": h.to_dict()}, None
        return None, None

    return _timed(claim, run)


def _swl_pairs(m_max: int, size: int):
    for extra in _subsets(family_B(m_max), size):
        yield extra, av((1, 3, 2), (3, 4, 1, 2), *extra), av((3, 1, 2), (1, 3, 4, 2), *(swl(t) for t in extra))


def swl_family_types(m_max: int = 3, size: int = 2, n_max: int = 7,
                     claim: str = "swl-family-types") -> VerificationReport:
    def run():
        checked = 0
        for extra, A, B in _swl_pairs(m_max, size):
            for n in range(n_max + 1):
                if not swl_class_image([(1, 3, 2), (3, 4, 1, 2), *extra], n):
                    return {"patterns": format_patterns(extra), "n": n, "check": "class image"}, None
            rep = check_strong_fertility_wilf(A, B, n_max)
            if not rep.passed:
                return {"patterns": format_patterns(extra), **rep.witness}, None
            checked += 1
        return None, {"pattern_sets": checked}

    return _timed(claim, run)


def swl_family_joint(m_max: int = 3, size: int = 2, n_max: int = 7,
                     claim: str = "swl-family-des-peak-zeil") -> VerificationReport:
    def run():
        checked = 0
        for extra, A, B in _swl_pairs(m_max, size):
            rep = check_joint_distribution(A, B, DES_PEAK_ZEIL, n_max)
            if not rep.passed:
                return {"patterns": format_patterns(extra), **rep.witness}, None
            checked += 1
        return None, {"pattern_sets": checked}

    return _timed(claim, run)


# -- separations and sequences -----------------------------------------------

CONTAINMENT_LEFT = contained_in((2, 4, 1, 3, 5))
CONTAINMENT_RIGHT = contained_in((3, 2, 4, 1, 5), (3, 1, 4, 2, 5), (2, 1, 4, 3, 5), (4, 2, 1, 3, 5))
CONTAINMENT_SEQUENCE = [1, 2, 6, 10, 4, 0, 0, 0, 0]


def containment_sequences(n_max: int = 9, claim: str = "containment-sequences") -> VerificationReport:
    def run():
        left = preimage_sequence(CONTAINMENT_LEFT, n_max)
        right = preimage_sequence(CONTAINMENT_RIGHT, n_max)
        expected = CONTAINMENT_SEQUENCE[:n_max] + [0] * max(0, n_max - len(CONTAINMENT_SEQUENCE))
        if left != expected or right != expected:
            return {"left": left, "right": right, "expected": expected}, None
        return None, {"sequence": left}

    return _timed(claim, run)


def strong_separation(claim: str = "strong-separation") -> VerificationReport:
    """Fertility Wilf equivalent classes whose VHC counts differ at n = 5 (1 vs 4)."""

    def run():
        rep = check_strong_fertility_wilf(CONTAINMENT_LEFT, CONTAINMENT_RIGHT, 9)
        w = rep.witness
        if rep.passed or (w["n"], w["left_vhcs"], w["right_vhcs"]) != (5, 1, 4):
            return {"expected": {"n": 5, "left_vhcs": 1, "right_vhcs": 4}, "got": w}, None
        return None, w

    return _timed(claim, run)


def binary_not_ternary(claim: str = "binary-not-ternary") -> VerificationReport:
    """Av(123) and Av(123, 3214) agree on binary trees but not on ternary trees."""

    def run():
        A, B = av((1, 2, 3)), av((1, 2, 3), (3, 2, 1, 4))
        binary = check_postorder_wilf(A, B, 5, ("binary",))
        if not binary.passed:
            return {"binary": binary.witness}, None
        ternary = check_postorder_wilf(A, B, 4, ("ternary",))
        w = ternary.witness
        if ternary.passed or w["n"] != 4 or w["example"]["postorder"] != "3214":
            return {"ternary": w}, None
        if count_postorder_preimages((3, 2, 1, 4), "binary") != 0:
            return {"binary_trees_on_3214": count_postorder_preimages((3, 2, 1, 4), "binary")}, None
        return None, {"ternary_witness": w["example"]}

    return _timed(claim, run)


def rmax_separation(claim: str = "rmax-not-equidistributed") -> VerificationReport:
    def run():
        rep = check_joint_distribution(av((1, 3, 2), (3, 4, 1, 2)), av((3, 1, 2), (1, 3, 4, 2)), ["rmax"], 4)
        if rep.passed or rep.witness["n"] != 4:
            return {"expected": "rmax differs at n=4", "got": rep.to_dict()}, None
        return None, rep.witness

    return _timed(claim, run)


def boolean_catalan_chain(n_max: int = 9, claim: str = "boolean-catalan") -> VerificationReport:
    def run():
        oracle = boolean_catalan_sequence(n_max)
        seqs = {}
        for pats in ([(1, 3, 2), (3, 1, 2)], [(2, 3, 1), (3, 1, 2)], [(1, 3, 2), (2, 3, 1)]):
            seqs[format_patterns(pats)] = preimage_sequence(av(*pats), n_max)
        if any(s != oracle for s in seqs.values()):
            return {"oracle": oracle, "sequences": seqs}, None
        return None, {"sequence": oracle}

    return _timed(claim, run)


# -- claim registry ----------------------------------------------------------

def _pair(a, b, kind, n):
    def run(n_max=None, m_max=3):
        top = n if n_max is None else n_max
        if kind == "fertility":
            return check_fertility_wilf(av(*a), av(*b), top, claim=f"fertility-wilf:{format_patterns(a)}|{format_patterns(b)}")
        return check_joint_distribution(av(*a), av(*b), DES_PEAK_ZEIL, top,
                                        claim=f"des-peak-zeil:{format_patterns(a)}|{format_patterns(b)}")
    return run


def _with_n(fn, default):
    def run(n_max=None, m_max=3):
        return fn(default if n_max is None else n_max)
    return run


def _sweep(fn):
    def run(n_max=None, m_max=3):
        return fn(m_max=m_max, n_max=7 if n_max is None else n_max)
    return run


def _fixed(fn):
    def run(n_max=None, m_max=3):
        return fn()
    return run


def _skeletal(n_max=None, m_max=3):
    top = 7 if n_max is None else n_max
    return check_joint_distribution(av((2, 3, 1)), av((1, 3, 2)), ["desset", "lmax", "rmax", "zeil"], top,
                                    claim="skeletal-231-132")


def _core_sweep(m_max=3, n_max=7):
    return swu_family_sweep(m_max=m_max, n_max=n_max, core_only=True, claim="swu-family-core")


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    run: Callable[..., VerificationReport] = field(compare=False)


_C231, _C132, _C312, _C321 = (2, 3, 1), (1, 3, 2), (3, 1, 2), (3, 2, 1)

CLAIMS: dict[str, Claim] = {c.id: c for c in [
    Claim("boolean-catalan", "three preimage sequences equal the Boolean-Catalan series", _with_n(boolean_catalan_chain, 9)),
    Claim("fertility-wilf:231|132", "|s^-1(Av_n(231))| = |s^-1(Av_n(132))|", _pair([_C231], [_C132], "fertility", 8)),
    Claim("fertility-wilf:132,312|231,312", "fertility Wilf equivalence", _pair([_C132, _C312], [_C231, _C312], "fertility", 8)),
    Claim("fertility-wilf:132,231|231,312", "fertility Wilf equivalence", _pair([_C132, _C231], [_C231, _C312], "fertility", 8)),
    Claim("fertility-wilf:132,312,321|132,231,321", "fertility Wilf equivalence",
          _pair([_C132, _C312, _C321], [_C132, _C231, _C321], "fertility", 9)),
    Claim("des-peak-zeil:132,231|231,312", "joint des/peak/zeil on preimages", _pair([_C132, _C231], [_C231, _C312], "joint", 8)),
    Claim("containment-sequences", "both containment classes give 1,2,6,10,4,0,0,0,0", _with_n(containment_sequences, 9)),
    Claim("strong-separation", "containment classes have 1 vs 4 VHCs at n=5", _fixed(strong_separation)),
    Claim("binary-not-ternary", "Av(123) vs Av(123,3214): binary equal, ternary differ", _fixed(binary_not_ternary)),
    Claim("rmax-not-equidistributed", "rmax differs on Av(132,3412) vs Av(312,1342) preimages", _fixed(rmax_separation)),
    Claim("vhc-composition-injective", "each valid composition has one VHC", _with_n(check_vhc_injective, 6)),
    Claim("vhc-fertility", "Catalan-product and (des,peak) formulas match brute force", _with_n(check_vhc_fertility, 7)),
    Claim("hook-split-bijection", "splitting along a hook is a bijection", _with_n(check_hook_split, 6)),
    Claim("zeil-rmax-tail", "zeil = min(rmax, tl o s)", _with_n(check_zeil_rmax_tail, 7)),
    Claim("zeil-star-bijections", "sigma -> sigma* bijections on zeil/des/peak fibers, n-2 descent matched",
          _with_n(check_zeil_star_split, 6)),
    Claim("zeil-star-literal-counterexample", "unrestricted sigma -> sigma* split fails at p = 123",
          _fixed(zeil_star_literal_counterexample)),
    Claim("sliding-bijections", "swu and swl bijections and preserved statistics", _with_n(check_sliding, 8)),
    Claim("theta-type-bijection", "theta is a type-preserving bijection", _with_n(check_theta, 7)),
    Claim("swu-family", "swu family: class images, binary skeletons, skeletal statistics", _sweep(swu_family_sweep)),
    Claim("swu-family-core", "swu family without wrapped 1423/2143: same checks", _sweep(_core_sweep)),
    Claim("swu-skew-wrap-counterexample", "51423 breaks the swu class image at n = 6", _fixed(swu_skew_counterexample)),
    Claim("swu-hook-transport", "hooks kept in place give a composition-preserving bijection",
          _with_n(check_swu_hook_transport, 7)),
    Claim("swl-family-types", "swl family: class images and VHC type multisets", _sweep(swl_family_types)),
    Claim("swl-family-des-peak-zeil", "swl family: joint des/peak/zeil", _sweep(swl_family_joint)),
    Claim("skeletal-231-132", "desset/lmax/rmax/zeil on s^-1(Av(231)) vs s^-1(Av(132))", _skeletal),
    Claim("motzkin-weights", "Motzkin-weighted VHC sum counts Motzkin trees", _with_n(check_motzkin, 6)),
]}


def run_claim(claim_id: str, n_max: Optional[int] = None, m_max: int = 3) -> VerificationReport:
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim {claim_id!r}") from None
    report = claim.run(n_max=n_max, m_max=m_max)
    report.claim = claim_id
    return report


# -- exploratory search ------------------------------------------------------

def search_postorder_not_strong(pattern_length: int = 3, n_max: int = 6) -> list[dict]:
    """Pairs of single-pattern classes that agree on binary skeletons up to n_max but
    not on VHC types. Exploratory only; an empty result settles nothing."""
    found = []
    pats = list(all_perms(pattern_length))
    for a, b in itertools.combinations(pats, 2):
        if not check_postorder_wilf(av(a), av(b), n_max).passed:
            continue
        strong = check_strong_fertility_wilf(av(a), av(b), n_max)
        if not strong.passed:
            found.append({"left": format_perm(a, compact=True), "right": format_perm(b, compact=True),
                          "witness": strong.witness})
    return found
