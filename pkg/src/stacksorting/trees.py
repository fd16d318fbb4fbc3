"""Decreasing plane trees, in-order and postorder readings, and tree counts.

A tree family fixes how children are attached. Slotted families (binary,
ternary, k-ary) give every vertex exactly k ordered slots, each empty or
holding a subtree. Slotless families (motzkin, general) list only the
nonempty children; motzkin allows at most two per vertex.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Optional, Sequence

from .perm import Perm

EMPTY_SLOT = "_"


@dataclass(frozen=True)
class Family:
    name: str
    slots: Optional[int]         # fixed slot count, None for slotless families
    max_children: Optional[int]  # None means unbounded

    @property
    def slotted(self) -> bool:
        return self.slots is not None


BINARY = Family("binary", 2, 2)
TERNARY = Family("ternary", 3, 3)
MOTZKIN = Family("motzkin", None, 2)
GENERAL = Family("general", None, None)

_KARY = re.compile(r"^(?:k-ary\((\d+)\)|(\d+)-ary)$")


def parse_family(tag: "str | Family") -> Family:
    if isinstance(tag, Family):
        return tag
    tag = tag.strip().lower()
    named = {"binary": BINARY, "ternary": TERNARY, "motzkin": MOTZKIN,
             "general": GENERAL, "slotless-general": GENERAL}
    if tag in named:
        return named[tag]
    m = _KARY.match(tag)
    if m:
        k = int(m.group(1) or m.group(2))
        if k < 1:
            raise ValueError("k-ary families need k >= 1")
        if k == 2:
            return BINARY
        if k == 3:
            return TERNARY
        return Family(f"{k}-ary", k, k)
    raise ValueError(f"unknown tree family {tag!r}")


@dataclass(frozen=True)
class DecreasingPlaneTree:
    label: int
    children: tuple  # of DecreasingPlaneTree, or None for an empty slot
    family: str = "binary"

    def __post_init__(self):
        validate_tree(self)

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children if c is not None)

    def labels(self) -> set[int]:
        out = {self.label}
        for c in self.children:
            if c is not None:
                out |= c.labels()
        return out

    def skeleton(self) -> str:
        return skeleton_code(self)

    def __str__(self) -> str:
        return to_text(self)


def validate_tree(t: DecreasingPlaneTree) -> None:
    fam = parse_family(t.family)
    kids = t.children
    if fam.slotted:
        if len(kids) != fam.slots:
            raise ValueError(f"{fam.name} vertex {t.label} must have {fam.slots} slots")
    else:
        if any(c is None for c in kids):
            raise ValueError(f"{fam.name} trees have no empty slots")
        if fam.max_children is not None and len(kids) > fam.max_children:
            raise ValueError(f"{fam.name} vertex {t.label} has too many children")
    for c in kids:
        if c is None:
            continue
        if c.family != t.family:
            raise ValueError("mixed tree families")
        if c.label >= t.label:
            raise ValueError(f"child label {c.label} is not below parent label {t.label}")


def node(label: int, *children, family: str = "binary") -> DecreasingPlaneTree:
    return DecreasingPlaneTree(label, tuple(children), family)


# -- traversals ------------------------------------------------------------

def in_order(t: Optional[DecreasingPlaneTree]) -> Perm:
    if t is None:
        return ()
    if parse_family(t.family) is not BINARY:
        raise ValueError("in-order reading is only defined on binary trees")
    left, right = t.children
    return in_order(left) + (t.label,) + in_order(right)


def in_order_inverse(p: Sequence[int]) -> Optional[DecreasingPlaneTree]:
    """The unique decreasing binary plane tree with in-order reading ``p``."""
    p = tuple(p)
    if len(set(p)) != len(p):
        raise ValueError("labels must be distinct")
    if not p:
        return None
    m = p.index(max(p))
    return DecreasingPlaneTree(p[m], (in_order_inverse(p[:m]), in_order_inverse(p[m + 1:])), "binary")


def postorder(t: Optional[DecreasingPlaneTree]) -> Perm:
    if t is None:
        return ()
    out: tuple = ()
    for c in t.children:
        out += postorder(c)
    return out + (t.label,)


def skeleton_code(t: Optional[DecreasingPlaneTree]) -> str:
    if t is None:
        return EMPTY_SLOT
    return "(" + "".join(skeleton_code(c) for c in t.children) + ")"


def skeleton_multiset(trees: Iterable[DecreasingPlaneTree]) -> Counter:
    return Counter(skeleton_code(t) for t in trees)


# -- text form -------------------------------------------------------------

def to_text(t: Optional[DecreasingPlaneTree]) -> str:
    """Nested-parenthesis form, e.g. ``3(_,1(_,_))`` or ``3(2,1)``."""
    if t is None:
        return EMPTY_SLOT
    if not t.children:
        return str(t.label) if not parse_family(t.family).slotted else f"{t.label}()"
    return f"{t.label}(" + ",".join(to_text(c) for c in t.children) + ")"


def parse_tree(text: str, family: str = "binary") -> Optional[DecreasingPlaneTree]:
    text = text.replace(" ", "")
    pos = 0

    def parse() -> Optional[DecreasingPlaneTree]:
        nonlocal pos
        if text.startswith(EMPTY_SLOT, pos):
            pos += 1
            return None
        m = re.compile(r"\d+").match(text, pos)
        if not m:
            raise ValueError(f"malformed tree text at offset {pos}: {text!r}")
        pos = m.end()
        kids = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            if text[pos] != ")":
                kids.append(parse())
                while text[pos] == ",":
                    pos += 1
                    kids.append(parse())
            if text[pos] != ")":
                raise ValueError(f"expected ')' at offset {pos}: {text!r}")
            pos += 1
        return DecreasingPlaneTree(int(m.group()), tuple(kids), family)

    tree = parse()
    if pos != len(text):
        raise ValueError(f"trailing text in tree: {text!r}")
    return tree


# -- postorder preimages ---------------------------------------------------

def _block_splits(seq: Perm, max_blocks: Optional[int]) -> Iterable[list[Perm]]:
    # Cut seq into consecutive nonempty blocks, each ending in its own maximum.
    n = len(seq)

    def rec(start: int, acc: list[Perm]):
        if start == n:
            yield list(acc)
            return
        if max_blocks is not None and len(acc) == max_blocks:
            return
        best = 0
        for end in range(start, n):
            best = max(best, seq[end])
            if seq[end] == best:
                acc.append(seq[start:end + 1])
                yield from rec(end + 1, acc)
                acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _postorder_trees(seq: Perm, fam: Family) -> tuple[DecreasingPlaneTree, ...]:
    root = seq[-1]
    if root != max(seq):
        return ()
    out = []
    for blocks in _block_splits(seq[:-1], fam.max_children):
        options = [_postorder_trees(b, fam) for b in blocks]
        if any(not o for o in options):
            continue
        for subtrees in itertools.product(*options):
            if fam.slotted:
                for where in itertools.combinations(range(fam.slots), len(subtrees)):
                    slots = [None] * fam.slots
                    for w, sub in zip(where, subtrees):
                        slots[w] = sub
                    out.append(DecreasingPlaneTree(root, tuple(slots), fam.name))
            else:
                out.append(DecreasingPlaneTree(root, tuple(subtrees), fam.name))
    return tuple(out)


@lru_cache(maxsize=None)
def _count_postorder_trees(seq: Perm, fam: Family) -> int:
    if seq[-1] != max(seq):
        return 0
    total = 0
    for blocks in _block_splits(seq[:-1], fam.max_children):
        ways = 1
        for b in blocks:
            ways *= _count_postorder_trees(b, fam)
            if not ways:
                break
        if fam.slotted:
            ways *= comb(fam.slots, len(blocks))
        total += ways
    return total


def enumerate_postorder_preimages(p: Sequence[int], family: "str | Family" = "binary") -> list[DecreasingPlaneTree]:
    """All decreasing trees of ``family`` on the entries of ``p`` with postorder ``p``.

    The empty permutation has no trees.
    """
    fam = parse_family(family)
    p = tuple(p)
    if not p:
        return []
    return list(_postorder_trees(p, fam))


def count_postorder_preimages(p: Sequence[int], family: "str | Family" = "binary") -> int:
    fam = parse_family(family)
    p = tuple(p)
    if not p:
        return 0
    return _count_postorder_trees(p, fam)


def enumerate_shapes(r: int, family: "str | Family") -> list[str]:
    """Skeleton codes of all unlabeled trees of ``family`` with ``r`` vertices."""
    fam = parse_family(family)

    @lru_cache(maxsize=None)
    def shapes(size: int) -> tuple[str, ...]:
        out = []
        kids_max = fam.max_children if fam.max_children is not None else size - 1
        for k in range(0, min(kids_max, size - 1) + 1):
            for sizes in _compositions(size - 1, k):
                for parts in itertools.product(*(shapes(s) for s in sizes)):
                    if fam.slotted:
                        for where in itertools.combinations(range(fam.slots), k):
                            slots = [EMPTY_SLOT] * fam.slots
                            for w, part in zip(where, parts):
                                slots[w] = part
                            out.append("(" + "".join(slots) + ")")
                    else:
                        out.append("(" + "".join(parts) + ")")
        return tuple(out)

    return list(shapes(r)) if r > 0 else []


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- counting sequences ----------------------------------------------------

def catalan(r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    return comb(2 * r, r) // (r + 1)


@lru_cache(maxsize=None)
def motzkin(r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r < 2:
        return 1
    return motzkin(r - 1) + sum(motzkin(k) * motzkin(r - 2 - k) for k in range(r - 1))


class LPolynomial:
    """Bivariate polynomial with integer coefficients, keyed by (x-exponent, y-exponent)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict] = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls) -> "LPolynomial":
        return cls({(0, 0): 1})

    def __add__(self, other: "LPolynomial") -> "LPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LPolynomial(out)

    def __mul__(self, other: "LPolynomial") -> "LPolynomial":
        out: dict = {}
        for (a, b), u in self.coeffs.items():
            for (c, d), v in other.coeffs.items():
                out[(a + c, b + d)] = out.get((a + c, b + d), 0) + u * v
        return LPolynomial(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def grid(self) -> list[list[int]]:
        """c[i][j] for exponents 0..max in each variable."""
        if not self.coeffs:
            return []
        mi = max(i for i, _ in self.coeffs)
        mj = max(j for _, j in self.coeffs)
        return [[self.coefficient(i, j) for j in range(mj + 1)] for i in range(mi + 1)]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), c in sorted(self.coeffs.items()):
            mono = "*".join(s for s in (f"x^{i}" if i > 1 else "x" if i else "",
                                        f"y^{j}" if j > 1 else "y" if j else "") if s)
            terms.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(terms)


@lru_cache(maxsize=None)
def _right_edge_leaf_counts(r: int) -> tuple[tuple[tuple[int, int], int], ...]:
    # Binary plane trees on r vertices counted by (right edges, leaves).
    if r == 0:
        return (((0, 0), 1),)
    acc: dict = {}
    for left in range(r):
        right = r - 1 - left
        extra_edge = 1 if right else 0
        extra_leaf = 1 if not left and not right else 0
        for (e1, f1), c1 in _right_edge_leaf_counts(left):
            for (e2, f2), c2 in _right_edge_leaf_counts(right):
                key = (e1 + e2 + extra_edge, f1 + f2 + extra_leaf)
                acc[key] = acc.get(key, 0) + c1 * c2
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def l_polynomial(r: int) -> LPolynomial:
    """L_r(x, y): x^i y^j counts binary plane trees with r vertices, i-1 right edges, j leaves."""
    if r < 1:
        raise ValueError("l_polynomial needs r >= 1")
    return LPolynomial({(e + 1, f): c for (e, f), c in _right_edge_leaf_counts(r)})
