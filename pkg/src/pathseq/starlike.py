"""Starlike trees: spec, realization, closed-form censuses and slopes.

A starlike tree has exactly one vertex of degree three or more (the root);
it is determined by its multiset of branch lengths. Every path of order
h >= 1 falls into one of a handful of shapes (endpoints at the root, at a
leaf, or inside a branch; through the root or within a single branch), and
each shape's degree sequence and multiplicity have closed forms in the
branch-length counts. Censuses and invariants therefore need no enumeration.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from math import fsum
from typing import Iterator, Mapping

from .errors import FormatError, InvalidSpecError
from .graph import Census, Graph, build_graph, canonical_class
from .invariants import InvariantFunction


@dataclass(frozen=True)
class StarlikeSpec:
    """Branch-length multiset of a starlike tree.

    branches holds (length, count) pairs, strictly ascending in length with
    positive counts. The root degree is the total branch count and must be
    at least three.
    """

    branches: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 0
        for length, count in self.branches:
            if length <= prev:
                raise InvalidSpecError(
                    "branch lengths must be distinct and ascending"
                )
            if count < 1:
                raise InvalidSpecError(f"branch count for length {length} must be >= 1")
            prev = length
        if self.root_degree < 3:
            raise InvalidSpecError(
                f"a starlike tree needs at least 3 branches, got {self.root_degree}"
            )

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "StarlikeSpec":
        """Build from a length -> count mapping; zero counts are dropped."""
        items = []
        for length, count in sorted(counts.items()):
            if count == 0:
                continue
            if not isinstance(length, int) or length < 1:
                raise InvalidSpecError(f"branch length {length!r} must be a positive integer")
            if not isinstance(count, int) or count < 0:
                raise InvalidSpecError(f"branch count {count!r} must be a non-negative integer")
            items.append((length, count))
        return cls(tuple(items))

    @cached_property
    def branch_counts(self) -> dict[int, int]:
        return dict(self.branches)

    def count(self, length: int) -> int:
        return self.branch_counts.get(length, 0)

    @property
    def root_degree(self) -> int:
        return sum(c for _, c in self.branches)

    @property
    def max_branch_length(self) -> int:
        return self.branches[-1][0]

    @property
    def vertex_count(self) -> int:
        return 1 + sum(l * c for l, c in self.branches)

    @property
    def longest_path_length(self) -> int:
        """Longest path: the two longest branches joined at the root."""
        longest, count = self.branches[-1]
        if count >= 2:
            return 2 * longest
        return longest + self.branches[-2][0]

    def to_dict(self) -> dict:
        return {
            "branches": [{"length": l, "count": c} for l, c in self.branches]
        }


def realize_starlike(spec: StarlikeSpec) -> Graph:
    """Build the tree: root is vertex 0, branches attached in ascending length."""
    edges = []
    nxt = 1
    for length, count in spec.branches:
        for _ in range(count):
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return build_graph(spec.vertex_count, edges)


def _census_terms(
    h: int, m: int, L: Mapping[int, int], n: int, root_degree: int
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (degree sequence, multiplicity) for every order-h path shape.

    m is the number of branches, L their length counts, n the tree's vertex
    count, root_degree the symbol written for the root (exceeds m when the
    tree hangs off a clique). Multiplicities are polynomial in the counts and
    may be negative when (n, m, L) is not realizable; callers that hold a
    valid spec should assert them non-negative.
    """
    if h < 1:
        raise ValueError("census terms are defined for h >= 1")
    R = root_degree

    def S(k: int) -> int:
        # number of branches of length <= k
        return sum(c for l, c in L.items() if l <= k)

    # Root endpoint: down one branch, ending at its leaf (branch length h
    # exactly) or strictly inside a longer branch.
    yield (R,) + (2,) * (h - 1) + (1,), L.get(h, 0)
    yield (R,) + (2,) * h, m - S(h)

    # Inside a single branch, root not visited: either strictly interior or
    # ending at the branch leaf. Interior segments: each branch of length
    # l > h contributes l - h starting offsets minus the one leaf-ended one.
    interior = (n - 1) - sum(l * c for l, c in L.items() if l <= h) - (h + 1) * (m - S(h))
    yield (2,) * (h + 1), interior
    yield (1,) + (2,) * h, m - S(h)

    # Through the root, one leaf endpoint at distance a+1, the other end
    # inside a second branch. The second branch needs length >= h-a; when the
    # leaf branch itself is that long it must be excluded.
    for a in range(0, h - 1):
        avail = m - S(h - a - 1)
        if a >= h // 2:
            avail -= 1
        yield (1,) + (2,) * a + (R,) + (2,) * (h - 1 - a), L.get(a + 1, 0) * avail

    # Through the root, both endpoints leaves: branch lengths a+1 and h-a-1.
    for a in range(0, h // 2):
        la, lb = a + 1, h - a - 1
        if la == lb:
            c = L.get(la, 0)
            count = c * (c - 1) // 2
        else:
            count = L.get(la, 0) * L.get(lb, 0)
        yield (1,) + (2,) * a + (R,) + (2,) * (h - 2 - a) + (1,), count

    # Through the root, both endpoints strictly inside branches of lengths
    # > a and > h-a. Product of consecutive integers, so the halved midpoint
    # case stays integral.
    for a in range(1, h // 2 + 1):
        if a == h - a:
            count = (m - S(a)) * (m - 1 - S(a)) // 2
        else:
            count = (m - S(h - a)) * (m - 1 - S(a))
        yield (2,) * a + (R,) + (2,) * (h - a), count


def merge_terms(
    terms: Iterator[tuple[tuple[int, ...], int]], order: int
) -> Census:
    """Canonicalize, merge and validate a stream of class terms."""
    merged: dict[tuple[int, ...], int] = defaultdict(int)
    for seq, count in terms:
        if count == 0:
            continue
        if count < 0:
            raise AssertionError(
                f"negative multiplicity {count} for class {seq}; census formula inconsistency"
            )
        merged[canonical_class(seq)] += count
    return Census(order=order, entries=dict(merged))


def starlike_census(spec: StarlikeSpec, order: int) -> Census:
    """Closed-form census for order >= 2.

    For orders 0 and 1 use path_census on realize_starlike; the closed form
    starts where paths can straddle the root with room on both sides.
    """
    if order < 2:
        raise ValueError("closed-form census requires order >= 2")
    m = spec.root_degree
    return merge_terms(
        _census_terms(order, m, spec.branch_counts, spec.vertex_count, m), order
    )


def _formal_invariant(
    n: int, m: int, L: Mapping[int, int], h: int, f: InvariantFunction
) -> float:
    """Invariant of the (possibly unrealizable) parameter point (n, m, L).

    The order-h invariant is a polynomial in (n, m, L_1..L_h); reconstruction
    evaluates it at points with missing branches, where some multiplicities
    go negative. No validation on purpose.
    """
    if h == 0:
        return fsum([f((m,)), m * f((1,)), (n - m - 1) * f((2,))])
    return fsum(
        count * f(seq)
        for seq, count in _census_terms(h, m, L, n, m)
        if count != 0
    )


def starlike_invariant(spec: StarlikeSpec, order: int, f: InvariantFunction) -> float:
    """Order-h invariant of the starlike tree, without enumeration."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    n, m = spec.vertex_count, spec.root_degree
    if order == 0:
        return fsum([f((m,)), m * f((1,)), (n - m - 1) * f((2,))])
    if order == 1:
        L1 = spec.count(1)
        return fsum(
            [
                L1 * f((m, 1)),
                (m - L1) * f((m, 2)),
                (m - L1) * f((1, 2)),
                (n - 1 - 2 * m + L1) * f((2, 2)),
            ]
        )
    census = starlike_census(spec, order)
    return fsum(count * f(seq) for seq, count in census.entries.items())


def starlike_profile(
    spec: StarlikeSpec, f: InvariantFunction, max_order: int
) -> list[float]:
    """Closed-form invariant values for orders 0..max_order."""
    return [starlike_invariant(spec, h, f) for h in range(max_order + 1)]


def mu_coefficient(f: InvariantFunction, h: int, m: int) -> float:
    """Slope of the order-h invariant in the count of length-h branches.

    Adding one branch of length h (holding n, m and the shorter counts
    fixed) changes the invariant by exactly this amount: one more root-leaf
    class, one fewer of each root-interior and leaf-interior class, plus one
    net interior segment.
    """
    if h < 1:
        raise ValueError(f"slope is defined for h >= 1, got {h}")
    if m < 3:
        raise ValueError(f"root degree must be >= 3, got {m}")
    return (
        f((m,) + (2,) * (h - 1) + (1,))
        - f((m,) + (2,) * h)
        + f((2,) * (h + 1))
        - f((1,) + (2,) * h)
    )


def tail_coefficients(
    f: InvariantFunction, h: int, m: int, count_len1: int, count_len2: int
) -> tuple[float, float, float]:
    """Coefficients of the three deepest branch counts in the order-h invariant.

    Returns (c_{h-2}, c_{h-1}, c_h): the change in the invariant when one
    branch of length h-2, h-1 or h is added while n, m and all other counts
    up to h stay fixed. Requires h >= 5 so the coefficients depend only on
    the counts of lengths 1 and 2 (count_len1, count_len2).
    """
    if h < 5:
        raise ValueError(f"tail coefficients are exposed for h >= 5, got {h}")
    if m < 3:
        raise ValueError(f"root degree must be >= 3, got {m}")
    L1, L2 = count_len1, count_len2

    def leaf_cross(a: int) -> tuple[int, ...]:
        # leaf endpoint at distance a+1, other end inside a branch
        return (1,) + (2,) * a + (m,) + (2,) * (h - 1 - a)

    def leaf_leaf(a: int) -> tuple[int, ...]:
        return (1,) + (2,) * a + (m,) + (2,) * (h - 2 - a) + (1,)

    def inner_cross(a: int) -> tuple[int, ...]:
        return (2,) * a + (m,) + (2,) * (h - a)

    root_interior = f((m,) + (2,) * h)
    interior = f((2,) * (h + 1))
    leaf_interior = f((1,) + (2,) * h)

    c_h = (
        f((m,) + (2,) * (h - 1) + (1,))
        - root_interior
        + interior
        - leaf_interior
    )
    c_h1 = (
        2 * interior
        - root_interior
        - leaf_interior
        + L1 * (f(leaf_leaf(0)) - f(leaf_cross(0)) + f(inner_cross(1)) - f(leaf_cross(h - 2)))
        + (m - 1) * (f(leaf_cross(h - 2)) - f(inner_cross(1)))
    )
    c_h2 = (
        3 * interior
        - root_interior
        - leaf_interior
        + L1 * (f(inner_cross(1)) - f(leaf_cross(0)) + f(inner_cross(2)) - f(leaf_cross(h - 3)))
        + L2 * (f(leaf_leaf(1)) - f(leaf_cross(1)) + f(inner_cross(2)) - f(leaf_cross(h - 3)))
        + (m - 1) * (f(leaf_cross(h - 3)) - f(inner_cross(1)) - f(inner_cross(2)))
    )
    return (c_h2, c_h1, c_h)


def parse_starlike_spec(doc: object) -> StarlikeSpec:
    """Parse the JSON spec document {"branches": [{"length","count"}, ...]}."""
    if not isinstance(doc, dict) or "branches" not in doc:
        raise FormatError("starlike spec must be an object with a 'branches' list")
    entries = doc["branches"]
    if not isinstance(entries, list) or not entries:
        raise FormatError("'branches' must be a non-empty list")
    counts: dict[int, int] = {}
    for entry in entries:
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("length"), int)
            or not isinstance(entry.get("count"), int)
        ):
            raise FormatError(
                "each branch entry must be an object with integer 'length' and 'count'"
            )
        length = entry["length"]
        if length in counts:
            raise FormatError(f"branch length {length} listed more than once")
        counts[length] = entry["count"]
    return StarlikeSpec.from_counts(counts)


def load_starlike_spec(path: str) -> StarlikeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from None
    return parse_starlike_spec(doc)
