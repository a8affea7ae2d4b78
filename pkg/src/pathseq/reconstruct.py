"""Rebuilding branch specs from invariant profiles, and telling specs apart.

When an index function satisfies two inequalities (checked here over a
finite scan domain), the profile of invariant values determines a starlike
or clique-coalesced tree inside its family: the order-0 value pins the root
degree by integer scan, and each further order pins one branch count, since
the order-h invariant is affine in the count of length-h branches with a
nonzero slope. A rebuilt spec is only returned after its own closed-form
profile reproduces the input within tolerance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    AmbiguousRootError,
    BudgetExceededError,
    BudgetMismatchError,
    FamilyMismatchError,
    NoCandidateRootError,
    NonIntegerBranchCountError,
    ProfileMismatchError,
    SizeMismatchError,
)
from .generalized import GenStarlikeSpec, generalized_profile
from .generalized import _formal_invariant as _coalesced_point_invariant
from .invariants import InvariantFunction
from .starlike import StarlikeSpec, mu_coefficient, starlike_profile
from .starlike import _formal_invariant as _star_point_invariant

DEFAULT_TOL = 1e-9
BRANCH_RESIDUAL_TOL = 1e-6


def _close(a: float, b: float, tol: float) -> bool:
    """Hybrid comparison: absolute near zero, relative for large values."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of scanning one family's qualification inequalities."""

    family: str
    x_max: int
    t_max: int
    tolerance: float
    condition_a: bool
    condition_b: bool
    counterexample_a: tuple[int, int] | None
    counterexample_b: tuple[int, int] | None
    min_margin_a: float
    min_margin_b: float

    @property
    def passed(self) -> bool:
        return self.condition_a and self.condition_b

    def to_dict(self) -> dict:
        counterexamples = []
        if self.counterexample_a is not None:
            x, y = self.counterexample_a
            counterexamples.append({"condition": "a", "x": x, "y": y})
        if self.counterexample_b is not None:
            t, x = self.counterexample_b
            counterexamples.append({"condition": "b", "t": t, "x": x})
        return {
            "family": self.family,
            "condition_a": "pass" if self.condition_a else "fail",
            "condition_b": "pass" if self.condition_b else "fail",
            "counterexamples": counterexamples,
            "domain": {"x_max": self.x_max, "t_max": self.t_max},
            "tolerance": self.tolerance,
            "margins": {"a": self.min_margin_a, "b": self.min_margin_b},
        }


def _scan_leaf_swap(
    f: InvariantFunction, x_max: int, t_max: int, tol: float
) -> tuple[bool, tuple[int, int] | None, float]:
    """Shared condition: turning a deep leaf into an interior vertex must
    move the invariant differently at root degree x than at degree 2."""
    ok, witness, min_margin = True, None, float("inf")
    for t in range(t_max + 1):
        tail_leaf = (2,) * t + (1,)
        tail_inner = (2,) * (t + 1)
        base = f((2,) + tail_leaf) - f((2,) + tail_inner)
        for x in range(3, x_max + 1):
            g = f((x,) + tail_leaf) - f((x,) + tail_inner)
            margin = abs(g - base)
            if margin < min_margin:
                min_margin = margin
            if margin <= tol and ok:
                ok, witness = False, (t, x)
    return ok, witness, min_margin


def check_starlike_conditions(
    f: InvariantFunction, x_max: int = 64, t_max: int = 32, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Scan the inequalities under which profiles determine starlike specs.

    (a) the divided difference of f on single degrees x, y >= 3 must avoid
    f(2) - f(1); (b) the leaf-swap gap must be nonzero at every depth.
    """
    ok_a, witness_a, min_a = True, None, float("inf")
    base = f((2,)) - f((1,))
    for x in range(3, x_max + 1):
        fx = f((x,))
        for y in range(x + 1, x_max + 1):
            lhs = (fx - f((y,))) / (x - y)
            margin = abs(lhs - base)
            if margin < min_a:
                min_a = margin
            if margin <= tol and ok_a:
                ok_a, witness_a = False, (x, y)
    ok_b, witness_b, min_b = _scan_leaf_swap(f, x_max, t_max, tol)
    return ConditionReport(
        family="starlike",
        x_max=x_max,
        t_max=t_max,
        tolerance=tol,
        condition_a=ok_a,
        condition_b=ok_b,
        counterexample_a=witness_a,
        counterexample_b=witness_b,
        min_margin_a=min_a,
        min_margin_b=min_b,
    )


def check_generalized_conditions(
    f: InvariantFunction, x_max: int = 64, t_max: int = 32, tol: float = DEFAULT_TOL
) -> ConditionReport:
    """Same scan for the clique-coalesced family.

    (a) tightens to the divided difference of x * f(x) avoiding f(1), which
    the hub-degree scan needs; (b) is unchanged.
    """
    ok_a, witness_a, min_a = True, None, float("inf")
    base = f((1,))
    for x in range(3, x_max + 1):
        xfx = x * f((x,))
        for y in range(x + 1, x_max + 1):
            lhs = (xfx - y * f((y,))) / (x - y)
            margin = abs(lhs - base)
            if margin < min_a:
                min_a = margin
            if margin <= tol and ok_a:
                ok_a, witness_a = False, (x, y)
    ok_b, witness_b, min_b = _scan_leaf_swap(f, x_max, t_max, tol)
    return ConditionReport(
        family="generalized",
        x_max=x_max,
        t_max=t_max,
        tolerance=tol,
        condition_a=ok_a,
        condition_b=ok_b,
        counterexample_a=witness_a,
        counterexample_b=witness_b,
        min_margin_a=min_a,
        min_margin_b=min_b,
    )


@dataclass(frozen=True)
class ReconstructionResult:
    """A rebuilt spec plus the per-order residuals of its validation."""

    spec: StarlikeSpec | GenStarlikeSpec
    residuals: list[float] = field(compare=False)

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    def to_dict(self) -> dict:
        doc = self.spec.to_dict()
        family = "generalized" if isinstance(self.spec, GenStarlikeSpec) else "starlike"
        return {
            "family": family,
            "n": self.spec.vertex_count,
            **doc,
            "max_residual": self.max_residual,
        }


def _run_ladder(
    profile: list[float],
    f: InvariantFunction,
    budget_len: int,
    budget_cnt: int,
    lam,
    mu,
    branch_tol: float,
) -> dict[int, int]:
    """Recover branch counts order by order until the length budget is spent.

    lam(L, h) evaluates the profile's closed form at the parameter point with
    the counts found so far and the order-h count set to zero; mu(h) is the
    slope in that count.
    """
    counts: dict[int, int] = {}
    used_len = 0
    used_cnt = 0
    h = 1
    while used_len < budget_len:
        if h >= len(profile):
            raise BudgetMismatchError(
                f"profile ends at order {len(profile) - 1} with "
                f"{budget_len - used_len} branch length still unaccounted for"
            )
        slope = mu(h)
        if slope == 0.0:
            raise NonIntegerBranchCountError(
                f"zero slope at order {h}; this index cannot resolve branch counts"
            )
        raw = (profile[h] - lam(counts, h)) / slope
        k = round(raw)
        if abs(raw - k) > branch_tol:
            raise NonIntegerBranchCountError(
                f"count of length-{h} branches came out {raw!r}, "
                f"not within {branch_tol} of an integer"
            )
        if k < 0:
            raise NonIntegerBranchCountError(
                f"count of length-{h} branches came out negative ({k})"
            )
        if k:
            used_len += h * k
            used_cnt += k
            if used_len > budget_len or used_cnt > budget_cnt:
                raise BudgetMismatchError(
                    f"branches found through order {h} overfill the tree "
                    f"({used_cnt} branches, total length {used_len})"
                )
            counts[h] = k
        h += 1
    if used_cnt != budget_cnt:
        raise BudgetMismatchError(
            f"recovered {used_cnt} branches but the root degree demands {budget_cnt}"
        )
    return counts


def reconstruct_starlike(
    vertex_count: int,
    profile: list[float],
    f: InvariantFunction,
    tol: float = DEFAULT_TOL,
    branch_tol: float = BRANCH_RESIDUAL_TOL,
) -> ReconstructionResult:
    """Rebuild a starlike spec from its invariant profile.

    The profile must cover orders 0..h_max with h_max at least the longest
    branch length. Raises a ReconstructionError subclass rather than ever
    returning a spec that does not reproduce the input.
    """
    n = vertex_count
    if n < 4:
        raise NoCandidateRootError(f"no starlike tree has {n} vertices")
    if not profile:
        raise BudgetMismatchError("profile is empty")
    candidates = [
        m
        for m in range(3, n)
        if _close(profile[0], _star_point_invariant(n, m, {}, 0, f), tol)
    ]
    if not candidates:
        raise NoCandidateRootError(
            f"no root degree in 3..{n - 1} matches the order-0 value {profile[0]!r}"
        )
    if len(candidates) > 1:
        raise AmbiguousRootError(
            f"root degrees {candidates} all match the order-0 value; "
            "tighten the tolerance or use a steeper index"
        )
    m = candidates[0]

    counts = _run_ladder(
        profile,
        f,
        budget_len=n - 1,
        budget_cnt=m,
        lam=lambda L, h: _star_point_invariant(n, m, L, h, f),
        mu=lambda h: mu_coefficient(f, h, m),
        branch_tol=branch_tol,
    )
    spec = StarlikeSpec.from_counts(counts)

    check = starlike_profile(spec, f, len(profile) - 1)
    residuals = [abs(a - b) for a, b in zip(profile, check)]
    for h, (a, b) in enumerate(zip(profile, check)):
        if not _close(a, b, tol):
            raise ProfileMismatchError(
                f"rebuilt spec disagrees with the input profile at order {h}: "
                f"{b!r} vs {a!r}"
            )
    return ReconstructionResult(spec=spec, residuals=residuals)


def reconstruct_generalized(
    vertex_count: int,
    max_degree: int,
    profile: list[float],
    f: InvariantFunction,
    tol: float = DEFAULT_TOL,
    branch_tol: float = BRANCH_RESIDUAL_TOL,
) -> ReconstructionResult:
    """Rebuild a clique-coalesced spec from (n, max degree, profile).

    The family fixes the vertex count and the hub degree r; the order-0
    value then pins the clique size by integer scan, and the ladder runs on
    the tree part with the hub degree in every crossing class.
    """
    n, r = vertex_count, max_degree
    if not profile:
        raise BudgetMismatchError("profile is empty")
    candidates = []
    for n1 in range(3, r - 1):
        m = r + 1 - n1
        n2 = n - n1 + 1
        if m < 3 or n2 - 1 < m:
            continue
        if _close(profile[0], _coalesced_point_invariant(n1, n2, m, {}, 0, f), tol):
            candidates.append(n1)
    if not candidates:
        raise NoCandidateRootError(
            f"no clique size in 3..{r - 2} matches the order-0 value {profile[0]!r}"
        )
    if len(candidates) > 1:
        raise AmbiguousRootError(
            f"clique sizes {candidates} all match the order-0 value"
        )
    n1 = candidates[0]
    m = r + 1 - n1
    n2 = n - n1 + 1

    counts = _run_ladder(
        profile,
        f,
        budget_len=n2 - 1,
        budget_cnt=m,
        lam=lambda L, h: _coalesced_point_invariant(n1, n2, m, L, h, f),
        mu=lambda h: mu_coefficient(f, h, m + n1 - 1),
        branch_tol=branch_tol,
    )
    spec = GenStarlikeSpec(n1, StarlikeSpec.from_counts(counts))

    check = generalized_profile(spec, f, len(profile) - 1)
    residuals = [abs(a - b) for a, b in zip(profile, check)]
    for h, (a, b) in enumerate(zip(profile, check)):
        if not _close(a, b, tol):
            raise ProfileMismatchError(
                f"rebuilt spec disagrees with the input profile at order {h}: "
                f"{b!r} vs {a!r}"
            )
    return ReconstructionResult(spec=spec, residuals=residuals)


def _spec_profile(
    spec: StarlikeSpec | GenStarlikeSpec, f: InvariantFunction, max_order: int
) -> list[float]:
    if isinstance(spec, GenStarlikeSpec):
        return generalized_profile(spec, f, max_order)
    return starlike_profile(spec, f, max_order)


def distinguish(
    a: StarlikeSpec | GenStarlikeSpec,
    b: StarlikeSpec | GenStarlikeSpec,
    f: InvariantFunction,
    tol: float = DEFAULT_TOL,
) -> int | None:
    """Smallest order whose invariant separates the two specs, else None.

    Orders beyond both longest paths carry no information (both invariants
    are identically zero there), so the scan stops at the larger of the two.
    """
    if type(a) is not type(b):
        raise FamilyMismatchError(
            f"cannot compare {type(a).__name__} with {type(b).__name__}"
        )
    if a.vertex_count != b.vertex_count:
        raise SizeMismatchError(
            f"vertex counts differ: {a.vertex_count} vs {b.vertex_count}"
        )
    if isinstance(a, GenStarlikeSpec) and a.max_degree != b.max_degree:
        raise SizeMismatchError(
            f"maximum degrees differ: {a.max_degree} vs {b.max_degree}"
        )
    h_max = max(a.longest_path_length, b.longest_path_length)
    va = _spec_profile(a, f, h_max)
    vb = _spec_profile(b, f, h_max)
    for h in range(h_max + 1):
        if not _close(va[h], vb[h], tol):
            return h
    return None


def _partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None or max_part > total:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def starlike_specs(vertex_count: int) -> list[StarlikeSpec]:
    """Every starlike spec on the given vertex count, deterministically ordered."""
    specs = []
    for parts in _partitions(vertex_count - 1):
        if len(parts) >= 3:
            specs.append(StarlikeSpec.from_counts(Counter(parts)))
    return sorted(specs, key=lambda s: s.branches)


def generalized_specs(vertex_count: int, max_degree: int) -> list[GenStarlikeSpec]:
    """Every coalesced spec with the given vertex count and hub degree."""
    specs = []
    for n1 in range(3, max_degree - 1):
        m = max_degree + 1 - n1
        n2 = vertex_count - n1 + 1
        if m < 3 or n2 - 1 < m:
            continue
        for parts in _partitions(n2 - 1):
            if len(parts) == m:
                specs.append(GenStarlikeSpec(n1, StarlikeSpec.from_counts(Counter(parts))))
    return sorted(specs, key=lambda s: (s.clique_size, s.star.branches))


@dataclass(frozen=True)
class SurveyReport:
    """All-pairs distinguishability outcome for one family slice."""

    family: str
    vertex_count: int
    max_degree: int | None
    index: str
    tolerance: float
    spec_count: int
    pairs_checked: int
    collisions: list[tuple[StarlikeSpec | GenStarlikeSpec, StarlikeSpec | GenStarlikeSpec]]

    def to_dict(self) -> dict:
        doc = {
            "family": self.family,
            "n": self.vertex_count,
            "index": self.index,
            "tolerance": self.tolerance,
            "specs": self.spec_count,
            "pairs_checked": self.pairs_checked,
            "collisions": [
                {"a": a.to_dict(), "b": b.to_dict()} for a, b in self.collisions
            ],
        }
        if self.max_degree is not None:
            doc["r"] = self.max_degree
        return doc


def survey_distinguishability(
    vertex_count: int,
    f: InvariantFunction,
    family: str = "starlike",
    max_degree: int | None = None,
    tol: float = DEFAULT_TOL,
    max_pairs: int = 200_000,
) -> SurveyReport:
    """Check every unordered pair of same-size specs for profile collisions."""
    if family == "starlike":
        specs: list = starlike_specs(vertex_count)
    elif family == "generalized":
        if max_degree is None:
            raise ValueError("generalized survey needs the hub degree")
        specs = generalized_specs(vertex_count, max_degree)
    else:
        raise ValueError(f"unknown family {family!r}")

    total_pairs = len(specs) * (len(specs) - 1) // 2
    if total_pairs > max_pairs:
        raise BudgetExceededError(
            f"{total_pairs} pairs exceed the cap of {max_pairs}"
        )

    h_max = max((s.longest_path_length for s in specs), default=0)
    profiles = [_spec_profile(s, f, h_max) for s in specs]
    collisions = []
    pairs = 0
    for i in range(len(specs)):
        for j in range(i + 1, len(specs)):
            if isinstance(specs[i], GenStarlikeSpec) and specs[i].max_degree != specs[j].max_degree:
                continue
            pairs += 1
            pa, pb = profiles[i], profiles[j]
            if all(_close(pa[h], pb[h], tol) for h in range(h_max + 1)):
                collisions.append((specs[i], specs[j]))
    return SurveyReport(
        family=family,
        vertex_count=vertex_count,
        max_degree=max_degree,
        index=f.name,
        tolerance=tol,
        spec_count=len(specs),
        pairs_checked=pairs,
        collisions=collisions,
    )
