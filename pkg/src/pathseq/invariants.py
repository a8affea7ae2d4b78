"""Index functions over degree sequences and their path-sum invariants.

An index function f maps a tuple of positive integer degrees to a real and
must be symmetric under reversal, so it is well defined on canonical path
classes. The order-h invariant of a graph is the sum of f over the degree
sequences of all order-h paths.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import SymmetryError, UnknownIndexError
from .graph import DEFAULT_BUDGET, Census, Graph, census_series, path_census


@dataclass(frozen=True)
class InvariantFunction:
    """A named, reversal-symmetric function of degree sequences."""

    name: str
    fn: Callable[[tuple[int, ...]], float]

    def __call__(self, degrees: Sequence[int]) -> float:
        return self.fn(tuple(degrees))


def _connectivity(d: tuple[int, ...]) -> float:
    return 1.0 / math.sqrt(math.prod(d))


def _sum_connectivity(d: tuple[int, ...]) -> float:
    return 1.0 / math.sqrt(sum(d))


def _hyper_zagreb(d: tuple[int, ...]) -> float:
    p = math.prod(d)
    return float(p) * float(p)


def _path_count(d: tuple[int, ...]) -> float:
    return 1.0


_SIMPLE_BUILTINS = {
    "connectivity": _connectivity,
    "sum-connectivity": _sum_connectivity,
    "hyper-zagreb": _hyper_zagreb,
    "path-count": _path_count,
}


def builtin(name: str, param: float | None = None) -> InvariantFunction:
    """Construct a built-in index function.

    Known names: connectivity, sum-connectivity, hyper-zagreb, path-count,
    and power (which requires its exponent parameter).
    """
    if name in _SIMPLE_BUILTINS:
        if param is not None:
            raise UnknownIndexError(f"index {name!r} takes no parameter")
        return InvariantFunction(name, _SIMPLE_BUILTINS[name])
    if name == "power":
        if param is None:
            raise UnknownIndexError(
                "index 'power' requires an exponent, e.g. 'power:0.5'"
            )
        alpha = float(param)

        def _power(d: tuple[int, ...], _a: float = alpha) -> float:
            return math.prod(d) ** _a

        return InvariantFunction(f"power:{alpha}", _power)
    raise UnknownIndexError(f"unknown index {name!r}")


_registry: dict[str, InvariantFunction] = {}


def validate_symmetry(
    fn: Callable[[tuple[int, ...]], float],
    rng: random.Random,
    trials: int = 1000,
    max_length: int = 9,
    rel_tol: float = 1e-12,
) -> None:
    """Spot-check reversal symmetry on random degree sequences.

    Raises SymmetryError on the first violating sequence.
    """
    for _ in range(trials):
        length = rng.randint(1, max_length)
        seq = tuple(rng.randint(1, 64) for _ in range(length))
        a = fn(seq)
        b = fn(seq[::-1])
        if abs(a - b) > rel_tol * max(1.0, abs(a), abs(b)):
            raise SymmetryError(
                f"f{seq} = {a!r} but f{seq[::-1]} = {b!r}; index functions must be"
                " symmetric under reversal"
            )


def register_invariant(
    name: str,
    fn: Callable[[tuple[int, ...]], float],
    rng: random.Random | None = None,
    trials: int = 1000,
) -> InvariantFunction:
    """Register a user-supplied index function after a symmetry check."""
    if name in _SIMPLE_BUILTINS or name == "power":
        raise ValueError(f"{name!r} is reserved for a built-in index")
    validate_symmetry(fn, rng if rng is not None else random.Random(0), trials)
    f = InvariantFunction(name, fn)
    _registry[name] = f
    return f


def resolve_index(text: str) -> InvariantFunction:
    """Resolve an index identifier like 'connectivity' or 'power:0.5'."""
    if text in _registry:
        return _registry[text]
    name, sep, param = text.partition(":")
    if not sep:
        return builtin(name)
    try:
        value = float(param)
    except ValueError:
        raise UnknownIndexError(f"bad parameter {param!r} in index {text!r}") from None
    return builtin(name, value)


def invariant_from_census(census: Census, f: InvariantFunction) -> float:
    """Sum f over a census, weighted by multiplicity."""
    return math.fsum(count * f(seq) for seq, count in census.entries.items())


def evaluate_invariant(
    graph: Graph, order: int, f: InvariantFunction, budget: int = DEFAULT_BUDGET
) -> float:
    """Order-h invariant of a graph by path enumeration."""
    return invariant_from_census(path_census(graph, order, budget), f)


def invariant_profile(
    graph: Graph, f: InvariantFunction, max_order: int, budget: int = DEFAULT_BUDGET
) -> list[float]:
    """Invariant values for every order 0..max_order.

    Orders beyond the longest path contribute zero.
    """
    series = census_series(graph, max_order, budget)
    return [invariant_from_census(c, f) for c in series]
