"""Integer divisors: finitely supported Z-valued functions on point ids.

One container serves vertex ids, metric-graph point ids and curve point ids.
Zero coefficients are never stored and keys are kept sorted, so equal
divisors compare and serialize identically.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from types import MappingProxyType
from typing import Generic, TypeVar

from .graph import Multigraph

P = TypeVar("P")


class Divisor(Generic[P]):
    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[P, int] | Iterable[tuple[P, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[P, int] = {}
        for point, c in items:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"divisor coefficient at {point!r} must be an int, got {c!r}")
            acc[point] = acc.get(point, 0) + c
        self._coeffs = MappingProxyType({p: acc[p] for p in sorted(acc) if acc[p] != 0})

    @classmethod
    def point(cls, p: P, coefficient: int = 1) -> Divisor[P]:
        return cls({p: coefficient})

    @property
    def coefficients(self) -> Mapping[P, int]:
        return self._coeffs

    @property
    def support(self) -> tuple[P, ...]:
        return tuple(self._coeffs)

    def __getitem__(self, p: P) -> int:
        return self._coeffs.get(p, 0)

    def __iter__(self) -> Iterator[P]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    @property
    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def __add__(self, other: Divisor[P]) -> Divisor[P]:
        if not isinstance(other, Divisor):
            return NotImplemented
        return Divisor([*self._coeffs.items(), *other._coeffs.items()])

    def __neg__(self) -> Divisor[P]:
        return Divisor({p: -c for p, c in self._coeffs.items()})

    def __sub__(self, other: Divisor[P]) -> Divisor[P]:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> Divisor[P]:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return Divisor({p: k * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def restrict(self, points: Iterable[P]) -> Divisor[P]:
        keep = set(points)
        return Divisor({p: c for p, c in self._coeffs.items() if p in keep})

    def map_points(self, f: Callable[[P], P]) -> Divisor[P]:
        """Push coefficients along ``f``, adding those that collide."""
        return Divisor([(f(p), c) for p, c in self._coeffs.items()])

    def __repr__(self) -> str:
        if not self._coeffs:
            return "Divisor(0)"
        terms = " + ".join(f"{c}({p})" for p, c in self._coeffs.items())
        return f"Divisor({terms})"


def degree(d: Divisor) -> int:
    return d.degree


def is_effective(d: Divisor) -> bool:
    return d.is_effective()


def canonical_divisor(g: Multigraph) -> Divisor[str]:
    """K_G = sum over vertices of (val(v) - 2)(v); its degree is 2g - 2."""
    return Divisor({v: g.valency(v) - 2 for v in g.vertices})
