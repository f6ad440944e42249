"""Dented-hexagon counts, dent shuffling and restricted enumeration.

Notation: for bottom rows ``U`` (upper half) and ``L`` (lower half) let
``C = U & L``, ``Ubar = U - C`` and ``Lbar = L - C``. A shuffle by a set
``S`` of private dents swaps the members of ``S`` between ``U`` and ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .core import (ExactCount, ExactRatio, RowSet, as_rowset, exact_div, pair_product,
                   set_algebra, superfactorial)
from .gtp import count_formula
from .lattice import Region


@dataclass(frozen=True)
class ShuffleSpec:
    U: RowSet
    L: RowSet
    S: RowSet

    def __post_init__(self):
        for name in "ULS":
            object.__setattr__(self, name, as_rowset(getattr(self, name)))
        us, ls = set(self.U), set(self.L)
        if any(p in us and p in ls for p in self.S):
            raise ValueError(f"S overlaps U & L at {list(self.S & self.U & self.L)}")
        if any(p not in us and p not in ls for p in self.S):
            raise ValueError(f"S contains positions outside U | L: {list(self.S - (us | ls))}")

    def to_json(self) -> dict:
        return {"U": list(self.U), "L": list(self.L), "S": list(self.S)}

    @classmethod
    def from_json(cls, data) -> "ShuffleSpec":
        return cls(RowSet.from_json(data["U"]), RowSet.from_json(data["L"]),
                   RowSet.from_json(data.get("S", [])))


@dataclass(frozen=True)
class RestrictedSpec:
    """Dents ``U - V`` above and ``L - V`` below; crossings confined to ``B``."""

    U: RowSet
    L: RowSet
    V: RowSet
    B: RowSet

    def __post_init__(self):
        for name in "ULVB":
            object.__setattr__(self, name, as_rowset(getattr(self, name)))
        us, ls, vs = set(self.U), set(self.L), set(self.V)
        if any(p not in us or p not in ls for p in vs):
            raise ValueError(f"V must be a subset of U & L, got extra {list(self.V - (self.U & self.L))}")
        if any((p in us or p in ls) and p not in vs for p in self.B):
            raise ValueError(f"B meets F = (U | L) - V at {list(self.B & self.F)}")

    @property
    def F(self) -> RowSet:
        return (self.U | self.L) - self.V

    def region(self, N: int | None = None) -> Region:
        """The dented hexagon, with diagonal ``max(U | L | B)`` unless given."""
        if N is None:
            N = max(self.U + self.L + self.B)
        return Region(len(self.U), len(self.L), N, self.U - self.V, self.L - self.V)

    def shuffled(self, s: Iterable[int]) -> "RestrictedSpec":
        u2, l2 = shuffle(ShuffleSpec(self.U, self.L, as_rowset(s)))
        return RestrictedSpec(u2, l2, self.V, self.B)

    def to_json(self) -> dict:
        return {"U": list(self.U), "L": list(self.L), "V": list(self.V), "B": list(self.B)}

    @classmethod
    def from_json(cls, data) -> "RestrictedSpec":
        return cls(*(RowSet.from_json(data.get(k, [])) for k in "ULVB"))


def count_dented(u: Iterable[int], l: Iterable[int]) -> ExactCount:
    """Tilings of the dented hexagon with dent rows ``u`` and ``l``."""
    return count_formula(u) * count_formula(l)


def count_dented_factored(u: Iterable[int], l: Iterable[int]) -> ExactCount:
    """Same count, assembled from the common/private split of the dents."""
    u, l = as_rowset(u), as_rowset(l)
    if not u or not l:
        raise ValueError("bottom rows must be nonempty")
    common, ubar, lbar = set_algebra(u, l)
    private = ubar | lbar
    num = (pair_product(ubar, ubar) * pair_product(lbar, lbar)
           * pair_product(private, common) * pair_product(common, private)
           * pair_product(common, common) ** 2)
    return exact_div(num, superfactorial(len(u)) * superfactorial(len(l)))


def shuffle(spec: ShuffleSpec) -> tuple[RowSet, RowSet]:
    """Move the members of ``S`` to the other side; returns ``(U', L')``."""
    u, l, s = spec.U, spec.L, set(spec.S)
    u2 = RowSet._trusted(sorted([p for p in u if p not in s] + [p for p in l if p in s]))
    l2 = RowSet._trusted(sorted([p for p in l if p not in s] + [p for p in u if p in s]))
    before, after = set(u) & set(l), set(u2) & set(l2)
    assert after == before
    assert (set(u2) ^ set(l2)) == (set(u) ^ set(l))
    return u2, l2


def shuffle_ratio_closed_form(spec: ShuffleSpec) -> ExactRatio:
    """``count_dented(U, L) / count_dented(U', L')`` without counting either side.

    Both sides must stay nonempty after the shuffle.
    """
    u2, l2 = shuffle(spec)
    _, ubar, lbar = set_algebra(spec.U, spec.L)
    _, ubar2, lbar2 = set_algebra(u2, l2)
    num = (pair_product(ubar, ubar) * pair_product(lbar, lbar)
           * superfactorial(len(u2)) * superfactorial(len(l2)))
    den = (pair_product(ubar2, ubar2) * pair_product(lbar2, lbar2)
           * superfactorial(len(spec.U)) * superfactorial(len(spec.L)))
    return Fraction(num, den)


def restricted_sum(spec: RestrictedSpec) -> ExactCount:
    """The sum over crossing sets ``V'`` in the restricted count.

    Each ``V'`` of size ``|V|`` drawn from ``B`` contributes
    ``P(D, X) * P(X, D) * P(X, X)**2`` with ``D = Ubar | Lbar`` and
    ``X = (C - V) | V'``. Only ``C`` and ``D`` enter, so the value does not
    change under shuffling.
    """
    ls, vs = set(spec.L), set(spec.V)
    common = [p for p in spec.U if p in ls]
    private = sorted(set(spec.U).symmetric_difference(ls))
    kept = tuple(p for p in common if p not in vs)
    total = 0
    for chosen in combinations(spec.B, len(vs)):
        x = sorted(kept + chosen)
        total += (pair_product(private, x) * pair_product(x, private)
                  * pair_product(x, x) ** 2)
    return total


def count_restricted(spec: RestrictedSpec) -> ExactCount:
    """Tilings of ``spec.region()`` whose crossing verticals all lie in ``B``."""
    if len(spec.B) < len(spec.V):
        return 0
    _, ubar, lbar = set_algebra(spec.U, spec.L)
    num = pair_product(ubar, ubar) * pair_product(lbar, lbar) * restricted_sum(spec)
    return exact_div(num, superfactorial(len(spec.U)) * superfactorial(len(spec.L)))


def verify_shuffle_invariance(spec: RestrictedSpec, s: Iterable[int]) -> bool:
    """Check the restricted sum agrees before and after shuffling by ``s``."""
    return restricted_sum(spec) == restricted_sum(spec.shuffled(s))
