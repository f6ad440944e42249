"""Exhaustive and randomized cross-checks between formulas and the lattice oracle.

Each ``check_*`` function returns a :class:`CheckResult` holding the number of
cases tried and the first few failures with both sides of the comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .core import RowSet, ratio_to_json, set_algebra
from .gtp import count_formula, count_recursive, enumerate_patterns
from .lattice import brute_force_count, brute_force_count_restricted, build_dented_hexagon
from .shuffle import (RestrictedSpec, ShuffleSpec, count_dented, count_dented_factored,
                      count_restricted, restricted_sum, shuffle, shuffle_ratio_closed_form,
                      verify_shuffle_invariance)

MAX_REPORTED = 10


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failed == 0

    def record(self, ok: bool, **detail) -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append({k: _jsonable(v) for k, v in detail.items()})

    def to_json(self) -> dict:
        out = {"check": self.name, "pass": self.passed, "cases": self.cases}
        if self.failed:
            out["failed"] = self.failed
            out["failures"] = self.failures
        return out


def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return ratio_to_json(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def subsets(positions: Iterable[int], max_size: int | None = None,
            nonempty: bool = False) -> Iterator[RowSet]:
    positions = tuple(positions)
    top = len(positions) if max_size is None else min(max_size, len(positions))
    for k in range(1 if nonempty else 0, top + 1):
        for combo in combinations(positions, k):
            yield RowSet(combo)


def check_gtp_agreement(max_pos: int = 8, max_size: int = 5) -> CheckResult:
    result = CheckResult("formula = recursion = enumeration")
    for u in subsets(range(1, max_pos + 1), max_size, nonempty=True):
        a, b = count_formula(u), count_recursive(u)
        c = sum(1 for _ in enumerate_patterns(u))
        result.record(a == b == c, U=u, formula=a, recursion=b, enumeration=c)
    return result


def check_dented_oracle(max_pos: int = 5, extra: int = 2) -> CheckResult:
    result = CheckResult("oracle = GTP(U)*GTP(L) on dented hexagons")
    rows = list(subsets(range(1, max_pos + 1), nonempty=True))
    for u in rows:
        for l in rows:
            expected = count_formula(u) * count_formula(l)
            base = max(u + l)
            for N in range(base, base + extra + 1):
                got = brute_force_count(build_dented_hexagon(len(u), len(l), N, u, l))
                result.record(got == expected, U=u, L=l, N=N, oracle=got, formula=expected)
    return result


def check_factored(max_pos: int = 7) -> CheckResult:
    result = CheckResult("factored dented count = GTP(U)*GTP(L)")
    rows = list(subsets(range(1, max_pos + 1), nonempty=True))
    for u in rows:
        for l in rows:
            a, b = count_dented_factored(u, l), count_dented(u, l)
            result.record(a == b, U=u, L=l, factored=a, direct=b)
    return result


def _ratio_case(result: CheckResult, spec: ShuffleSpec) -> None:
    u2, l2 = shuffle(spec)
    closed = shuffle_ratio_closed_form(spec)
    direct = Fraction(count_dented(spec.U, spec.L), count_dented(u2, l2))
    result.record(closed == direct, U=spec.U, L=spec.L, S=spec.S, closed_form=closed, direct=direct)


def _keeps_both_sides(u: RowSet, l: RowSet, s: RowSet) -> bool:
    # a shuffle emptying one side leaves no dented hexagon to compare with
    return bool((u - s) or (l & s)) and bool((l - s) or (u & s))


def check_shuffle_ratio(max_pos: int = 7) -> CheckResult:
    result = CheckResult(f"shuffle ratio, exhaustive to {max_pos}")
    rows = list(subsets(range(1, max_pos + 1), nonempty=True))
    for u in rows:
        for l in rows:
            _, ubar, lbar = set_algebra(u, l)
            for s in subsets(ubar | lbar):
                if _keeps_both_sides(u, l, s):
                    _ratio_case(result, ShuffleSpec(u, l, s))
    return result


def random_shuffle_spec(rng: random.Random, max_pos: int) -> ShuffleSpec:
    positions = range(1, max_pos + 1)
    while True:
        u = RowSet(p for p in positions if rng.random() < 0.5)
        l = RowSet(p for p in positions if rng.random() < 0.5)
        if not u or not l:
            continue
        _, ubar, lbar = set_algebra(u, l)
        s = RowSet(p for p in ubar | lbar if rng.random() < 0.5)
        if _keeps_both_sides(u, l, s):
            return ShuffleSpec(u, l, s)


def check_shuffle_ratio_random(count: int = 1000, max_pos: int = 12, seed: int = 0) -> CheckResult:
    result = CheckResult(f"shuffle ratio, {count} random to {max_pos}")
    rng = random.Random(seed)
    for _ in range(count):
        _ratio_case(result, random_shuffle_spec(rng, max_pos))
    return result


def restricted_specs(max_pos: int = 7, max_b: int = 3) -> Iterator[RestrictedSpec]:
    """Every RestrictedSpec with positions in ``1..max_pos`` and ``|B| <= max_b``."""
    positions = range(1, max_pos + 1)
    rows = list(subsets(positions, nonempty=True))
    for u in rows:
        for l in rows:
            common = u & l
            for v in subsets(common):
                f = (u | l) - v
                for b in subsets((p for p in positions if p not in f), max_b):
                    yield RestrictedSpec(u, l, v, b)


def check_restricted(max_pos: int = 7, max_b: int = 3,
                     invariance: bool = True) -> tuple[CheckResult, CheckResult]:
    """Restricted formula against the oracle, and shuffle invariance of its sum.

    Invariance is checked for every admissible ``S`` of every spec.
    """
    oracle = CheckResult(f"restricted formula = oracle, positions <= {max_pos}, |B| <= {max_b}")
    shuffled = CheckResult(f"restricted sum invariant under every shuffle, positions <= {max_pos}")
    for spec in restricted_specs(max_pos, max_b):
        formula = count_restricted(spec)
        got = brute_force_count_restricted(spec.region(), spec.V, spec.B)
        oracle.record(formula == got, **spec.to_json(), formula=formula, oracle=got)
        if invariance:
            _, ubar, lbar = set_algebra(spec.U, spec.L)
            for s in subsets(ubar | lbar):
                ok = verify_shuffle_invariance(spec, s)
                shuffled.record(ok, **spec.to_json(), S=s)
    return oracle, shuffled


def check_random_invariance(count: int = 1000, max_pos: int = 12, max_b: int = 3,
                            seed: int = 0) -> CheckResult:
    """Invariance on random restricted specs built around random shuffles."""
    result = CheckResult(f"restricted sum invariant, {count} random to {max_pos}")
    rng = random.Random(seed)
    for _ in range(count):
        base = random_shuffle_spec(rng, max_pos)
        common = base.U & base.L
        v = RowSet(p for p in common if rng.random() < 0.5)
        free = [p for p in range(1, max_pos + 1) if p not in (base.U | base.L) - v]
        b = RowSet(rng.sample(free, min(len(free), rng.randint(0, max_b))))
        spec = RestrictedSpec(base.U, base.L, v, b)
        result.record(verify_shuffle_invariance(spec, base.S), **spec.to_json(), S=base.S)
    return result


def check_spec(spec: RestrictedSpec, shuffles: Iterable[Iterable[int]],
               max_cells: int = 400) -> list[CheckResult]:
    """Checks for one restricted spec and a list of shuffles."""
    ratio = CheckResult("shuffle ratio")
    invariant = CheckResult("restricted sum invariant")
    oracle = CheckResult("restricted formula = oracle")
    specs = [spec]
    for s in shuffles:
        s = RowSet(s)
        shuffle_spec = ShuffleSpec(spec.U, spec.L, s)
        if _keeps_both_sides(spec.U, spec.L, s):
            _ratio_case(ratio, shuffle_spec)
        invariant.record(verify_shuffle_invariance(spec, s), S=s, before=restricted_sum(spec),
                         after=restricted_sum(spec.shuffled(s)))
        specs.append(spec.shuffled(s))
    for item in specs:
        if not (item.U and item.L):
            continue
        region = item.region()
        if len(region.cells) > max_cells:
            continue
        formula = count_restricted(item)
        got = brute_force_count_restricted(region, item.V, item.B)
        oracle.record(formula == got, **item.to_json(), formula=formula, oracle=got)
    return [r for r in (ratio, invariant, oracle) if r.cases]
