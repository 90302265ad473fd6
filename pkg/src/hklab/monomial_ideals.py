"""Exact counting for monomial ideals.

This is the fast path that makes large q = p^n feasible: colengths are
computed by recursive slicing on the last variable rather than by Groebner
reduction or inclusion-exclusion. Counts are exact integers (Python ints do
not wrap, so the 64-bit interface check is a sanity cap, not a correctness
requirement).
"""

from __future__ import annotations

import math
from itertools import combinations

from .cache import memo
from .errors import ConfigError, CountOverflowError
from .monomials import Monomial, mono_divides, mono_mul, mono_pow, support

INFINITE = math.inf

MAX_COUNT = 2**63 - 1


def minimalize(gens, nvars: int):
    """Divisibility-minimal antichain generating the same ideal, sorted."""
    unique = sorted(set(tuple(g) for g in gens))
    for g in unique:
        if len(g) != nvars:
            raise ConfigError(f"generator arity {len(g)} does not match {nvars}")
    # ascending total degree: a divisor never comes after its multiple
    unique.sort(key=lambda g: (sum(g), g))
    kept = []
    for g in unique:
        if not any(mono_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


class MonomialIdeal:
    """An antichain of monomial generators in a fixed number of variables."""

    __slots__ = ("nvars", "gens")

    def __init__(self, gens, nvars: int):
        self.nvars = nvars
        self.gens = minimalize(gens, nvars)

    def key(self):
        return (self.nvars, self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MonomialIdeal({list(self.gens)!r}, nvars={self.nvars})"

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(all(e == 0 for e in g) for g in self.gens)

    def contains(self, mono: Monomial) -> bool:
        if len(mono) != self.nvars:
            raise ConfigError("arity mismatch in membership test")
        return any(mono_divides(g, mono) for g in self.gens)

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.nvars != self.nvars:
            raise ConfigError("arity mismatch in ideal sum")
        return MonomialIdeal(self.gens + other.gens, self.nvars)

    def times(self, other: "MonomialIdeal") -> "MonomialIdeal":
        prods = [mono_mul(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal(prods, self.nvars)

    def power(self, k: int) -> "MonomialIdeal":
        if k <= 0:
            return MonomialIdeal([(0,) * self.nvars], self.nvars)
        result = self
        for _ in range(k - 1):
            result = result.times(self)
        return result

    def frobenius(self, q: int) -> "MonomialIdeal":
        return MonomialIdeal([mono_pow(g, q) for g in self.gens], self.nvars)


def membership(ideal: MonomialIdeal, mono: Monomial) -> bool:
    return ideal.contains(mono)


def dimension(ideal: MonomialIdeal, nvars: int) -> int:
    """Combinatorial Krull dimension of the quotient by a monomial ideal.

    The largest cardinality of a variable subset S such that no generator
    is supported inside S. The zero ideal has dimension nvars; the unit
    ideal is the empty scheme, reported here as -1 so that "dimension 0"
    always means a nonzero Artinian quotient.
    """
    if ideal.is_unit():
        return -1
    supports = [support(g) for g in ideal.gens]
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            sset = frozenset(subset)
            if not any(sup <= sset for sup in supports):
                return size
    return 0


_count_memo = memo("staircase")


def _count(gens, nvars: int) -> int:
    """Monomials outside the antichain `gens`; assumes the count is finite."""
    if not gens:
        return 1 if nvars == 0 else None  # unreachable when finite
    if any(all(e == 0 for e in g) for g in gens):
        return 0
    if nvars == 1:
        return min(g[0] for g in gens)

    def compute():
        v = nvars - 1
        cuts = sorted({g[v] for g in gens} | {0})
        total = 0
        for lo, hi in zip(cuts, cuts[1:] + [None]):
            if hi is None:
                break
            sliced = minimalize(
                [g[:v] for g in gens if g[v] <= lo], nvars - 1
            )
            inner = _count(sliced, nvars - 1)
            total += (hi - lo) * inner
        return total

    return _count_memo.get_or_compute(("colength", nvars, gens), compute)


def staircase_colength(ideal: MonomialIdeal):
    """Number of standard monomials, or INFINITE when the quotient has
    positive dimension."""
    if ideal.is_unit():
        return 0
    if dimension(ideal, ideal.nvars) > 0:
        return INFINITE
    count = _count(ideal.gens, ideal.nvars)
    if count > MAX_COUNT:
        raise CountOverflowError(f"colength {count} exceeds the 64-bit interface")
    return count


def graded_slice_count(ideal: MonomialIdeal, deg: int, weights) -> int:
    """Standard monomials of weighted degree exactly deg.

    Finite for any monomial ideal (the degree-deg stratum of the ambient
    ring is finite), so no primality assumption is needed.
    """
    if len(weights) != ideal.nvars:
        raise ConfigError("one weight per variable required")
    if any(w <= 0 for w in weights):
        raise ConfigError("weights must be positive")

    def walk(gens, nvars, d):
        if d < 0:
            return 0
        if any(all(e == 0 for e in g) for g in gens):
            return 0
        if nvars == 0:
            return 1 if d == 0 else 0
        key = ("slice", nvars, gens, d, tuple(weights[:nvars]))

        def compute():
            v = nvars - 1
            w = weights[v]
            pure = [g[v] for g in gens if all(g[i] == 0 for i in range(v))]
            top = min(pure) - 1 if pure else d // w
            top = min(top, d // w)
            total = 0
            for t in range(0, top + 1):
                sliced = minimalize([g[:v] for g in gens if g[v] <= t], v)
                total += walk(sliced, v, d - t * w)
            return total

        return _count_memo.get_or_compute(key, compute)

    return walk(ideal.gens, ideal.nvars, deg)


def naive_colength(ideal: MonomialIdeal):
    """Bounding-box enumeration oracle; exponentially slow, test use only."""
    if ideal.is_unit():
        return 0
    if dimension(ideal, ideal.nvars) > 0:
        return INFINITE
    bounds = []
    for i in range(ideal.nvars):
        pure = [g[i] for g in ideal.gens if support(g) == frozenset({i})]
        bounds.append(min(pure))
    count = 0
    stack = [(0, ())]
    while stack:
        i, prefix = stack.pop()
        if i == ideal.nvars:
            count += 0 if ideal.contains(prefix) else 1
            continue
        for e in range(bounds[i]):
            stack.append((i + 1, prefix + (e,)))
    return count
