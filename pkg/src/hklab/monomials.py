"""Exponent vectors and monomial orders.

A monomial is a tuple of nonnegative ints, one entry per variable. Exponent
arithmetic is checked against a 64-bit cap: desk-scale jobs never need more,
and a breach means a runaway configuration, so we fail loudly instead of
producing a silently wrong count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, ExponentOverflowError

Monomial = tuple  # tuple[int, ...], one exponent per variable

MAX_EXPONENT = 2**63 - 1


def check_arity(a: Monomial, b: Monomial):
    if len(a) != len(b):
        raise ConfigError(f"arity mismatch: {len(a)} vs {len(b)} variables")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    check_arity(a, b)
    out = []
    for x, y in zip(a, b):
        s = x + y
        if s > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {s} exceeds 64-bit cap")
        out.append(s)
    return tuple(out)


def mono_pow(a: Monomial, k: int) -> Monomial:
    out = []
    for x in a:
        s = x * k
        if s > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {s} exceeds 64-bit cap")
        out.append(s)
    return tuple(out)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. every exponent of a is at most that of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def weighted_degree(a: Monomial, weights) -> int:
    return sum(x * w for x, w in zip(a, weights))


def support(a: Monomial) -> frozenset:
    return frozenset(i for i, x in enumerate(a) if x > 0)


LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    """A total multiplicative monomial order with 1 as minimum.

    kind is "lex" or "grevlex". The permutation lists variable indices from
    most to least significant; grevlex additionally takes a positive weight
    per variable for the graded comparison (unit weights when omitted).
    """

    kind: str
    nvars: int
    permutation: tuple = None
    weights: tuple = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ConfigError(f"unknown monomial order kind {self.kind!r}")
        perm = self.permutation or tuple(range(self.nvars))
        if sorted(perm) != list(range(self.nvars)):
            raise ConfigError(f"invalid variable permutation {perm!r}")
        object.__setattr__(self, "permutation", tuple(perm))
        weights = self.weights or tuple([1] * self.nvars)
        if len(weights) != self.nvars or any(w <= 0 for w in weights):
            raise ConfigError(f"weights must be positive, got {weights!r}")
        object.__setattr__(self, "weights", tuple(weights))

    def key(self, m: Monomial):
        """Sort key: key(a) < key(b) iff a < b in this order.

        Keys are componentwise additive in the exponents, which makes the
        order multiplicative by construction.
        """
        if len(m) != self.nvars:
            raise ConfigError(f"arity mismatch: {len(m)} vs {self.nvars}")
        pm = tuple(m[i] for i in self.permutation)
        if self.kind == "lex":
            return pm
        w = tuple(self.weights[i] for i in self.permutation)
        deg = sum(x * wi for x, wi in zip(pm, w))
        return (deg,) + tuple(-x for x in reversed(pm))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LESS
        if ka > kb:
            return GREATER
        return EQUAL


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Compare two monomials, returning -1, 0 or +1."""
    check_arity(a, b)
    return order.compare(a, b)
