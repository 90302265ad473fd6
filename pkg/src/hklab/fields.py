"""Prime-field arithmetic.

Coefficients throughout the package are residues modulo a prime p stored as
plain Python ints in [0, p). ``PrimeField`` validates the modulus and bundles
the arithmetic; ``FieldElement`` is the value-plus-modulus record used at the
public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Arithmetic mod a prime p with p below 2^31."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ConfigError(f"characteristic must be prime, got {p!r}")
        if p >= MAX_CHARACTERISTIC:
            raise ConfigError(f"characteristic {p} exceeds the 2^31 cap")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inversion of zero in a prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


@dataclass(frozen=True)
class FieldElement:
    """A fully reduced residue together with its prime modulus."""

    value: int
    p: int

    def __post_init__(self):
        field = PrimeField(self.p)
        object.__setattr__(self, "value", field.normalize(self.value))


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply add/sub/mul/inv to two elements of one prime field.

    For ``inv`` the result is the inverse of ``a`` and ``b`` is ignored.
    """
    if a.p != b.p:
        raise ConfigError(f"mixed characteristics {a.p} and {b.p}")
    field = PrimeField(a.p)
    if op == "add":
        return FieldElement(field.add(a.value, b.value), a.p)
    if op == "sub":
        return FieldElement(field.sub(a.value, b.value), a.p)
    if op == "mul":
        return FieldElement(field.mul(a.value, b.value), a.p)
    if op == "inv":
        return FieldElement(field.inv(a.value), a.p)
    raise ConfigError(f"unknown field operation {op!r}")
