"""Sparse multivariate polynomials over a prime field.

A polynomial is a map from exponent tuples to nonzero residues mod p. The
term map is canonical (no zero coefficients, plain dict equality), so equal
polynomials compare and hash identically. Instances are treated as immutable;
every operation returns a fresh polynomial.
"""

from __future__ import annotations

from .errors import ConfigError
from .fields import PrimeField
from .monomials import Monomial, MonomialOrder, mono_mul, mono_pow, weighted_degree


class Polynomial:
    __slots__ = ("p", "nvars", "terms", "_key")

    def __init__(self, p: int, nvars: int, terms: dict | None = None):
        self.p = p
        self.nvars = nvars
        clean = {}
        for mono, coeff in (terms or {}).items():
            c = coeff % p
            if c:
                if len(mono) != nvars:
                    raise ConfigError(
                        f"term arity {len(mono)} does not match {nvars} variables"
                    )
                clean[tuple(mono)] = c
        self.terms = clean
        self._key = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int, nvars: int) -> "Polynomial":
        return cls(p, nvars, {})

    @classmethod
    def one(cls, p: int, nvars: int) -> "Polynomial":
        return cls(p, nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, p: int, nvars: int, index: int) -> "Polynomial":
        expo = [0] * nvars
        expo[index] = 1
        return cls(p, nvars, {tuple(expo): 1})

    @classmethod
    def term(cls, p: int, nvars: int, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls(p, nvars, {tuple(mono): coeff})

    # -- canonical form ------------------------------------------------

    def key(self):
        """Hashable canonical form: sorted term items."""
        if self._key is None:
            self._key = (self.p, self.nvars, tuple(sorted(self.terms.items())))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.p != other.p or self.nvars != other.nvars:
            raise ConfigError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        terms = dict(self.terms)
        p = self.p
        for mono, coeff in other.terms.items():
            c = (terms.get(mono, 0) + coeff) % p
            if c:
                terms[mono] = c
            else:
                terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out.p, out.nvars, out.terms, out._key = p, self.nvars, terms, None
        return out

    def __neg__(self) -> "Polynomial":
        p = self.p
        return Polynomial(p, self.nvars, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, coeff: int) -> "Polynomial":
        c = coeff % self.p
        if c == 0:
            return Polynomial.zero(self.p, self.nvars)
        return Polynomial(
            self.p, self.nvars, {m: (c * v) % self.p for m, v in self.terms.items()}
        )

    def mul_term(self, mono: Monomial, coeff: int = 1) -> "Polynomial":
        c = coeff % self.p
        if c == 0:
            return Polynomial.zero(self.p, self.nvars)
        return Polynomial(
            self.p,
            self.nvars,
            {mono_mul(m, mono): (c * v) % self.p for m, v in self.terms.items()},
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.p
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                c = (acc.get(mono, 0) + c1 * c2) % p
                if c:
                    acc[mono] = c
                else:
                    acc.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out.p, out.nvars, out.terms, out._key = p, self.nvars, acc, None
        return out

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ConfigError("negative polynomial power")
        result = Polynomial.one(self.p, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self, q: int) -> "Polynomial":
        """Raise to the q-th power for q a power of the characteristic.

        Termwise: (sum c_m x^m)^q = sum c_m x^{qm} since c^p = c in F_p.
        """
        return Polynomial(
            self.p, self.nvars, {mono_pow(m, q): c for m, c in self.terms.items()}
        )

    # -- structure -----------------------------------------------------

    def leading(self, order: MonomialOrder):
        """(monomial, coefficient) of the largest term under order."""
        if not self.terms:
            raise ConfigError("leading term of the zero polynomial")
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        if c == 1:
            return self
        return self.scale(PrimeField(self.p).inv(c))

    def weighted_degrees(self, weights) -> set:
        return {weighted_degree(m, weights) for m in self.terms}

    def is_weighted_homogeneous(self, weights) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def max_weighted_degree(self, weights) -> int:
        if not self.terms:
            return 0
        return max(weighted_degree(m, weights) for m in self.terms)

    def to_text(self, var_names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items(), reverse=True):
            factors = []
            if coeff != 1 or all(e == 0 for e in mono):
                factors.append(str(coeff))
            for name, e in zip(var_names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"Polynomial<{self.to_text(names)} mod {self.p}>"
