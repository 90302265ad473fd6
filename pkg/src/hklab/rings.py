"""Ring presentations: prime characteristic, weighted variables, relations.

A RingSpec describes a quotient of a polynomial ring over F_p by finitely
many weighted-homogeneous relations. Quasi-homogeneity is required so that
graded colengths agree with local colengths; users who mean a genuinely
local (non-graded) ring are outside the supported input class, which is a
documented usage caveat rather than something we try to detect.
"""

from __future__ import annotations

from .errors import ConfigError
from .fields import PrimeField
from .monomials import MonomialOrder, weighted_degree
from .parsing import parse_polynomial
from .polynomials import Polynomial


class RingSpec:
    __slots__ = ("p", "field", "vars", "weights", "relations", "_dim", "_key")

    def __init__(self, p: int, variables, weights=None, relations=()):
        self.field = PrimeField(p)
        self.p = p
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ConfigError("duplicate variable names")
        if not self.vars:
            raise ConfigError("a ring needs at least one variable")
        self.weights = tuple(weights) if weights else tuple([1] * len(self.vars))
        if len(self.weights) != len(self.vars):
            raise ConfigError("one weight per variable required")
        if any(not isinstance(w, int) or w <= 0 for w in self.weights):
            raise ConfigError(f"weights must be positive integers: {self.weights!r}")
        rels = []
        for rel in relations:
            poly = rel if isinstance(rel, Polynomial) else self.parse(rel)
            if poly.is_zero():
                continue
            degs = poly.weighted_degrees(self.weights)
            if len(degs) > 1:
                raise ConfigError(
                    f"relation {poly.to_text(self.vars)!r} is not homogeneous for "
                    f"weights {self.weights}: term degrees {sorted(degs)}"
                )
            rels.append(poly)
        self.relations = tuple(rels)
        self._dim = None
        self._key = None

    # -- basic structure -------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.vars, self.p)

    def default_order(self) -> MonomialOrder:
        # grevlex with the ring's weights: fastest for colength work and
        # compatible with the quasi-homogeneous grading.
        return MonomialOrder("grevlex", self.nvars, weights=self.weights)

    def variable(self, index: int) -> Polynomial:
        return Polynomial.variable(self.p, self.nvars, index)

    def maximal_ideal_gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def wdeg(self, mono) -> int:
        return weighted_degree(mono, self.weights)

    def key(self):
        if self._key is None:
            self._key = (
                self.p,
                self.vars,
                self.weights,
                tuple(r.key() for r in self.relations),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, RingSpec) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        rels = ", ".join(r.to_text(self.vars) for r in self.relations)
        return f"RingSpec(F{self.p}[{', '.join(self.vars)}] / ({rels or '0'}))"

    # -- dimension ---------------------------------------------------------

    @property
    def dim(self) -> int:
        """Krull dimension of the quotient, via the leading ideal of the
        relations; cached after the first computation."""
        if self._dim is None:
            from .groebner import ring_dimension

            self._dim = ring_dimension(self)
        return self._dim

    def extended(self, name: str, weight: int = 1) -> "RingSpec":
        """Adjoin one fresh variable; relations are lifted unchanged."""
        if name in self.vars:
            raise ConfigError(f"variable {name!r} already present")
        lifted = [
            Polynomial(
                self.p,
                self.nvars + 1,
                {m + (0,): c for m, c in rel.terms.items()},
            )
            for rel in self.relations
        ]
        return RingSpec(
            self.p, self.vars + (name,), self.weights + (weight,), lifted
        )
