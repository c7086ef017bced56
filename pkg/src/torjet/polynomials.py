"""Sparse polynomials with exact rational coefficients.

Exponent vectors are plain tuples, so the same class serves witness
polynomials in the configuration variables and polynomials in the dual
coordinates x_0..x_m.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroPolynomial
from .linalg import format_rational


class Polynomial:
    def __init__(self, coeffs: dict):
        clean = {}
        arity = None
        for expo, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            expo = tuple(int(e) for e in expo)
            if arity is None:
                arity = len(expo)
            elif len(expo) != arity:
                raise ValueError("inconsistent exponent lengths")
            clean[expo] = clean.get(expo, Fraction(0)) + c
        self.coeffs = {e: c for e, c in clean.items() if c != 0}
        self.arity = arity if arity is not None else 0

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def constant(cls, value, arity: int):
        return cls({tuple([0] * arity): value})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.coeffs)

    def evaluate(self, point) -> Fraction:
        if len(point) != self.arity and not self.is_zero():
            raise ValueError("evaluation point has wrong arity")
        total = Fraction(0)
        for expo, c in self.coeffs.items():
            term = c
            for x, e in zip(point, expo):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def scaled(self, factor) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial({e: c * factor for e, c in self.coeffs.items()})

    def terms(self):
        """Deterministic (exponent, coefficient) listing."""
        return sorted(self.coeffs.items())

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(out)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def proportional_to(self, other: "Polynomial") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.coeffs) != set(other.coeffs):
            return False
        e0 = next(iter(self.coeffs))
        ratio = other.coeffs[e0] / self.coeffs[e0]
        return all(other.coeffs[e] == c * ratio for e, c in self.coeffs.items())

    def to_json(self) -> list:
        return [
            {"exponents": list(e), "coeff": format_rational(c)}
            for e, c in self.terms()
        ]

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        parts = [f"{format_rational(c)}*x^{e}" for e, c in self.terms()]
        return "Polynomial(" + " + ".join(parts) + ")"


def initial_part(poly: Polynomial, weights):
    """Subsum of the terms whose exponent has minimal weight <exponent, weights>.

    Returns ``(initial, is_monomial)``; raises on the zero polynomial.
    """
    if poly.is_zero():
        raise ZeroPolynomial("initial form of the zero polynomial")
    weights = [Fraction(w) for w in weights]
    weighted = {
        e: sum(a * w for a, w in zip(e, weights)) for e in poly.coeffs
    }
    mu = min(weighted.values())
    initial = Polynomial({e: c for e, c in poly.coeffs.items() if weighted[e] == mu})
    return initial, initial.is_monomial()
