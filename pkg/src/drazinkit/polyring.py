"""Univariate polynomials over Q and minimal polynomials of matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatch, ZeroPolynomial
from .exactmat import ONE, ZERO, Matrix, mat_mul, to_fraction


class Polynomial:
    """Dense polynomial, coefficients in ascending degree order.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, *roots) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Polynomial(c / lc for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = to_fraction(other)
            return Polynomial(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        quo = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lc
                quo[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return Polynomial(quo), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a) -> "Polynomial":
        """p(λ + a), by Horner in polynomial arithmetic."""
        lin = Polynomial([to_fraction(a), 1])
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + Polynomial([c])
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({format_expanded(self)})"

    def __str__(self) -> str:
        return format_factored(self)


LAMBDA = Polynomial([0, 1])


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    return ((p * q) // poly_gcd(p, q)).monic()


def poly_gcd_lcm(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    return poly_gcd(p, q), poly_lcm(p, q)


def split_lambda_power(p: Polynomial) -> tuple[int, Polynomial]:
    """Write p = λ^k · f with f(0) != 0."""
    if p.is_zero():
        raise ZeroPolynomial("cannot split the zero polynomial")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    return k, Polynomial(p.coeffs[k:])


def eval_at_matrix(p: Polynomial, A: Matrix) -> Matrix:
    if not A.is_square:
        raise DimensionMismatch("polynomial evaluated at a non-square matrix")
    n = A.rows
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in reversed(p.coeffs):
        acc = mat_mul(acc, A) + ident.scale(c)
    return acc


def min_poly(A: Matrix) -> Polynomial:
    """Minimal polynomial from the first linear dependence among vec(A^0), vec(A^1), ...

    Each new power is reduced against the echelon basis built so far while
    tracking its expression in the powers; the first vector that reduces to
    zero yields the monic relation.
    """
    if not A.is_square:
        raise DimensionMismatch(f"minimal polynomial of non-square matrix {A.shape}")
    n = A.rows
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []  # (pivot, vec, combo)
    power = Matrix.identity(n)
    d = 0
    while True:
        vec = [x for r in power._data for x in r]
        combo = [ZERO] * d + [ONE]
        for piv, bvec, bcombo in basis:
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, bvec)]
                combo = [x - f * y for x, y in zip(combo, bcombo + [ZERO] * (len(combo) - len(bcombo)))]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is None:
            return Polynomial(combo)
        inv = 1 / vec[piv]
        basis.append((piv, [x * inv for x in vec], [x * inv for x in combo]))
        power = mat_mul(power, A)
        d += 1


# -- formatting -----------------------------------------------------------


def _coef_str(c: Fraction, var: str) -> str:
    if c.denominator != 1:
        return f"({c}){var}"
    if c == 1:
        return var
    return f"{c}{var}"


def format_expanded(p: Polynomial, var: str = "l") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = _coef_str(a, mono)
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_factored(p: Polynomial, var: str = "l") -> str:
    """Render as λ^k · (rest), the form the CLI prints, e.g. 'l^3 * (l^2 + 4l + 4)'."""
    if p.is_zero():
        return "0"
    k, f = split_lambda_power(p)
    head = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if f.degree == 0:
        if not head:
            return format_expanded(f, var)
        return head if f.coeffs[0] == 1 else f"{f.coeffs[0]} * {head}"
    if not head:
        return format_expanded(f, var)
    return f"{head} * ({format_expanded(f, var)})"
