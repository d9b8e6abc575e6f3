"""Exact multivariate polynomials over the rationals.

Polynomials are stored sparsely as a map from dense exponent tuples to
nonzero ``Fraction`` coefficients.  The arity (number of variables) is fixed
per polynomial and checked on every binary operation.  Term order throughout
is graded lexicographic: higher total degree first, ties broken by the
exponent tuple with earlier variables more significant.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def _grlex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


class ArityMismatchError(ValueError):
    """Raised when operands live in polynomial rings of different arity."""


class MPoly:
    """A multivariate polynomial with exact rational coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        self.arity = arity
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity:
                raise ArityMismatchError(f"exponent {exp} has length {len(exp)}, expected {arity}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MPoly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value) -> "MPoly":
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def variable(cls, arity: int, index: int) -> "MPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exp = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {exp: Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def sort_key(self) -> tuple:
        """A canonical total order key, for deterministic factor lists."""
        return tuple((e, (c.numerator, c.denominator)) for e, c in self.sorted_terms())

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MPoly") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        out = MPoly(self.arity)
        out.terms = terms
        return out

    def __neg__(self):
        out = MPoly(self.arity)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, Fraction(0)) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        out = MPoly(self.arity)
        out.terms = terms
        return out

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MPoly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.constant(self.arity, other)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.arity:
            raise ArityMismatchError(f"point of length {len(point)}, expected {self.arity}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(pt, exp):
                if e:
                    v *= x**e
            total += v
        return total

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Replace variable i by ``images[i]``; all images share one target arity."""
        if len(images) != self.arity:
            raise ArityMismatchError(f"{len(images)} images for arity {self.arity}")
        if not images:
            return MPoly(0, dict(self.terms))
        target = images[0].arity
        for im in images:
            if im.arity != target:
                raise ArityMismatchError("substitution images of mixed arity")
        out = MPoly.zero(target)
        for exp, c in self.terms.items():
            term = MPoly.constant(target, c)
            for im, e in zip(images, exp):
                if e:
                    term = term * im**e
            out = out + term
        return out

    def drop_variable(self, var: int) -> "MPoly":
        """Remove a variable the polynomial does not actually use."""
        if self.degree_in(var) > 0:
            raise ValueError(f"polynomial has positive degree in variable {var}")
        out = MPoly(self.arity - 1)
        out.terms = {e[:var] + e[var + 1 :]: c for e, c in self.terms.items()}
        return out

    def coefficients_in(self, var: int) -> list["MPoly"]:
        """Coefficients of var^0, var^1, ... as polynomials of the same arity."""
        d = self.degree_in(var)
        coeffs = [MPoly.zero(self.arity) for _ in range(d + 1)]
        for exp, c in self.terms.items():
            rest = exp[:var] + (0,) + exp[var + 1 :]
            coeffs[exp[var]].terms[rest] = c
        return coeffs

    # -- weighted leading forms ----------------------------------------------

    def weighted_degree(self, weights: Sequence[int]) -> int:
        if not self.terms:
            raise ValueError("weighted degree of the zero polynomial")
        if len(weights) != self.arity:
            raise ArityMismatchError("weight vector length != arity")
        return max(sum(w * e for w, e in zip(weights, exp)) for exp in self.terms)

    def leading_form(self, weights: Sequence[int]) -> "MPoly":
        """Sum of terms of maximal weighted degree."""
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        top = self.weighted_degree(weights)
        out = MPoly(self.arity)
        out.terms = {
            exp: c
            for exp, c in self.terms.items()
            if sum(w * e for w, e in zip(weights, exp)) == top
        }
        return out

    # -- normalization --------------------------------------------------------

    def primitive(self) -> "MPoly":
        """Integer-content-free scalar multiple with positive leading coefficient."""
        if not self.terms:
            return self
        den = lcm(*(c.denominator for c in self.terms.values()))
        num = gcd(*(c.numerator * den // c.denominator for c in self.terms.values()))
        scale = Fraction(den, num)
        if self.leading_term()[1] < 0:
            scale = -scale
        out = MPoly(self.arity)
        out.terms = {e: c * scale for e, c in self.terms.items()}
        return out

    def divexact(self, divisor: "MPoly") -> "MPoly":
        """Exact division; raises ValueError if the divisor does not divide."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient = MPoly.zero(self.arity)
        rem = self
        dexp, dc = divisor.leading_term()
        while not rem.is_zero():
            rexp, rc = rem.leading_term()
            qexp = tuple(a - b for a, b in zip(rexp, dexp))
            if any(e < 0 for e in qexp):
                raise ValueError("inexact polynomial division")
            q = MPoly(self.arity, {qexp: rc / dc})
            quotient = quotient + q
            rem = rem - q * divisor
        return quotient

    # -- serialization ---------------------------------------------------------

    def to_dict(self, names: Sequence[str]) -> dict:
        if len(names) != self.arity:
            raise ArityMismatchError("variable name list length != arity")
        return {
            "vars": list(names),
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "MPoly":
        arity = len(data["vars"])
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]
        }
        return cls(arity, terms)

    def to_text(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        names = [f"x{i}" for i in range(self.arity)]
        return f"MPoly({self.arity}, {self.to_text(names)})"


def sylvester_matrix(p: MPoly, q: MPoly, var: int) -> list[list[MPoly]]:
    """Sylvester matrix of p, q with respect to one variable.

    Entries are polynomials of the original arity that are constant in
    ``var``.
    """
    m, n = p.degree_in(var), q.degree_in(var)
    if m < 1 and n < 1:
        raise ValueError("both polynomials are constant in the elimination variable")
    if m < 1 or n < 1:
        raise ValueError("resultant requires positive degree in the elimination variable")
    a = p.coefficients_in(var)
    b = q.coefficients_in(var)
    size = m + n
    zero = MPoly.zero(p.arity)
    rows = []
    for shift in range(n):
        row = [zero] * size
        for i, coeff in enumerate(reversed(a)):
            row[shift + i] = coeff
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for i, coeff in enumerate(reversed(b)):
            row[shift + i] = coeff
        rows.append(row)
    return rows


def _bareiss_det(rows: list[list[MPoly]], arity: int) -> MPoly:
    # Fraction-free Gaussian elimination; every division is exact in the
    # coefficient ring, so intermediate entries stay polynomial.
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = MPoly.constant(arity, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return MPoly.zero(arity)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = MPoly.zero(arity)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: MPoly, q: MPoly, var: int) -> MPoly:
    """Sylvester resultant eliminating ``var``.

    The result is constant in ``var`` and vanishes at a point of the other
    variables exactly when the specializations of p and q share a root,
    barring vanishing leading coefficients at the specialization.
    """
    if p.arity != q.arity:
        raise ArityMismatchError(f"arity {p.arity} vs {q.arity}")
    return _bareiss_det(sylvester_matrix(p, q, var), p.arity)
