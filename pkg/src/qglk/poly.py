"""Sparse Laurent polynomials with integer coefficients.

The variables are x_1, ..., x_N and q, in that fixed global order.  A term
exponent is a tuple of N+1 integers with the q exponent in the last slot;
exponents may be negative.  ``nvars`` always counts q, so a polynomial in
x_1, x_2, q has ``nvars == 3``.

Values are immutable once constructed and every operation returns a fresh
value, so instances can be shared freely.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple


def term_key(exps):
    """Total-degree-then-lexicographic sort key for an exponent tuple."""
    return (sum(exps), exps)


class Monomial(NamedTuple):
    """A single Laurent monomial: x_1^a_1 ... x_N^a_N q^b."""

    x_exps: tuple
    q_exp: int

    @classmethod
    def from_exps(cls, exps):
        return cls(tuple(exps[:-1]), exps[-1])

    @classmethod
    def one(cls, n_x):
        return cls((0,) * n_x, 0)

    def exps(self):
        return self.x_exps + (self.q_exp,)

    def mul(self, other):
        if len(other.x_exps) != len(self.x_exps):
            raise ValueError("variable-count mismatch")
        return Monomial(
            tuple(a + b for a, b in zip(self.x_exps, other.x_exps)),
            self.q_exp + other.q_exp,
        )

    def inverse(self):
        return Monomial(tuple(-a for a in self.x_exps), -self.q_exp)

    def power(self, m):
        return Monomial(tuple(a * m for a in self.x_exps), self.q_exp * m)

    def is_trivial(self):
        return self.q_exp == 0 and not any(self.x_exps)

    def to_poly(self, coeff=1):
        return Poly(len(self.x_exps) + 1, {self.exps(): coeff})


class Poly:
    """Sparse Laurent polynomial over the integers."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    if len(exps) != nvars:
                        raise ValueError("exponent tuple has wrong length")
                    clean[tuple(exps)] = coeff
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def x(cls, nvars, i):
        """The variable x_i (1-based); valid for 1 <= i <= nvars - 1."""
        if not 1 <= i <= nvars - 1:
            raise ValueError("x index out of range")
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def q(cls, nvars, e=1):
        exps = [0] * nvars
        exps[-1] = e
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            nc = terms.get(e, 0) + c
            if nc:
                terms[e] = nc
            else:
                terms.pop(e, None)
        return Poly(self.nvars, terms)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        n = self.nvars
        out = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    del out[e]
        return Poly(n, out)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one(self.nvars)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def leading_exps(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=term_key)

    def leading_coeff(self):
        return self.terms[self.leading_exps()]

    def content(self):
        """gcd of the absolute values of all coefficients (0 for the zero poly)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
            if g == 1:
                return 1
        return g

    def exponent_floor(self):
        """Componentwise minimum exponent over all terms."""
        if not self.terms:
            raise ValueError("zero polynomial")
        mins = None
        for e in self.terms:
            if mins is None:
                mins = list(e)
            else:
                for i, v in enumerate(e):
                    if v < mins[i]:
                        mins[i] = v
        return tuple(mins)

    def shift_exps(self, shift):
        n = self.nvars
        return Poly(
            n, {tuple(e[i] + shift[i] for i in range(n)): c for e, c in self.terms.items()}
        )

    def extract_unit(self):
        """Write self = sign * content * X^shift * canonical.

        ``canonical`` is primitive, has exponent floor zero in every variable
        and a positive leading coefficient.  Returns
        (canonical, shift, sign, content); self must be nonzero.
        """
        shift = self.exponent_floor()
        g = self.content()
        shifted = self.shift_exps(tuple(-s for s in shift))
        sign = 1 if shifted.leading_coeff() > 0 else -1
        canonical = Poly(
            self.nvars, {e: c // (sign * g) for e, c in shifted.terms.items()}
        )
        return canonical, shift, sign, g

    def exact_div(self, other):
        """Exact quotient self / other, or None when it does not divide.

        Division is taken in the Laurent ring, so monomial factors never
        obstruct divisibility.
        """
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return Poly.zero(self.nvars)
        n = self.nvars
        shift_s = self.exponent_floor()
        shift_o = other.exponent_floor()
        num = {
            tuple(e[i] - shift_s[i] for i in range(n)): c for e, c in self.terms.items()
        }
        den = {
            tuple(e[i] - shift_o[i] for i in range(n)): c for e, c in other.terms.items()
        }
        dlead = max(den, key=term_key)
        dlc = den[dlead]
        quo = {}
        while num:
            lead = max(num, key=term_key)
            c = num[lead]
            qexp = tuple(lead[i] - dlead[i] for i in range(n))
            if any(e < 0 for e in qexp) or c % dlc:
                return None
            qc = c // dlc
            quo[qexp] = qc
            for e, dc in den.items():
                t = tuple(qexp[i] + e[i] for i in range(n))
                nc = num.get(t, 0) - qc * dc
                if nc:
                    num[t] = nc
                else:
                    num.pop(t, None)
        off = tuple(shift_s[i] - shift_o[i] for i in range(n))
        return Poly(n, {tuple(e[i] + off[i] for i in range(n)): c for e, c in quo.items()})

    def evaluate(self, point):
        """Evaluate at a tuple of Fractions ordered (x_1, ..., x_N, q)."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for base, exp in zip(point, e):
                if exp:
                    v *= Fraction(base) ** exp
            total += v
        return total

    def var_name(self, i):
        return "q" if i == self.nvars - 1 else f"x{i + 1}"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=term_key, reverse=True):
            c = self.terms[e]
            factors = []
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                name = self.var_name(i)
                factors.append(name if exp == 1 else f"{name}^{exp}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"
