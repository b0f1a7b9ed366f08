"""Exact rational functions in x_1, ..., x_N and q over the integers.

Denominators are kept in factored form: a positive integer scalar times a
multiset of canonical polynomial factors.  Factors stay canonical in the
sense of :meth:`qglk.poly.Poly.extract_unit` (primitive, exponent floor
zero, positive leading coefficient); monomial and constant content is
absorbed into the numerator and the scalar on construction.  Cancellation
runs factor by factor through exact division, so no multivariate gcd is
ever needed.
"""

import random
from fractions import Fraction

from .laurent import LaurentScalar
from .poly import Poly


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a denominator zero."""


class RationalFunction:
    __slots__ = ("nvars", "num", "den_scalar", "den_factors", "_den_poly")

    def __init__(self, nvars, num, den_factors=(), den_scalar=1):
        if not isinstance(num, Poly) or num.nvars != nvars:
            raise ValueError("numerator must be a Poly in the same variables")
        if den_scalar == 0:
            raise ZeroDivisionError("zero denominator scalar")
        if den_scalar < 0:
            den_scalar = -den_scalar
            num = -num

        merged = {}
        for f, m in den_factors:
            if m == 0:
                continue
            if m < 0:
                raise ValueError("denominator multiplicities must be positive")
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            canon, shift, sign, content = f.extract_unit()
            den_scalar *= content**m
            if sign < 0 and m % 2:
                num = -num
            if any(shift):
                num = num.shift_exps(tuple(-s * m for s in shift))
            if not canon.is_one():
                merged[canon] = merged.get(canon, 0) + m

        if num.is_zero():
            self.nvars = nvars
            self.num = num
            self.den_scalar = 1
            self.den_factors = ()
            self._den_poly = None
            return

        # cancel small factors first: they divide out most often
        for f in sorted(merged, key=lambda p: (len(p.terms), term_sort_key(p))):
            m = merged[f]
            while m > 0:
                quo = num.exact_div(f)
                if quo is None:
                    break
                num = quo
                m -= 1
            merged[f] = m

        from math import gcd

        g = gcd(num.content(), den_scalar)
        if g > 1:
            num = Poly(nvars, {e: c // g for e, c in num.terms.items()})
            den_scalar //= g

        self.nvars = nvars
        self.num = num
        self.den_scalar = den_scalar
        self.den_factors = tuple(
            sorted(((f, m) for f, m in merged.items() if m), key=lambda fm: term_sort_key(fm[0]))
        )
        self._den_poly = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, Poly.zero(nvars))

    @classmethod
    def one(cls, nvars):
        return cls(nvars, Poly.one(nvars))

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, Poly.const(nvars, c))

    @classmethod
    def from_poly(cls, p):
        return cls(p.nvars, p)

    @classmethod
    def x(cls, nvars, i):
        return cls(nvars, Poly.x(nvars, i))

    @classmethod
    def q(cls, nvars, e=1):
        return cls(nvars, Poly.q(nvars, e))

    # -- structure -------------------------------------------------------

    def den_poly(self):
        if self._den_poly is None:
            d = Poly.const(self.nvars, self.den_scalar)
            for f, m in self.den_factors:
                d = d * f**m
            self._den_poly = d
        return self._den_poly

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return not self.den_factors and self.den_scalar == 1

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def as_laurent_scalar(self):
        """Convert an x-free polynomial value to a LaurentScalar in q."""
        p = self.as_poly()
        out = {}
        for e, c in p.terms.items():
            if any(e[:-1]):
                raise ValueError(f"value depends on the x variables: {self}")
            out[e[-1]] = c
        return LaurentScalar(out)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, RationalFunction):
            raise TypeError("expected a RationalFunction")
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunction.const(self.nvars, other)
        self._check(other)
        return RationalFunction.sum(self.nvars, (self, other))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(
            self.nvars, -self.num, self.den_factors, self.den_scalar
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = RationalFunction.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalFunction(
                self.nvars, self.num * other, self.den_factors, self.den_scalar
            )
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        self._check(other)
        return RationalFunction(
            self.nvars,
            self.num * other.num,
            self.den_factors + other.den_factors,
            self.den_scalar * other.den_scalar,
        )

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = Poly.const(self.nvars, self.den_scalar)
        for f, m in self.den_factors:
            num = num * f**m
        return RationalFunction(self.nvars, num, ((self.num, 1),))

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction(
                self.nvars,
                self.num,
                self.den_factors + ((Poly.const(self.nvars, abs(other)), 1),),
                self.den_scalar * (1 if other > 0 else -1),
            )
        self._check(other)
        return self * other.inv()

    def __pow__(self, m):
        if m < 0:
            return self.inv() ** (-m)
        out = RationalFunction.one(self.nvars)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    @classmethod
    def sum(cls, nvars, items):
        """Sum with a single shared denominator, built once."""
        items = [
            it if isinstance(it, RationalFunction) else cls.from_poly(it)
            for it in items
        ]
        if not items:
            return cls.zero(nvars)
        from math import gcd

        common = {}
        scalar = 1
        for it in items:
            if it.nvars != nvars:
                raise ValueError("variable-count mismatch")
            scalar = scalar * it.den_scalar // gcd(scalar, it.den_scalar)
            for f, m in it.den_factors:
                if common.get(f, 0) < m:
                    common[f] = m
        total = Poly.zero(nvars)
        for it in items:
            part = it.num * (scalar // it.den_scalar)
            mults = dict(it.den_factors)
            for f, m in common.items():
                deficit = m - mults.get(f, 0)
                if deficit:
                    part = part * f**deficit
            total = total + part
        return cls(nvars, total, tuple(common.items()), scalar)

    # -- comparison and evaluation ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFunction.const(self.nvars, other)
        elif isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if (
            self.den_scalar == other.den_scalar
            and self.den_factors == other.den_factors
        ):
            return self.num == other.num
        return (self - other).is_zero()

    def evaluate(self, point):
        den = Fraction(self.den_scalar)
        for f, m in self.den_factors:
            v = f.evaluate(point)
            if v == 0:
                raise PoleError("denominator vanishes at the sample point")
            den *= v**m
        return self.num.evaluate(point) / den

    def __str__(self):
        num = str(self.num)
        if self.den_scalar == 1 and not self.den_factors:
            return num
        dparts = [] if self.den_scalar == 1 else [str(self.den_scalar)]
        for f, m in self.den_factors:
            body = f"({f})" if len(f.terms) > 1 else str(f)
            dparts.append(body if m == 1 else f"{body}^{m}")
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = "*".join(dparts)
        if len(dparts) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self):
        return f"RationalFunction({self})"


def term_sort_key(p):
    """Deterministic order on canonical polynomials, for stable factor tuples."""
    return tuple(sorted(p.terms.items()))


def sz_equal(a, b, trials=8, seed=0xC0FFEE, retries=64):
    """Probabilistic equality at seeded random rational points.

    Samples are drawn away from small integers so the usual difference
    denominators stay nonzero; a sample hitting a pole is redrawn.
    """
    if a.nvars != b.nvars:
        return False
    rng = random.Random(seed)
    done = 0
    attempts = 0
    while done < trials:
        attempts += 1
        if attempts > trials + retries:
            raise PoleError("could not find pole-free sample points")
        point = tuple(
            Fraction(rng.randint(2, 10**6), rng.randint(2, 997))
            for _ in range(a.nvars)
        )
        try:
            if a.evaluate(point) != b.evaluate(point):
                return False
        except PoleError:
            continue
        done += 1
    return True


# -- parsing ----------------------------------------------------------------


class _Parser:
    def __init__(self, text, nvars):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"parse error at column {self.pos}: {msg}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self):
        v = self.expr()
        if self.peek():
            self.error("trailing input")
        return v

    def expr(self):
        if self.peek() == "-":
            self.pos += 1
            v = -self.term()
        else:
            v = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                v = v * self.factor()
            elif ch == "/":
                self.pos += 1
                v = v / self.factor()
            else:
                return v

    def factor(self):
        if self.peek() == "-":
            self.pos += 1
            return -self.factor()
        v = self.atom()
        if self.peek() == "^":
            self.pos += 1
            neg = False
            if self.peek() == "-":
                self.pos += 1
                neg = True
            e = self.integer()
            v = v ** (-e if neg else e)
        return v

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            self.take(")")
            return v
        if ch.isdigit():
            return RationalFunction.const(self.nvars, self.integer())
        if ch == "q":
            self.pos += 1
            return RationalFunction.q(self.nvars)
        if ch == "x":
            self.pos += 1
            i = self.integer()
            if not 1 <= i <= self.nvars - 1:
                self.error(f"variable x{i} out of range")
            return RationalFunction.x(self.nvars, i)
        self.error("expected a term")

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])


def parse(text, nvars):
    """Parse expressions in x1..x{nvars-1} and q into a RationalFunction."""
    return _Parser(text, nvars).parse()
