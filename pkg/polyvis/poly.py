# -*- coding: utf-8 -*-
# polyvis
# Copyright (C) 2025 The polyvis authors
#
# polyvis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# polyvis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exact integer polynomials and lines of sight

Polynomials are dense tuples of Python integers, constant term first, so
every evaluation is exact no matter how large F(N) = f(N)^m grows. The zero
polynomial is the empty tuple and has no degree. Gcds and squarefree
decompositions go through sympy's dense routines over ZZ.

The module also holds the structural checks the visibility code relies on:
the squarefree part (distinct-root count), detection of the excluded forms
a(ux+v)^b, and the minimal threshold n_F past which F is positive and
strictly dominates all earlier values.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from sympy import Poly, Symbol
from sympy.polys.densearith import dup_div
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_primitive_prs

from polyvis.errors import DomainError, ParseError

log = logging.getLogger(__name__)

_SYMBOL = Symbol("x")


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of x^i. Trailing zeros are stripped
    on construction, so equal polynomials compare and hash equal.
    """
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_constant(self):
        return len(self.coeffs) <= 1

    def __call__(self, x):
        return evaluate(self, x)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result, base = IntPoly((1,)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self):
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self):
        """Nonnegative gcd of the coefficients (0 for the zero polynomial).
        """
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self):
        """Divide out the content and make the leading coefficient positive.
        """
        if self.is_zero:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"IntPoly({to_text(self)!r})"


def _coerce(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    return NotImplemented


def evaluate(p, x):
    """Evaluate p at the integer x by Horner's rule (exact).

    Args:
        p (IntPoly): the polynomial; the zero polynomial evaluates to 0
        x (int): evaluation point

    Returns:
        int: p(x)
    """
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _to_dense(p):
    """Highest-degree-first coefficient list over ZZ, as sympy's dense
    routines expect."""
    return [ZZ(c) for c in reversed(p.coeffs)]


def _from_dense(f):
    return IntPoly(int(c) for c in reversed(f))


def _to_sympy(p):
    return Poly(list(reversed(p.coeffs)), _SYMBOL, domain=ZZ)


def _from_sympy(poly):
    return IntPoly(int(c) for c in reversed(poly.all_coeffs()))


def exact_quotient(a, b):
    """a / b for polynomials where b divides a in Z[x].

    Raises:
        ZeroDivisionError: if b is the zero polynomial.
        ArithmeticError: if the division leaves a remainder.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = dup_div(_to_dense(a), _to_dense(b), ZZ)
    if rem:
        raise ArithmeticError("polynomial division leaves a remainder")
    return _from_dense(quot)


def poly_gcd(a, b):
    """Primitive gcd of two polynomials.

    The last member of the primitive remainder sequence of a and b. The
    result has positive leading coefficient and content 1; the content gcd
    is dropped since only the roots matter here.
    """
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    prs = dup_primitive_prs(_to_dense(a), _to_dense(b), ZZ)
    return _from_dense(prs[-1]).primitive_part()


def squarefree_part(p):
    """Primitive polynomial with the distinct roots of p, each simple.

    Its degree is the number of distinct roots of p over the algebraic
    closure.

    Raises:
        DomainError: for the zero polynomial.
    """
    if p.is_zero:
        raise DomainError("zero polynomial has no squarefree part")
    if p.is_constant:
        return IntPoly((1,))
    return _from_sympy(_to_sympy(p).sqf_part()).primitive_part()


class PerfectPower(NamedTuple):
    """p = c * g^k with g primitive, positive leading coefficient and k
    maximal."""
    c: int
    g: IntPoly
    k: int


def perfect_power(p):
    """Split p as c * g^k with the largest possible k.

    k is the gcd of the multiplicities in the squarefree decomposition of
    p, so (x^2-1)^2 gives k = 2 and x^2*(x-1) gives k = 1.

    Raises:
        DomainError: for constant input.
    """
    if p.is_constant:
        raise DomainError("constant polynomial")
    _, factors = _to_sympy(p).sqf_list()
    k = math.gcd(*(mult for _, mult in factors))
    g = IntPoly((1,))
    for factor, mult in factors:
        g = g * _from_sympy(factor).primitive_part() ** (mult // k)
    c, rem = divmod(p.leading, g.leading ** k)
    if rem or c * g ** k != p:
        raise ArithmeticError(f"{p} is not a multiple of ({g})^{k}")
    return PerfectPower(c, g, k)


class ExcludedForm(NamedTuple):
    """Parameters of p = a * (u*x + v)^b with u > 0 and gcd(u, v) = 1."""
    a: int
    u: int
    v: int
    b: int


def is_excluded_form(p):
    """Return the excluded-form parameters of p, or None.

    p has the form a(ux+v)^b exactly when its squarefree part is linear.

    Raises:
        DomainError: for constant input.
    """
    if p.is_constant:
        raise DomainError("constant polynomial")
    sqf = squarefree_part(p)
    if sqf.degree != 1:
        return None
    v, u = sqf.coeffs
    b = p.degree
    a, rem = divmod(p.leading, u ** b)
    if rem or a * (sqf ** b) != p:
        # Gauss's lemma makes this unreachable for integer input
        raise ArithmeticError(f"{p} is not an integer multiple of ({sqf})^{b}")
    return ExcludedForm(a, u, v, b)


def _increase_bound(p):
    """Integer B such that p is strictly increasing on [B, oo).

    Cauchy's root bound applied to p' (positive leading coefficient).
    """
    dp = p.derivative()
    if dp.is_constant:
        return 0
    lead = dp.leading
    ratio = max(abs(c) for c in dp.coeffs[:-1])
    return 1 + -(-ratio // lead)


@lru_cache(maxsize=256)
def compute_nF(F):
    """Minimal n >= 0 with F(b) < F(a) and F(a) > 0 for all a > n, b < a.

    Args:
        F (IntPoly): nonconstant, positive leading coefficient

    Returns:
        int: the threshold n_F

    Raises:
        DomainError: constant input or nonpositive leading coefficient.
    """
    if F.is_constant:
        raise DomainError("constant polynomial")
    if F.leading <= 0:
        raise DomainError("nonpositive leading coefficient")
    bound = _increase_bound(F)
    m0 = max([0] + [F(x) for x in range(1, bound + 1)])
    n = max(bound - 1, 0)
    while F(n + 1) <= m0:
        n += 1
    # every a > n works; walk down while a = n still satisfies the property
    values = [F(x) for x in range(1, n + 1)]
    prefix_max = []
    running = None
    for value in values:
        prefix_max.append(running)
        running = value if running is None else max(running, value)
    while n > 0:
        fa, earlier = values[n - 1], prefix_max[n - 1]
        if fa <= 0 or (earlier is not None and fa <= earlier):
            break
        n -= 1
    log.debug("n_F(%s) = %d (increase bound %d)", F, n, bound)
    return n


def to_text(p):
    """Canonical string of p: dense descending powers, e.g. x^4-2*x^2+1.
    """
    if p.is_zero:
        return "0"
    parts = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            var = "x" if power == 1 else f"x^{power}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts)


_INT = re.compile(r"[0-9]+")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        char = text[pos]
        if char.isspace():
            pos += 1
        elif char in "0123456789":
            match = _INT.match(text, pos)
            tokens.append(("INT", int(match.group(0)), pos))
            pos = match.end()
        elif char in "x+-*^()":
            tokens.append((char, char, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {char!r}", pos)
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over the tiny expression grammar::

        expr   := ('+'|'-')? term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := base ('^' NONNEG_INT)?
        base   := INT | 'x' | '(' expr ')'
    """
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self, kind):
        token = self.peek()
        if token[0] != kind:
            found = "end of input" if token[0] == "END" else repr(token[1])
            raise ParseError(f"expected {kind!r}, found {found}", token[2])
        self.index += 1
        return token

    def parse(self):
        result = self.expr()
        token = self.peek()
        if token[0] != "END":
            raise ParseError(f"unexpected {token[1]!r}", token[2])
        return result

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        result = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            token = self.peek()
            if token[0] != "INT":
                raise ParseError(
                    "exponent must be a nonnegative integer literal", token[2])
            self.take("INT")
            return base ** token[1]
        return base

    def base(self):
        token = self.peek()
        if token[0] == "INT":
            self.take("INT")
            return IntPoly.constant(token[1])
        if token[0] == "x":
            self.take("x")
            return IntPoly.x()
        if token[0] == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if token[0] == "END" else repr(token[1])
        raise ParseError(f"expected a number, 'x' or '(', found {found}",
                         token[2])


def parse_poly(text):
    """Parse an ASCII polynomial expression into its expanded form.

    Args:
        text (string): e.g. ``"(x^2-1)^2"`` or ``"2*x+1"``

    Returns:
        IntPoly: the expanded dense polynomial

    Raises:
        ParseError: with the offending position.
    """
    return _Parser(text).parse()


@dataclass(frozen=True)
class SightLine:
    """A validated line of sight F = f^m.

    ``nF`` is the minimal threshold of F. ``nf`` is the threshold of f
    itself (max(0, f(b)) < f(a) for a > n_f); pairs above
    ``pair_threshold`` have f(a) > f(b) > 0, which the gcd sums need.
    """
    f: IntPoly
    m: int = 1
    F: IntPoly = field(init=False)
    nF: int = field(init=False)
    nf: int = field(init=False)
    distinct_roots: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DomainError("exponent m must be a positive integer")
        if self.f.is_constant:
            raise DomainError("constant polynomial")
        if self.f.leading <= 0:
            raise DomainError("nonpositive leading coefficient")
        F = self.f ** self.m
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "nF", compute_nF(F))
        object.__setattr__(self, "nf", compute_nF(self.f))
        object.__setattr__(self, "distinct_roots",
                           squarefree_part(self.f).degree)

    @classmethod
    def from_text(cls, f_text, m=1):
        return cls(parse_poly(f_text), m)

    @property
    def pair_threshold(self):
        return max(self.nF, self.nf)

    @property
    def key(self):
        """Canonical cache key of F (the expanded power)."""
        return to_text(self.F)

    def __str__(self):
        if self.m == 1:
            return to_text(self.f)
        return f"({to_text(self.f)})^{self.m}"
