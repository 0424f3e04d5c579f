"""Sparse multivariate polynomials over Q(i) with monomial orders.

Exponent vectors are plain tuples of non-negative ints; a polynomial is a
dict mapping exponent vectors to nonzero :class:`GaussRat` coefficients.
Monomial orders are small singleton objects providing a sort key; degrevlex
is the default everywhere, lex is available on request.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import sympy

from .scalars import GaussRat, ONE

# canonical short aliases for scenario files: x,y,z,w == x1..x4
ALIASES = ("x", "y", "z", "w")


class MonomialOrder:
    name = "base"

    def key(self, exps):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return tuple(exps)


DEGREVLEX = DegRevLex()
LEX = Lex()

ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}


def var_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


class MultiPoly:
    """Polynomial in Q(i)[x1..xn], stored sparsely."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, GaussRat] | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError("exponent arity mismatch")
                    self.terms[tuple(e)] = GaussRat.from_value(c)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        c = GaussRat.from_value(c)
        return cls(nvars, {tuple([0] * nvars): c} if c else {})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): ONE})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): GaussRat.from_value(c)})

    # -- ring operations ----------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    def __neg__(self):
        r = MultiPoly(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(GaussRat.from_value(other))
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = GaussRat.from_value(c)
        r = MultiPoly(self.nvars)
        if c:
            r.terms = {e: cc * c for e, cc in self.terms.items()}
        return r

    def mul_monomial(self, exps, c=1) -> "MultiPoly":
        c = GaussRat.from_value(c)
        r = MultiPoly(self.nvars)
        if c:
            r.terms = {
                tuple(a + b for a, b in zip(e, exps)): cc * c
                for e, cc in self.terms.items()
            }
        return r

    # -- inspection ----------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self, order: MonomialOrder = DEGREVLEX):
        """Return (exps, coeff) of the leading term."""
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> GaussRat:
        return self.terms.get(tuple([0] * self.nvars), GaussRat(0))

    def diff(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MultiPoly(self.nvars, out)

    def eval_complex(self, point) -> complex:
        """Evaluate at a tuple of python/numpy complex numbers."""
        total = 0
        for e, c in self.terms.items():
            v = c.to_complex()
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def subs_polys(self, values: list["MultiPoly"]) -> "MultiPoly":
        """Substitute each variable by a polynomial (in the target ring)."""
        n_out = values[0].nvars
        acc = MultiPoly.zero(n_out)
        for e, c in self.terms.items():
            term = MultiPoly.constant(n_out, c)
            for v, k in zip(values, e):
                for _ in range(k):
                    term = term * v
            acc = acc + term
        return acc

    # -- conversion -----------------------------------------------------
    def to_sympy(self, symbols):
        expr = sympy.Integer(0)
        for e, c in sorted(self.terms.items()):
            mono = sympy.Integer(1)
            for s, k in zip(symbols, e):
                if k:
                    mono *= s**k
            coeff = sympy.Rational(c.re) + sympy.Rational(c.im) * sympy.I
            expr += coeff * mono
        return expr

    def __repr__(self):
        if not self.terms:
            return "0"
        names = var_names(self.nvars)
        parts = []
        for e in sorted(self.terms, key=DEGREVLEX.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e) if k
            )
            parts.append(f"({c}){'*' + mono if mono else ''}")
        return " + ".join(parts)


def parse_poly(text: str, nvars: int) -> MultiPoly:
    """Parse a polynomial string in x1..xn (aliases x,y,z,w), Q(i) coefficients."""
    local = {}
    syms = []
    for i in range(nvars):
        s = sympy.Symbol(f"x{i + 1}")
        syms.append(s)
        local[f"x{i + 1}"] = s
        if i < len(ALIASES):
            local[ALIASES[i]] = s
    local["i"] = sympy.I
    local["I"] = sympy.I
    local["t"] = sympy.Symbol("t")  # rejected below; clearer error
    expr = sympy.sympify(text, locals=local, rational=True)
    expr = sympy.expand(expr)
    poly = MultiPoly.zero(nvars)
    for term in sympy.Add.make_args(expr):
        coeff, mono = term.as_independent(*syms)
        exps = [0] * nvars
        for factor in sympy.Mul.make_args(mono):
            base, exp = factor.as_base_exp()
            if base is sympy.S.One:
                continue
            if base not in syms:
                raise ValueError(f"unknown symbol {base} in polynomial {text!r}")
            if not (exp.is_Integer and exp >= 0):
                raise ValueError(f"non-polynomial exponent in {text!r}")
            exps[syms.index(base)] += int(exp)
        re, im = coeff.as_real_imag()
        if not (re.is_Rational and im.is_Rational):
            raise ValueError(f"non-rational coefficient {coeff} in {text!r}")
        poly = poly + MultiPoly.monomial(
            nvars, exps, GaussRat(Fraction(re.p, re.q), Fraction(im.p, im.q))
        )
    return poly


def parse_polys(texts: Iterable[str], nvars: int) -> list[MultiPoly]:
    return [parse_poly(t, nvars) for t in texts]
