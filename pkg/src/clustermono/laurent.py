"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is a map from exponent tuples (any signed ints) to nonzero
Python ints.  Values are immutable; every operation returns a new object.

Terms are ordered lexicographically on exponent tuples, ``x1`` most
significant, largest first.  That order drives printing, iteration and the
leading term used by :func:`exact_div`.

Text format::

    x1*x3 + x2 + 1
    3*x1^2*x2^-1 - x3
"""
from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import DivisionError, DomainError, ResourceError, StructuralError
from .seqprops import CoefficientArray

__all__ = [
    "LaurentPolynomial",
    "NormalForm",
    "exact_div",
    "normalize",
    "evaluate",
    "coefficient_array",
    "parse",
    "MAX_DENSE_CELLS",
]

MAX_DENSE_CELLS = 10**8


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPolynomial:
    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Optional[Mapping] = None):
        if int(rank) < 1:
            raise StructuralError(f"rank must be positive, got {rank}")
        rank = int(rank)
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise StructuralError(f"exponent {exp} does not have length {rank}")
            if int(coeff) != coeff:
                raise DomainError(f"coefficient {coeff!r} is not an integer")
            coeff = int(coeff)
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        self.rank = rank
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, rank, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    def __getstate__(self):
        return self.rank, self._terms

    def __setstate__(self, state):
        self.rank, self._terms = state
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, rank):
        return cls._raw(rank, {})

    @classmethod
    def constant(cls, value, rank):
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def one(cls, rank):
        return cls.constant(1, rank)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1):
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, index: int, rank: int):
        """The generator ``x_{index+1}`` (0-based ``index``)."""
        if not 0 <= index < rank:
            raise StructuralError(f"variable index {index} out of range for rank {rank}")
        exp = [0] * rank
        exp[index] = 1
        return cls._raw(rank, {tuple(exp): 1})

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None, names=None):
        return parse(text, rank, names)

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order (lexicographically largest first)."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def leading_term(self):
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def min_exponents(self) -> tuple:
        if not self._terms:
            raise DomainError("zero polynomial has no support")
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> tuple:
        if not self._terms:
            raise DomainError("zero polynomial has no support")
        return tuple(max(col) for col in zip(*self._terms))

    def is_polynomial(self):
        return all(e >= 0 for exp in self._terms for e in exp)

    def coefficient(self, exponents) -> int:
        return self._terms.get(tuple(exponents), 0)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.rank != self.rank:
                raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.rank)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = {}
        get = out.get
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(map(int.__add__, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(self.rank, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.is_monomial():
                (exp, c), = self._terms.items()
                if c not in (1, -1):
                    raise DomainError("monomial inverse needs a unit coefficient")
                return LaurentPolynomial._raw(
                    self.rank, {tuple(k * e for k in exp): c ** (-e)})
            raise DomainError("negative power of a non-monomial")
        result = LaurentPolynomial.one(self.rank)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, exponents: Sequence[int]):
        """Multiply by the monomial ``x^exponents``."""
        exponents = tuple(exponents)
        if len(exponents) != self.rank:
            raise StructuralError("shift vector has wrong length")
        return LaurentPolynomial._raw(
            self.rank, {_add_exp(e, exponents): c for e, c in self._terms.items()})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return exact_div(self, other)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.rank)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    # -- text ------------------------------------------------------------

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.rank)]
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(names, exp) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPolynomial({self.rank}, {self.to_text()!r})"

    # -- conveniences ----------------------------------------------------

    def exact_div(self, other):
        return exact_div(self, other)

    def normalize(self):
        return normalize(self)

    def evaluate(self, point):
        return evaluate(self, point)

    def coefficient_array(self):
        return coefficient_array(self)


@dataclass(frozen=True)
class NormalForm:
    """``numerator / prod(x_j ** dvector[j])`` with a polynomial numerator
    in which every variable reaches exponent 0."""

    numerator: LaurentPolynomial
    dvector: tuple

    def reconstruct(self) -> LaurentPolynomial:
        return self.numerator.shift(tuple(-d for d in self.dvector))

    def to_text(self, names=None) -> str:
        # negative d-vector entries belong upstairs
        top = self.numerator.shift(tuple(-d if d < 0 else 0 for d in self.dvector))
        num = top.to_text(names)
        names = names or [f"x{i + 1}" for i in range(len(self.dvector))]
        den = "*".join(n if d == 1 else f"{n}^{d}"
                       for n, d in zip(names, self.dvector) if d > 0)
        return f"({num})/({den})" if den else num


def exact_div(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``r`` with ``r * q == p``; raise :class:`DivisionError` if none exists.

    Both operands are shifted to polynomials with no monomial factor, then
    divided by leading terms in lexicographic order.  Terms whose leading
    monomial or coefficient does not divide go to the remainder.
    """
    if not isinstance(q, LaurentPolynomial):
        q = LaurentPolynomial.constant(q, p.rank)
    if p.rank != q.rank:
        raise StructuralError(f"rank mismatch: {p.rank} vs {q.rank}")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if p.is_zero():
        return p
    rank = p.rank
    if q.is_monomial():
        (qe, qc), = q._terms.items()
        out, rem = {}, {}
        for e, c in p._terms.items():
            if c % qc:
                rem[e] = c
            else:
                out[_sub_exp(e, qe)] = c // qc
        if rem:
            raise DivisionError("coefficients not divisible",
                                LaurentPolynomial._raw(rank, rem))
        return LaurentPolynomial._raw(rank, out)

    pmin, qmin = p.min_exponents(), q.min_exponents()
    P = {_sub_exp(e, pmin): c for e, c in p._terms.items()}
    Q = [(_sub_exp(e, qmin), c) for e, c in q._terms.items()]
    lead_e, lead_c = max(Q)
    quotient, residue = {}, {}
    while P:
        e = max(P)
        c = P[e]
        d = _sub_exp(e, lead_e)
        if min(d) < 0 or c % lead_c:
            residue[e] = P.pop(e)
            continue
        f = c // lead_c
        quotient[d] = f
        for qe, qc in Q:
            t = _add_exp(d, qe)
            v = P.get(t, 0) - f * qc
            if v:
                P[t] = v
            else:
                P.pop(t, None)
    if residue:
        rem = LaurentPolynomial._raw(rank, residue).shift(pmin)
        raise DivisionError(f"not divisible; remainder {rem}", rem)
    return LaurentPolynomial._raw(rank, quotient).shift(_sub_exp(pmin, qmin))


def normalize(p: LaurentPolynomial) -> NormalForm:
    if p.is_zero():
        raise DomainError("the zero polynomial has no normal form")
    dvec = tuple(-m for m in p.min_exponents())
    return NormalForm(p.shift(dvec), dvec)


def evaluate(p: LaurentPolynomial, point: Sequence) -> Fraction:
    """Exact value at a point with nonzero rational coordinates."""
    if len(point) != p.rank:
        raise StructuralError(f"point has {len(point)} coordinates, rank is {p.rank}")
    point = [Fraction(v) for v in point]
    if any(v == 0 for v in point):
        raise DomainError("evaluation point has a zero coordinate")
    total = Fraction(0)
    for exp, c in p._terms.items():
        term = Fraction(c)
        for v, k in zip(point, exp):
            if k:
                term *= v ** k
        total += term
    return total


def coefficient_array(p: LaurentPolynomial) -> CoefficientArray:
    """Dense coefficients over the tight bounding box of ``p``'s support."""
    if p.is_zero():
        raise DomainError("the zero polynomial has no bounding box")
    lo, hi = p.min_exponents(), p.max_exponents()
    shape = tuple(h - l + 1 for l, h in zip(lo, hi))
    if int(np.prod(shape, dtype=object)) > MAX_DENSE_CELLS:
        raise ResourceError(f"bounding box {shape} exceeds {MAX_DENSE_CELLS} cells")
    data = np.zeros(shape, dtype=object)
    for e, c in p._terms.items():
        data[_sub_exp(e, lo)] = c
    return CoefficientArray(data, lo)


def from_coefficient_array(arr: CoefficientArray) -> LaurentPolynomial:
    return LaurentPolynomial(arr.dims, arr.to_terms())


# -- parsing -------------------------------------------------------------

_VAR = re.compile(r"x(\d+)$")


def parse(text: str, rank: Optional[int] = None,
          names: Optional[Sequence[str]] = None) -> LaurentPolynomial:
    """Parse an expression over ``+ - * / ^``, integers and variables.

    Accepts the canonical text format and anything built from it with
    parentheses and exact division, e.g. ``(x1*x3+(x2+1)^2)/(x1*x2*x3)``.
    Variables are ``x1, x2, ...`` unless ``names`` are given.  Without
    ``rank`` it is the largest variable index used (at least 1).
    """
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse {text!r}: {exc.msg}") from None

    index_of = {n: i for i, n in enumerate(names)} if names else None

    def var_index(name):
        if index_of is not None:
            if name not in index_of:
                raise DomainError(f"unknown variable {name!r}")
            return index_of[name]
        m = _VAR.match(name)
        if not m or int(m.group(1)) < 1:
            raise DomainError(f"unknown variable {name!r}")
        return int(m.group(1)) - 1

    if rank is None:
        if names:
            rank = len(names)
        else:
            used = [var_index(n.id) for n in ast.walk(tree) if isinstance(n, ast.Name)]
            rank = max(used, default=0) + 1

    def build(node):
        if isinstance(node, ast.Expression):
            return build(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return LaurentPolynomial.constant(node.value, rank)
        if isinstance(node, ast.Name):
            i = var_index(node.id)
            if i >= rank:
                raise StructuralError(f"variable {node.id} exceeds rank {rank}")
            return LaurentPolynomial.variable(i, rank)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = build(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                k = _int_literal(node.right)
                return build(node.left) ** k
            left, right = build(node.left), build(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return exact_div(left, right)
        raise DomainError(f"unsupported syntax in {text!r}")

    return build(tree)


def _int_literal(node) -> int:
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return sign * node.value
    raise DomainError("exponents must be integer literals")
