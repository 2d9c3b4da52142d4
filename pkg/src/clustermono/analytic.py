"""Exact univariate tools: Sturm chains, terminating 2F1, Jacobi polynomials,
and the binomial coefficient sequences that appear when cluster monomials
of rank 3 are expanded.

All arithmetic is over :class:`fractions.Fraction`; no verdict depends on
floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .errors import DomainError, PreconditionError
from .seqprops import CheckReport, CoefficientArray, Witness, is_log_concave

__all__ = [
    "UnivariatePolynomial",
    "SturmChain",
    "sturm_chain",
    "sturm_real_root_count",
    "is_real_rooted",
    "newton_implies_logconcave_check",
    "pochhammer",
    "gauss_2f1_terminating",
    "hypergeometric_polynomial",
    "jacobi_poly",
    "pfaff_check",
    "q_poly",
    "q_representations",
    "s_sequence",
    "t_sequence",
    "theta_sequence",
    "theta_factors",
]

Rational = Union[int, Fraction]


class UnivariatePolynomial:
    """Dense polynomial with rational coefficients, constant term first.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivariatePolynomial.constant(other)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({[str(c) for c in self.coeffs]})"

    @staticmethod
    def _lift(other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UnivariatePolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power")
        out = UnivariatePolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lead = other.leading
        for i in range(len(rem) - dq - 1, -1, -1):
            f = rem[i + dq] / lead
            quot[i] = f
            if f:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= f * c
        return UnivariatePolynomial(quot), UnivariatePolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UnivariatePolynomial) else UnivariatePolynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UnivariatePolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        return UnivariatePolynomial([c / self.leading for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self):
        g = self.gcd(self.derivative())
        return self // g

    def sign_at(self, x) -> int:
        """Sign at a rational point, or at +inf / -inf."""
        if self.is_zero():
            return 0
        if isinstance(x, float) and math.isinf(x):
            s = 1 if self.leading > 0 else -1
            if x < 0 and self.degree % 2:
                s = -s
            return s
        v = self(Fraction(x))
        return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SturmChain:
    chain: tuple

    def variations(self, x) -> int:
        signs = [s for s in (p.sign_at(x) for p in self.chain) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: UnivariatePolynomial) -> SturmChain:
    """``p, p', -rem(p, p'), ...`` until the remainder vanishes."""
    if p.is_zero():
        raise DomainError("Sturm chain of the zero polynomial")
    chain = [p]
    nxt = p.derivative()
    while nxt:
        chain.append(nxt)
        nxt = -(chain[-2] % chain[-1])
    return SturmChain(tuple(chain))


def _extended(x):
    if x is None:
        return None
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise DomainError("finite endpoints must be exact rationals")
    return Fraction(x)


def sturm_real_root_count(p: UnivariatePolynomial, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots in ``(lo, hi]``; endpoints may be infinite."""
    if p.is_zero():
        raise DomainError("root count of the zero polynomial")
    lo, hi = _extended(lo), _extended(hi)
    if not lo < hi:
        raise DomainError("need lo < hi")
    chain = sturm_chain(p.squarefree_part())
    return chain.variations(lo) - chain.variations(hi)


def is_real_rooted(p: UnivariatePolynomial) -> CheckReport:
    """All complex roots real, counted with multiplicity.

    Peels off ``gcd(p, p')`` repeatedly; each squarefree layer must have as
    many distinct real roots as its degree.
    """
    if p.is_zero():
        raise DomainError("real-rootedness of the zero polynomial")
    layer, examined, real = p, 0, 0
    while layer.degree > 0:
        g = layer.gcd(layer.derivative())
        part = layer // g
        n = sturm_real_root_count(part)
        examined += 1
        real += n * 1
        if n != part.degree:
            w = Witness(0, (part.degree,), (part.degree, n),
                        "squarefree layer degree vs real roots")
            return CheckReport("real_rooted", False, w, examined)
        layer = g
    return CheckReport("real_rooted", True, examined=examined)


def _integer_row(coeffs) -> list[int]:
    scale = math.lcm(*(Fraction(c).denominator for c in coeffs)) if coeffs else 1
    return [int(Fraction(c) * scale) for c in coeffs]


def newton_implies_logconcave_check(p: UnivariatePolynomial) -> CheckReport:
    """Coefficient row of a real-rooted nonnegative polynomial is log-concave."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    if any(c < 0 for c in p.coeffs):
        i = next(i for i, c in enumerate(p.coeffs) if c < 0)
        rep = CheckReport("nonnegative", False,
                          Witness(0, (i,), (p.coeffs[i],), "negative coefficient"))
        raise PreconditionError("coefficients must be nonnegative", rep)
    rooted = is_real_rooted(p)
    if not rooted.passed:
        raise PreconditionError("polynomial is not real-rooted", rooted)
    return is_log_concave(CoefficientArray.from_sequence(_integer_row(p.coeffs)))


# -- hypergeometric ------------------------------------------------------------


def pochhammer(q: Rational, n: int) -> Fraction:
    """Rising factorial ``q (q+1) ... (q+n-1)``."""
    if n < 0:
        raise DomainError("Pochhammer index must be nonnegative")
    out = Fraction(1)
    q = Fraction(q)
    for i in range(n):
        out *= q + i
    return out


def _nonpositive_int(v) -> bool:
    v = Fraction(v)
    return v.denominator == 1 and v <= 0


def _termination_index(a, b) -> int:
    stops = [-int(Fraction(v)) for v in (a, b) if _nonpositive_int(v)]
    if not stops:
        raise DomainError("2F1 does not terminate: no upper parameter is a nonpositive integer")
    return min(stops)


def hypergeometric_polynomial(a, b, c) -> UnivariatePolynomial:
    """Terminating ``2F1(a, b; c; z)`` as a polynomial in ``z``."""
    N = _termination_index(a, b)
    coeffs = []
    term = Fraction(1)
    for n in range(N + 1):
        coeffs.append(term)
        denom = (Fraction(c) + n) * (n + 1)
        if n < N and denom == 0:
            raise DomainError(f"(c)_n vanishes at n={n + 1} before the series ends")
        if n < N:
            term = term * (Fraction(a) + n) * (Fraction(b) + n) / denom
    return UnivariatePolynomial(coeffs)


def gauss_2f1_terminating(a, b, c, t) -> Fraction:
    return hypergeometric_polynomial(a, b, c)(Fraction(t))


def jacobi_poly(n: int, alpha: Rational, beta: Rational) -> UnivariatePolynomial:
    """``P_n^(alpha,beta)(x)`` from its terminating series in ``(1 - x) / 2``."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise DomainError("Jacobi parameters must exceed -1")
    if n < 0:
        raise DomainError("degree must be nonnegative")
    series = hypergeometric_polynomial(-n, 1 + alpha + beta + n, alpha + 1)
    u = UnivariatePolynomial((Fraction(1, 2), Fraction(-1, 2)))
    return (pochhammer(alpha + 1, n) / math.factorial(n)) * series(u)


def pfaff_check(a, b, c, z, form: int = 1) -> CheckReport:
    """Check a Pfaff transformation exactly in the terminating regime.

    form 1: ``2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))``, needs ``a``
    a nonpositive integer.  form 2 swaps the roles: ``(1-z)^-b 2F1(c-a, b; c;
    z/(z-1))`` with ``b`` a nonpositive integer.
    """
    a, b, c, z = (Fraction(v) for v in (a, b, c, z))
    if z == 1:
        raise DomainError("Pfaff transformation needs z != 1")
    if form == 1:
        if not _nonpositive_int(a):
            raise DomainError("form 1 needs a nonpositive integer a")
        lhs = gauss_2f1_terminating(a, b, c, z)
        rhs = (1 - z) ** int(-a) * gauss_2f1_terminating(a, c - b, c, z / (z - 1))
    elif form == 2:
        if not _nonpositive_int(b):
            raise DomainError("form 2 needs a nonpositive integer b")
        lhs = gauss_2f1_terminating(a, b, c, z)
        rhs = (1 - z) ** int(-b) * gauss_2f1_terminating(c - a, b, c, z / (z - 1))
    else:
        raise DomainError("form must be 1 or 2")
    if lhs == rhs:
        return CheckReport(f"pfaff_{form}", True, examined=1)
    return CheckReport(f"pfaff_{form}", False, Witness(0, (), (lhs, rhs)), 1)


# -- coefficient sequences -----------------------------------------------------


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _trim(seq) -> list[int]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def q_poly(a: int, b: int, N: int) -> UnivariatePolynomial:
    """``sum_j C(a, N-j) C(b, j) t^j`` for ``j = 0..N``."""
    return UnivariatePolynomial([_binom(a, N - j) * _binom(b, j) for j in range(N + 1)])


def q_representations(a: int, b: int, N: int, t) -> tuple[Fraction, Fraction, Fraction]:
    """The same value computed three ways: direct sum, scaled ``2F1``, Jacobi.

    Needs ``N <= min(a, b)`` and ``t != 1``.
    """
    t = Fraction(t)
    if not 0 <= N <= min(a, b):
        raise DomainError("need 0 <= N <= min(a, b)")
    if t == 1:
        raise DomainError("t = 1 is a pole of the Jacobi substitution")
    direct = q_poly(a, b, N)(t)
    hyper = comb(a, N) * gauss_2f1_terminating(-N, -b, a - N + 1, t)
    P = jacobi_poly(N, a - N, b - N)
    jac = (comb(a, N) * (1 - t) ** N * Fraction(math.factorial(N))
           / pochhammer(a - N + 1, N) * P((1 + t) / (1 - t)))
    return direct, hyper, jac


def s_sequence(a: int, b: int, c: int, N: int) -> list[int]:
    """``S_k = sum_{i+j=N} C(a,i) C(b,j) C(N+j+c, k)``, trailing zeros dropped."""
    pairs = [(N - j, j) for j in range(N + 1) if N - j <= a and j <= b]
    top = max((N + j + c for _, j in pairs), default=-1)
    return _trim(sum(_binom(a, i) * _binom(b, j) * _binom(N + j + c, k) for i, j in pairs)
                 for k in range(top + 1))


def t_sequence(a: int, b: int, c: int, N: int) -> list[int]:
    """``T_k = sum_{i+j=N} C(b,i) C(c,j) C(a+b+c-i, k)``, trailing zeros dropped."""
    pairs = [(i, N - i) for i in range(N + 1) if i <= b and N - i <= c]
    top = a + b + c
    return _trim(sum(_binom(b, i) * _binom(c, j) * _binom(top - i, k) for i, j in pairs)
                 for k in range(top + 1))


def theta_factors(a: int, b: int, c: int, k: int) -> tuple[list[int], list[int]]:
    """``u_r = C(a,r) C(a+b+c-r, k)`` and ``v_r = C(c,r)``."""
    u = [_binom(a, r) * _binom(a + b + c - r, k) for r in range(a + 1)]
    v = [_binom(c, r) for r in range(c + 1)]
    return u, v


def theta_sequence(a: int, b: int, c: int, k: int) -> list[int]:
    """``theta_h = sum_l C(a, h-l) C(a+b+c-h+l, k) C(c, l)`` for ``h = 0..a+c``."""
    return _trim(
        sum(_binom(a, h - l) * _binom(a + b + c - h + l, k) * _binom(c, l)
            for l in range(h + 1))
        for h in range(a + c + 1))
