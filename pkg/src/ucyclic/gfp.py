"""Arithmetic in the prime field F_p and its polynomial ring F_p[x].

Polynomials are immutable coefficient tuples, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple and its degree is the
sentinel NEG_INF, which orders below every integer.  Beyond ring arithmetic
the module factors x^n - 1, enumerates its monic divisor lattice, and finds
the minimum Hamming weight of a cyclic code over F_p by exhaustive
enumeration of its codewords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import linalg
from .linalg import BudgetError

__all__ = [
    "NEG_INF", "BudgetError", "is_prime", "PrimeParams", "FpPoly",
    "poly_gcd", "poly_xgcd", "poly_lcm",
    "factor_xn_minus_1", "divisors_xn_minus_1", "fp_cyclic_min_weight",
]

NEG_INF = float("-inf")


def is_prime(m: int) -> bool:
    """Deterministic trial-division primality test; fine for m <= 2^16."""
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


@dataclass(frozen=True)
class PrimeParams:
    """The pair (p, k) fixing the chain ring Z_p[u]/(u^k), plus the code length n."""

    p: int
    k: int
    n: int

    def __post_init__(self):
        if not (2 <= self.p <= 1 << 16 and is_prime(self.p)):
            raise ValueError("p must be a prime in [2, 2^16]")
        if not 1 <= self.k <= 8:
            raise ValueError("k must be in [1, 8]")
        if not 1 <= self.n <= 64:
            raise ValueError("n must be in [1, 64]")

    @property
    def coprime(self) -> bool:
        """True when the code length is coprime to the characteristic."""
        return gcd(self.n, self.p) == 1


class FpPoly:
    """Dense polynomial over F_p, stored lowest degree first."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.p = p

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls((1,), p)

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, c: int, e: int, p: int) -> "FpPoly":
        return cls((0,) * e + (c,), p)

    @classmethod
    def xn_minus_1(cls, n: int, p: int) -> "FpPoly":
        return cls((-1,) + (0,) * (n - 1) + (1,), p)

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, FpPoly) and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)}, p={self.p})"

    def _check(self, other: "FpPoly"):
        if self.p != other.p:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPoly(out, self.p)

    def __neg__(self) -> "FpPoly":
        return FpPoly([-c for c in self.coeffs], self.p)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly([c * other for c in self.coeffs], self.p)
        self._check(other)
        if self.is_zero or other.is_zero:
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.p
        return FpPoly(out, self.p)

    def __rmul__(self, other: int) -> "FpPoly":
        return self * other

    def __pow__(self, e: int) -> "FpPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "FpPoly"):
        self._check(other)
        if other.is_zero:
            raise ValueError("zero divisor polynomial")
        if self.degree < other.degree:
            return FpPoly.zero(self.p), self
        p = self.p
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        binv = pow(other.lead, -1, p)
        q = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = (c * binv) % p
                q[i - db] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - db + j] = (rem[i - db + j] - f * b) % p
        return FpPoly(q, p), FpPoly(rem[:db], p)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero or self.lead == 1:
            return self
        return self * pow(self.lead, -1, self.p)

    def shift(self, e: int) -> "FpPoly":
        """Multiply by x^e."""
        if self.is_zero:
            return self
        return FpPoly((0,) * e + self.coeffs, self.p)

    def mod_xn_minus_1(self, n: int) -> "FpPoly":
        """Reduce modulo x^n - 1 by folding x^n down to 1."""
        if len(self.coeffs) <= n:
            return self
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = (out[i % n] + c) % self.p
        return FpPoly(out, self.p)

    def padded(self, n: int) -> list[int]:
        """Coefficients as a length-n list; requires degree < n."""
        if len(self.coeffs) > n:
            raise ValueError("degree too large for padding")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))


def poly_xgcd(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly, FpPoly]:
    """Extended Euclid: (g, s, t) with g monic, g = s*a + t*b."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials")
    p = a.p
    r0, r1 = a, b
    s0, s1 = FpPoly.one(p), FpPoly.zero(p)
    t0, t1 = FpPoly.zero(p), FpPoly.one(p)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(r0.lead, -1, p)
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: FpPoly, b: FpPoly) -> FpPoly:
    if a.is_zero or b.is_zero:
        return FpPoly.zero(a.p)
    return ((a * b) // poly_gcd(a, b)).monic()


def _monic_polys(d: int, p: int):
    """All monic polynomials of degree d, lexicographic in (c_0, ..., c_{d-1})."""
    for tail in itertools.product(range(p), repeat=d):
        yield FpPoly(tail + (1,), p)


def _factor_monic(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Trial-division factorization of a monic polynomial.

    Candidates of degree d are enumerated exhaustively, which costs p^d
    divisions per degree: a cost cliff for large p once factors of degree >= 2
    survive.  The x^n - 1 instances at desk sizes stay cheap.
    """
    p = f.p
    out = []
    d = 1
    while 2 * d <= f.degree:
        for q in _monic_polys(d, p):
            if (f % q).is_zero:
                m = 0
                while (f % q).is_zero:
                    f = f // q
                    m += 1
                out.append((q, m))
                if 2 * d > f.degree:
                    break
        d += 1
    if f.degree >= 1:
        out.append((f, 1))
    return out


def factor_xn_minus_1(params: PrimeParams) -> list[tuple[FpPoly, int]]:
    """Irreducible factorization of x^n - 1 over F_p as (monic factor, multiplicity).

    With n = p^a * m and gcd(m, p) = 1, x^n - 1 = (x^m - 1)^(p^a); the
    squarefree part x^m - 1 is factored by trial division and every
    multiplicity is then scaled by p^a.  Sorted by (degree, coefficients).
    """
    p, n = params.p, params.n
    a, m = 0, n
    while m % p == 0:
        m //= p
        a += 1
    mult = p ** a
    facs = [(q, e * mult) for q, e in _factor_monic(FpPoly.xn_minus_1(m, p))]
    facs.sort(key=lambda qe: (qe[0].degree, qe[0].coeffs))
    return facs


def divisors_xn_minus_1(params: PrimeParams, cap: int = 1 << 20) -> list[FpPoly]:
    """All monic divisors of x^n - 1 over F_p, sorted by (degree, coefficients)."""
    facs = factor_xn_minus_1(params)
    count = 1
    for _, e in facs:
        count *= e + 1
    if count > cap:
        raise ValueError(f"divisor lattice too large: {count} divisors exceed cap {cap}")
    pows = []
    for q, e in facs:
        acc = [FpPoly.one(params.p)]
        for _ in range(e):
            acc.append(acc[-1] * q)
        pows.append(acc)
    divs = []
    for combo in itertools.product(*(range(len(ps)) for ps in pows)):
        d = FpPoly.one(params.p)
        for ps, e in zip(pows, combo):
            d = d * ps[e]
        divs.append(d)
    divs.sort(key=lambda f: (f.degree, f.coeffs))
    return divs


def fp_cyclic_min_weight(gen: FpPoly, params: PrimeParams, budget: int = 1 << 24) -> int:
    """Minimum Hamming weight of the cyclic code over F_p generated by gen.

    Exhaustive: enumerates all p^(n - deg gen) codewords m(x)*gen(x) mod x^n - 1.
    """
    p, n = params.p, params.n
    xn1 = FpPoly.xn_minus_1(n, p)
    if gen.is_zero or gen.monic() == xn1:
        raise ValueError("zero code has no minimum distance")
    gen = gen.monic()
    if not (xn1 % gen).is_zero:
        raise ValueError("generator must divide x^n - 1")
    dim = n - gen.degree
    rows = [gen.shift(j).padded(n) for j in range(dim)]
    return linalg.min_nonzero_weight(rows, p, group=1, budget=budget)
