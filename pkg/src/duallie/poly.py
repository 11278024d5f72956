"""Univariate polynomials over Q: characteristic polynomials, factoring, Sturm counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .linalg import ONE, ZERO, Matrix, frac


def _strip(cs: Sequence[Fraction]) -> tuple:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree; the zero polynomial has no coefficients."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(frac(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Polynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, root) -> "Polynomial":
        """t - root."""
        return cls((-frac(root), 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(tuple((a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = frac(other)
            return Polynomial(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial") -> tuple:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        lc = other.leading
        q = [ZERO] * max(len(r) - d, 0)
        while len(r) - 1 >= d and r:
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[i + k] -= f * c
            r.pop()
            while r and not r[-1]:
                r.pop()
        return Polynomial(tuple(q)), Polynomial(tuple(r))

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.leading
        return Polynomial(tuple(c / lc for c in self.coeffs))

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        n = m.ncols
        acc = Matrix.zeros(n, n)
        eye = Matrix.identity(n)
        for c in reversed(self.coeffs):
            acc = acc @ m + eye.scale(c)
        return acc

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def char_poly(m: Matrix) -> Polynomial:
    """det(tI - m) by the Faddeev-LeVerrier recurrence."""
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.ncols
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    eye = Matrix.identity(n)
    mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = m @ mk + eye.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return Polynomial(tuple(coeffs))


def square_free_decomposition(p: Polynomial) -> list:
    """Yun's algorithm: monic p = prod s_k^k with s_k square-free and pairwise coprime."""
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = p.monic()
    out = []
    if f.degree == 0:
        return out
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _integer_coeffs(p: Polynomial) -> list:
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def rational_roots(p: Polynomial) -> list:
    """Distinct rational roots, ascending."""
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    roots = set()
    if p.coeffs and p.coeffs[0] == 0:
        roots.add(ZERO)
        k = next(i for i, c in enumerate(p.coeffs) if c)
        p = Polynomial(p.coeffs[k:])
    if p.degree <= 0:
        return sorted(roots)
    ints = _integer_coeffs(p)
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _factor_large(q: Polynomial) -> list:
    """Irreducible monic factors of a square-free q of degree >= 4 without rational roots."""
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(q.coeffs))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for f, _ in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append(Polynomial(tuple(cs)).monic())
    return out


def factor_poly(p: Polynomial) -> list:
    """Monic irreducible factors over Q with multiplicities, sorted by (degree, coefficients).

    ``p.leading * prod(f**m)`` reproduces ``p`` exactly.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    found = []
    for s, k in square_free_decomposition(p):
        rest = s
        for r in rational_roots(s):
            lin = Polynomial.linear(r)
            found.append((lin, k))
            rest = rest // lin
        if rest.degree <= 0:
            continue
        if rest.degree <= 3:
            found.append((rest.monic(), k))
        else:
            found.extend((f, k) for f in _factor_large(rest))
    found.sort(key=lambda fm: fm[0].sort_key())
    return found


def sturm_sequence(p: Polynomial) -> list:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign_changes(signs: Iterable[int]) -> int:
    prev = 0
    changes = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def distinct_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots via a Sturm sequence on the square-free part."""
    if p.is_zero():
        raise ValueError("real roots of the zero polynomial")
    if p.degree == 0:
        return 0
    s = p // poly_gcd(p, p.derivative())
    seq = sturm_sequence(s)
    at_minus = [_sign(q.leading) * (-1) ** q.degree for q in seq]
    at_plus = [_sign(q.leading) for q in seq]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def real_root_count(p: Polynomial) -> int:
    """Real roots counted with multiplicity."""
    if p.is_zero():
        raise ValueError("real roots of the zero polynomial")
    return sum(k * distinct_real_roots(s) for s, k in square_free_decomposition(p))


def real_roots_rational(p: Polynomial) -> bool:
    """True iff every real root of p is rational (irreducible factors of degree >= 2 have none)."""
    return all(f.degree == 1 or distinct_real_roots(f) == 0 for f, _ in factor_poly(p))


def interpolate(points: Sequence[tuple]) -> Polynomial:
    """Lagrange interpolation through distinct (x, y) pairs."""
    out = Polynomial(())
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        term = Polynomial.constant(yi)
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * Polynomial((-frac(xj), ONE)) * (ONE / (frac(xi) - frac(xj)))
        out = out + term
    return out
