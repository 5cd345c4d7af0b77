"""Exact arithmetic over the Gaussian integers Z[i].

Everything downstream (state vectors, projectors, unitary lifts) is built on
this ring so that no floating point number ever enters a computation.  A
Gaussian integer is a pair of ordinary Python integers, so all arithmetic is
arbitrary precision for free.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """A complex number re + im*i with integer parts."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """The field norm re**2 + im**2 (a non-negative ordinary integer)."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def scale(self, k: int) -> "GaussianInt":
        return GaussianInt(self.re * k, self.im * k)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{imag}"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I_UNIT = GaussianInt(0, 1)

#: The four units of Z[i], in rotation order (multiplying by I_UNIT steps once).
UNITS = (ONE, I_UNIT, GaussianInt(-1, 0), GaussianInt(0, -1))


def gint(re: int = 0, im: int = 0) -> GaussianInt:
    return GaussianInt(re, im)


def divmod_nearest(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Divide a by b rounding each coordinate to the nearest integer.

    The remainder r = a - q*b then satisfies norm(r) <= norm(b)/2, which is
    what makes the Euclidean algorithm below terminate.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero Gaussian integer")
    n = b.norm()
    t = a * b.conj()
    q = GaussianInt(_round_half(t.re, n), _round_half(t.im, n))
    return q, a - q * b


def _round_half(num: int, den: int) -> int:
    """Round num/den (den > 0) to a nearest integer, exactly."""
    q, r = divmod(num, den)
    if 2 * r >= den:
        q += 1
    return q


def exact_div(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Divide a by b, raising if b does not divide a exactly."""
    q, r = divmod_nearest(a, b)
    if not r.is_zero():
        raise ValueError(f"{a} is not divisible by {b}")
    return q


def gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """A greatest common divisor of a and b (determined up to a unit)."""
    while not b.is_zero():
        _, r = divmod_nearest(a, b)
        a, b = b, r
    return a


def gcd_many(values: tuple[GaussianInt, ...]) -> GaussianInt:
    g = ZERO
    for v in values:
        g = gcd(g, v)
        if g.norm() == 1:
            break
    return g


# --- small exact matrices ------------------------------------------------
#
# Matrices are tuples of row tuples of GaussianInt.  Only 2x2 and 4x4 sizes
# occur, so plain loops are both the simplest and the fastest option here.

Matrix = tuple[tuple[GaussianInt, ...], ...]


def mat_identity(n: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(a: Matrix, c: GaussianInt) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(
            sum((x * y for x, y in zip(row, col)), ZERO)
            for col in cols
        )
        for row in a
    )


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for ra in a:
        for rb in b:
            rows.append(tuple(x * y for x in ra for y in rb))
    return tuple(rows)


def mat_conj_transpose(a: Matrix) -> Matrix:
    return tuple(
        tuple(a[j][i].conj() for j in range(len(a))) for i in range(len(a[0]))
    )


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b
