"""The fifteen two-qubit Pauli observables and their product structure.

An observable is written as a pair of letters over {I, X, Y, Z} with the
qubit-1 letter first ("ZI" is sigma_z on qubit 1, "IX" is sigma_x on
qubit 2, "YY" acts on both).  Internally each observable is a vector
(x1, z1, x2, z2) over GF(2), with per-qubit letter encoding

    I = (0, 0)    X = (1, 0)    Y = (1, 1)    Z = (0, 1)

so that commutation is the vanishing of the symplectic form and
multiplication is bitwise XOR plus an explicit phase.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .gaussian import GaussianInt, Matrix, ZERO, ONE, I_UNIT, mat_kron, mat_mul

_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_LETTER = {bits: letter for letter, bits in _LETTER_TO_BITS.items()}

# Single-qubit Pauli matrices, exact.
_M_I: Matrix = ((ONE, ZERO), (ZERO, ONE))
_M_X: Matrix = ((ZERO, ONE), (ONE, ZERO))
_M_Y: Matrix = ((ZERO, -I_UNIT), (I_UNIT, ZERO))
_M_Z: Matrix = ((ONE, ZERO), (ZERO, -ONE))
_LETTER_TO_MATRIX = {"I": _M_I, "X": _M_X, "Y": _M_Y, "Z": _M_Z}


@dataclass(frozen=True, slots=True)
class Phase:
    """A power of i: one of +1, +i, -1, -i."""

    k: int  # exponent of i, reduced mod 4

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase((self.k + other.k) % 4)

    def as_gaussian(self) -> GaussianInt:
        return ((ONE, I_UNIT, -ONE, -I_UNIT))[self.k % 4]

    def __str__(self) -> str:
        return ("+1", "+i", "-1", "-i")[self.k % 4]


PLUS_ONE = Phase(0)
PLUS_I = Phase(1)
MINUS_ONE = Phase(2)
MINUS_I = Phase(3)


@dataclass(frozen=True, slots=True, order=True)
class Observable:
    """A non-identity two-qubit Pauli observable, phase-free."""

    x1: int
    z1: int
    x2: int
    z2: int

    def __post_init__(self) -> None:
        bits = (self.x1, self.z1, self.x2, self.z2)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"symplectic bits must be 0 or 1, got {bits}")
        if bits == (0, 0, 0, 0):
            raise ValueError("the identity 'II' is not an observable")

    @classmethod
    def from_string(cls, text: str) -> "Observable":
        if len(text) != 2 or any(c not in _LETTER_TO_BITS for c in text):
            raise ValueError(f"not a two-letter Pauli word: {text!r}")
        (x1, z1), (x2, z2) = _LETTER_TO_BITS[text[0]], _LETTER_TO_BITS[text[1]]
        return cls(x1, z1, x2, z2)

    @property
    def bits(self) -> tuple[int, int, int, int]:
        return (self.x1, self.z1, self.x2, self.z2)

    def letters(self) -> tuple[str, str]:
        return (
            _BITS_TO_LETTER[(self.x1, self.z1)],
            _BITS_TO_LETTER[(self.x2, self.z2)],
        )

    def __str__(self) -> str:
        return "".join(self.letters())

    def matrix(self) -> Matrix:
        """The exact 4x4 matrix (qubit-1 factor tensored first)."""
        a, b = self.letters()
        return mat_kron(_LETTER_TO_MATRIX[a], _LETTER_TO_MATRIX[b])


def obs(text: str) -> Observable:
    """Shorthand parser used throughout the package."""
    return Observable.from_string(text)


#: All fifteen observables in lexicographic letter order.
OBSERVABLES: tuple[Observable, ...] = tuple(
    obs(a + b)
    for a in "IXYZ"
    for b in "IXYZ"
    if a + b != "II"
)
assert len(OBSERVABLES) == 15


def commutes(a: Observable, b: Observable) -> bool:
    """True when a and b commute.

    Two Pauli words commute exactly when the symplectic inner product
    x1*z1' + z1*x1' + x2*z2' + z2*x2' vanishes mod 2.
    """
    s = a.x1 * b.z1 + a.z1 * b.x1 + a.x2 * b.z2 + a.z2 * b.x2
    return s % 2 == 0


# Phase of the single-letter product A*B, as a power of i.  Products follow
# the cyclic rule X*Y = iZ, Y*Z = iX, Z*X = iY, reversed order picks up -i.
_CYCLE = {("X", "Y"): 1, ("Y", "Z"): 1, ("Z", "X"): 1,
          ("Y", "X"): 3, ("Z", "Y"): 3, ("X", "Z"): 3}


def _letter_product(a: str, b: str) -> tuple[str, int]:
    if a == "I":
        return b, 0
    if b == "I":
        return a, 0
    if a == b:
        return "I", 0
    third = ({"X", "Y", "Z"} - {a, b}).pop()
    return third, _CYCLE[(a, b)]


def multiply(a: Observable, b: Observable) -> tuple[Observable | None, Phase]:
    """The product a*b as (observable, phase).

    The observable part is None when a == b, since the product is then the
    identity (with phase +1).
    """
    (a1, a2), (b1, b2) = a.letters(), b.letters()
    c1, k1 = _letter_product(a1, b1)
    c2, k2 = _letter_product(a2, b2)
    phase = Phase((k1 + k2) % 4)
    if c1 == "I" and c2 == "I":
        return None, phase
    return obs(c1 + c2), phase


@dataclass(frozen=True, slots=True, order=True)
class Triad:
    """Three mutually commuting observables whose product is sign * identity.

    Members are kept sorted by their two-letter names; that order is the
    canonical one used for eigenvalue signatures.
    """

    members: tuple[Observable, Observable, Observable]
    sign: int

    def __str__(self) -> str:
        body = ",".join(str(m) for m in self.members)
        mark = "-" if self.sign < 0 else "+"
        return f"{mark}{{{body}}}"

    def member_strings(self) -> tuple[str, str, str]:
        return tuple(str(m) for m in self.members)  # type: ignore[return-value]


def _triad_sign(a: Observable, b: Observable, c: Observable) -> int:
    prod, p1 = multiply(a, b)
    if prod != c:
        raise ValueError(f"{a}*{b} is not proportional to {c}")
    _, p2 = multiply(prod, c)
    total = (p1 * p2).as_gaussian()
    if total.im != 0 or total.re not in (1, -1):
        raise ValueError(f"triad product phase is not a sign: {total}")
    return total.re


@functools.cache
def enumerate_triads() -> tuple[Triad, ...]:
    """All 15 triads of mutually commuting observables, sorted canonically.

    Each commuting pair closes to a third observable, so triads are found by
    scanning unordered triples and keeping the pairwise-commuting ones.
    """
    found = []
    for a, b, c in itertools.combinations(sorted(OBSERVABLES, key=str), 3):
        if commutes(a, b) and commutes(a, c) and commutes(b, c):
            prod, _ = multiply(a, b)
            if prod == c:
                found.append(Triad((a, b, c), _triad_sign(a, b, c)))
    return tuple(sorted(found))


def triad_of(members: tuple[str, ...] | frozenset[str]) -> Triad:
    """Look up the triad with the given member names."""
    want = frozenset(members)
    for t in enumerate_triads():
        if frozenset(t.member_strings()) == want:
            return t
    raise KeyError(f"no triad with members {sorted(want)}")


def observable_product_matrix(a: Observable, b: Observable) -> Matrix:
    """Exact matrix product, used as an internal consistency oracle."""
    return mat_mul(a.matrix(), b.matrix())
