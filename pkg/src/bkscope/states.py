"""Exact two-qubit state vectors and the 60-state catalog.

States are unnormalized vectors a|00> + b|01> + c|10> + d|11> with Gaussian
integer coordinates.  Two vectors represent the same physical state when one
is a Gaussian-rational multiple of the other; the canonical representative
divides out the coordinate gcd and rotates the first nonzero coordinate to
a positive integer (or, failing that, into the first quadrant), so equality
of canonical forms is equality of rays.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import tables
from .gaussian import (
    GaussianInt,
    Matrix,
    ONE,
    UNITS,
    ZERO,
    exact_div,
    gcd_many,
    mat_add,
    mat_identity,
    mat_mul,
    mat_scale,
)
from .pauli import Triad, enumerate_triads, triad_of

Coords = tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]


class NotEigenstateError(ValueError):
    """Raised when a vector is not a +-1 eigenvector of an observable."""


@dataclass(frozen=True, slots=True)
class StateVec:
    """An exact projective state, always stored in canonical form."""

    coords: Coords
    label: int | None = None

    def __str__(self) -> str:
        body = ",".join(str(c) for c in self.coords)
        tag = f"{self.label} = " if self.label is not None else ""
        return f"{tag}({body})"


def canonicalize(coords: Coords) -> Coords:
    """Reduce to content 1 and rotate the leading coordinate positive.

    The unit is chosen so the first nonzero coordinate lands on the positive
    real axis when possible and in the open first quadrant otherwise, which
    makes the representative unique.
    """
    if all(c.is_zero() for c in coords):
        raise ValueError("the zero vector is not a state")
    g = gcd_many(coords)
    reduced = tuple(exact_div(c, g) for c in coords)
    lead = next(c for c in reduced if not c.is_zero())
    for u in UNITS:
        r = lead * u
        if r.re > 0 and r.im >= 0:
            return tuple(c * u for c in reduced)  # type: ignore[return-value]
    raise AssertionError("unreachable: some unit rotation lands in quadrant I")


def state(coords: Coords, label: int | None = None) -> StateVec:
    return StateVec(canonicalize(coords), label)


def inner_product(a: StateVec, b: StateVec) -> GaussianInt:
    """The exact Hermitian inner product <a|b> of canonical representatives."""
    total = ZERO
    for x, y in zip(a.coords, b.coords):
        total = total + x.conj() * y
    return total


def norm_sq(a: StateVec) -> int:
    n = inner_product(a, a)
    assert n.im == 0 and n.re > 0
    return n.re


def orthogonal(a: StateVec, b: StateVec) -> bool:
    return inner_product(a, b).is_zero()


def projective_equal(a: StateVec, b: StateVec) -> bool:
    """True when a and b span the same ray.

    Equivalent to all 2x2 minors of the stacked coordinate matrix vanishing,
    which avoids any division.
    """
    for i, j in itertools.combinations(range(4), 2):
        m = a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]
        if not m.is_zero():
            return False
    return True


def apply_matrix(m: Matrix, a: StateVec) -> Coords:
    return tuple(
        sum((m[i][j] * a.coords[j] for j in range(4)), ZERO) for i in range(4)
    )  # type: ignore[return-value]


def _is_rank_one(m: Matrix) -> bool:
    n = len(m)
    cells = [(i, j) for i in range(n) for j in range(n)]
    if all(m[i][j].is_zero() for i, j in cells):
        return False
    for (i1, j1), (i2, j2) in itertools.combinations(cells, 2):
        if i1 == i2 or j1 == j2:
            continue
        det = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]
        if not det.is_zero():
            return False
    return True


def eigenbasis(triad: Triad) -> tuple[StateVec, StateVec, StateVec, StateVec]:
    """The four joint eigenstates of a triad, in canonical form.

    For each sign choice (e1, e2) the product (I + e1*M1)(I + e2*M2) is four
    times the rank-one projector onto the joint eigenstate with signature
    (e1, e2, sign*e1*e2); the state is read off as any nonzero column.
    """
    m1 = triad.members[0].matrix()
    m2 = triad.members[1].matrix()
    ident = mat_identity(4)
    out = []
    for e1, e2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        p = mat_mul(
            mat_add(ident, mat_scale(m1, GaussianInt(e1, 0))),
            mat_add(ident, mat_scale(m2, GaussianInt(e2, 0))),
        )
        if not _is_rank_one(p):
            raise ValueError(f"projector for {triad} signs ({e1},{e2}) is not rank one")
        col = next(
            tuple(p[i][j] for i in range(4))
            for j in range(4)
            if any(not p[i][j].is_zero() for i in range(4))
        )
        out.append(state(col))
    for a, b in itertools.combinations(out, 2):
        assert orthogonal(a, b), f"eigenbasis of {triad} is not orthogonal"
    return tuple(out)  # type: ignore[return-value]


def eigenvalue_signature(v: StateVec, triad: Triad) -> tuple[int, int, int]:
    """The +-1 eigenvalues of v under the triad members, in member order."""
    signs = []
    for member in triad.members:
        image = apply_matrix(member.matrix(), v)
        if image == v.coords:
            signs.append(1)
        elif image == tuple(-c for c in v.coords):
            signs.append(-1)
        else:
            raise NotEigenstateError(f"{v} is not an eigenstate of {member}")
    return tuple(signs)  # type: ignore[return-value]


@dataclass(frozen=True)
class Catalog:
    """The 60 canonical states, labelled 1..60 in table-row order.

    Row i of the reference table holds the four eigenstates of one triad
    (its "home" triad); labels follow the table positions.
    """

    states: tuple[StateVec, ...]
    row_triads: tuple[Triad, ...]

    def by_label(self, label: int) -> StateVec:
        if not 1 <= label <= len(self.states):
            raise KeyError(f"no state labelled {label}")
        return self.states[label - 1]

    def label_of(self, coords: Coords) -> int:
        key = canonicalize(coords)
        try:
            return self._coord_index()[key]
        except KeyError:
            raise KeyError(f"no catalog state with coordinates {coords}") from None

    @functools.cache
    def _coord_index(self) -> dict[Coords, int]:
        return {s.coords: s.label for s in self.states}

    def home_triad(self, label: int) -> Triad:
        return self.row_triads[(label - 1) // 4]

    def labels_of_triad(self, triad: Triad) -> tuple[int, int, int, int]:
        row = self.row_triads.index(triad)
        return (4 * row + 1, 4 * row + 2, 4 * row + 3, 4 * row + 4)


def _table_coords(raw: tuple) -> Coords:
    return tuple(GaussianInt(re, im) for re, im in raw)  # type: ignore[return-value]


@functools.cache
def build_catalog() -> Catalog:
    """Recompute all 60 eigenstates and label them against the stored table.

    Each table row's triad is diagonalized from scratch; the computed
    canonical coordinates must reproduce the stored ones exactly (as sets,
    per row), otherwise the catalog refuses to build.
    """
    states: list[StateVec] = []
    row_triads: list[Triad] = []
    for members, _starred, raw_states in tables.STATE_ROWS:
        triad = triad_of(members)
        row_triads.append(triad)
        computed = {s.coords for s in eigenbasis(triad)}
        expected = [_table_coords(raw) for raw in raw_states]
        if computed != set(expected):
            raise AssertionError(
                f"eigenbasis of {triad} does not reproduce its table row"
            )
        base = len(states)
        for offset, coords in enumerate(expected):
            states.append(StateVec(coords, base + offset + 1))
    if len(states) != 60 or len(set(s.coords for s in states)) != 60:
        raise AssertionError("state catalog must hold 60 distinct states")
    if set(row_triads) != set(enumerate_triads()):
        raise AssertionError("table rows must cover all 15 triads")
    return Catalog(tuple(states), tuple(row_triads))


def signature_table() -> dict[int, tuple[int, int, int]]:
    """Eigenvalue signatures of every state under its home triad."""
    catalog = build_catalog()
    return {
        s.label: eigenvalue_signature(s, catalog.home_triad(s.label))
        for s in catalog.states
    }
