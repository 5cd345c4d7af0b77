"""Hexagon edge model of the 15 observables and the ten magic squares.

Vertices are (qubit, axis) pairs for qubit 1 and 2 and axis x, y, z.  Every
one of the 15 edges of the complete graph K6 on these vertices stands for an
observable: an edge inside one qubit's triangle is the *third* Pauli on that
qubit (the product of the two endpoint operators, phase dropped), and an
edge between the qubits is the two-body product of its endpoints.  Two
observables commute exactly when their edges share no vertex.

Splitting the six vertices into two triangles removes six edges and leaves
nine, which always arrange into a 3x3 grid whose rows and columns are
commuting triads: a magic square.  There are C(6,3)/2 = 10 such splits and
ten squares.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from . import tables
from .gaussian import mat_identity, mat_mul, mat_scale, GaussianInt
from .pauli import Observable, Triad, commutes, enumerate_triads, obs
from .states import build_catalog


class HexVertex(NamedTuple):
    qubit: int
    axis: str


VERTICES: tuple[HexVertex, ...] = tuple(
    HexVertex(q, a) for q in (1, 2) for a in "xyz"
)

_THIRD_AXIS = {frozenset("xy"): "z", frozenset("yz"): "x", frozenset("xz"): "y"}


def edge_observable(u: HexVertex, v: HexVertex) -> Observable:
    """The observable represented by the edge between two distinct vertices."""
    if u == v:
        raise ValueError("an edge needs two distinct vertices")
    if u.qubit == v.qubit:
        letter = _THIRD_AXIS[frozenset((u.axis, v.axis))].upper()
        return obs(letter + "I" if u.qubit == 1 else "I" + letter)
    a, b = (u, v) if u.qubit < v.qubit else (v, u)
    return obs(a.axis.upper() + b.axis.upper())


def edge_of_observable(o: Observable) -> frozenset[HexVertex]:
    """Inverse of edge_observable."""
    for u, v in itertools.combinations(VERTICES, 2):
        if edge_observable(u, v) == o:
            return frozenset((u, v))
    raise AssertionError("every observable is an edge")


@dataclass(frozen=True, slots=True)
class TrianglePartition:
    """An unordered split of the six vertices into two triangles.

    The triangle containing vertex (1, x) is stored first, making the
    representation canonical.
    """

    first: frozenset[HexVertex]
    second: frozenset[HexVertex]

    @classmethod
    def from_halves(cls, a, b) -> "TrianglePartition":
        a, b = frozenset(a), frozenset(b)
        if len(a) != 3 or len(b) != 3 or a | b != set(VERTICES):
            raise ValueError("not a partition of the hexagon into triangles")
        if HexVertex(1, "x") in b:
            a, b = b, a
        return cls(a, b)

    def leftover_observables(self) -> frozenset[Observable]:
        """The nine observables of the edges not inside either triangle."""
        kept = []
        for u, v in itertools.combinations(VERTICES, 2):
            same_half = ({u, v} <= self.first) or ({u, v} <= self.second)
            if not same_half:
                kept.append(edge_observable(u, v))
        assert len(kept) == 9
        return frozenset(kept)


@functools.cache
def enumerate_triangle_partitions() -> tuple[TrianglePartition, ...]:
    """All ten triangle partitions, deterministically ordered."""
    seen = []
    anchor = HexVertex(1, "x")
    rest = [v for v in VERTICES if v != anchor]
    for pair in itertools.combinations(rest, 2):
        half = frozenset((anchor, *pair))
        other = frozenset(v for v in VERTICES if v not in half)
        seen.append(TrianglePartition.from_halves(half, other))
    assert len(seen) == 10
    return tuple(sorted(seen, key=lambda p: sorted(map(tuple, p.first))))


@dataclass(frozen=True, slots=True)
class MagicSquare:
    """A 3x3 grid of observables whose six lines are commuting triads.

    line_signs lists the sign of the observable product along the three rows
    followed by the three columns.
    """

    grid: tuple[tuple[Observable, Observable, Observable], ...]
    line_signs: tuple[int, int, int, int, int, int]
    id: str | None = None

    def observables(self) -> frozenset[Observable]:
        return frozenset(o for row in self.grid for o in row)

    def rows(self) -> tuple[tuple[Observable, ...], ...]:
        return self.grid

    def columns(self) -> tuple[tuple[Observable, ...], ...]:
        return tuple(zip(*self.grid))

    def lines(self) -> tuple[tuple[Observable, ...], ...]:
        return self.rows() + self.columns()


def _triads_within(observables: frozenset[Observable]) -> list[Triad]:
    return [
        t for t in enumerate_triads() if set(t.members) <= observables
    ]


def _triad_min_label(t: Triad) -> int:
    return min(build_catalog().labels_of_triad(t))


def build_square(partition: TrianglePartition) -> MagicSquare:
    """Arrange the partition's nine leftover observables into their square.

    The six triads inside the nine observables split into two parallel
    classes (triads in a class are disjoint; triads across classes meet in
    one observable).  Rows are the class holding the smallest eigenstate
    label of the catalog, and rows and columns are each ordered by their
    smallest label; this fixes the orientation uniquely.
    """
    nine = partition.leftover_observables()
    triads = _triads_within(nine)
    if len(triads) != 6:
        raise AssertionError(f"expected 6 triads among 9 observables, got {len(triads)}")
    first = triads[0]
    class_a = [t for t in triads if t == first or not set(t.members) & set(first.members)]
    class_b = [t for t in triads if t not in class_a]
    for cls in (class_a, class_b):
        assert len(cls) == 3
        covered = set().union(*(t.members for t in cls))
        assert covered == nine, "a parallel class must cover all nine observables"
    class_a.sort(key=_triad_min_label)
    class_b.sort(key=_triad_min_label)
    if _triad_min_label(class_b[0]) < _triad_min_label(class_a[0]):
        class_a, class_b = class_b, class_a
    grid = tuple(
        tuple(next(iter(set(r.members) & set(c.members))) for c in class_b)
        for r in class_a
    )
    signs = tuple(t.sign for t in class_a) + tuple(t.sign for t in class_b)
    return MagicSquare(grid, signs)  # type: ignore[arg-type]


def line_triads(square: MagicSquare) -> tuple[tuple[Triad, ...], tuple[Triad, ...]]:
    """The row triads and column triads of a square, in grid order."""
    def lookup(line: tuple[Observable, ...]) -> Triad:
        want = frozenset(line)
        for t in enumerate_triads():
            if frozenset(t.members) == want:
                return t
        raise KeyError(f"line {tuple(map(str, line))} is not a triad")

    return (
        tuple(lookup(r) for r in square.rows()),
        tuple(lookup(c) for c in square.columns()),
    )


@dataclass(frozen=True)
class MagicReport:
    """Result of checking the defining properties of one square."""

    lines_commute: bool
    line_signs_exact: bool
    negative_lines: int
    satisfying_assignments: int

    @property
    def is_magic(self) -> bool:
        return (
            self.lines_commute
            and self.line_signs_exact
            and self.negative_lines % 2 == 1
            and self.satisfying_assignments == 0
        )


def verify_magic(square: MagicSquare) -> MagicReport:
    """Check commuting lines, exact line signs, and the parity obstruction.

    The obstruction is confirmed by brute force: all 2**9 assignments of
    +-1 to the grid cells are scanned and none may reproduce every line's
    sign as the product of its three cells.
    """
    lines = square.lines()
    lines_commute = all(
        commutes(a, b) for line in lines for a, b in itertools.combinations(line, 2)
    )

    signs_exact = True
    for line, sign in zip(lines, square.line_signs):
        prod = mat_identity(4)
        for o in line:
            prod = mat_mul(prod, o.matrix())
        if prod != mat_scale(mat_identity(4), GaussianInt(sign, 0)):
            signs_exact = False

    cells = [o for row in square.grid for o in row]
    index = {o: i for i, o in enumerate(cells)}
    line_idx = [tuple(index[o] for o in line) for line in lines]
    satisfying = 0
    for bits in range(512):
        vals = [1 - 2 * ((bits >> i) & 1) for i in range(9)]
        if all(
            vals[i] * vals[j] * vals[k] == sign
            for (i, j, k), sign in zip(line_idx, square.line_signs)
        ):
            satisfying += 1

    return MagicReport(
        lines_commute=lines_commute,
        line_signs_exact=signs_exact,
        negative_lines=sum(1 for s in square.line_signs if s < 0),
        satisfying_assignments=satisfying,
    )


def square_labels(square: MagicSquare) -> frozenset[int]:
    """The 24 catalog labels of the square's joint eigenstates."""
    catalog = build_catalog()
    rows, cols = line_triads(square)
    labels: set[int] = set()
    for t in rows + cols:
        labels.update(catalog.labels_of_triad(t))
    assert len(labels) == 24
    return frozenset(labels)


@functools.cache
def enumerate_squares() -> tuple[MagicSquare, ...]:
    """The ten magic squares S1..S10.

    Names are pinned by eigenstate sets: S1 owns states 1..24, and Sk owns
    the image of S1's states under the stored relabeling column for Sk.
    """
    expected: dict[str, frozenset[int]] = {"S1": frozenset(range(1, 25))}
    for sid, column in tables.SQUARE_RELABELINGS.items():
        expected[sid] = frozenset(column)

    named: dict[str, MagicSquare] = {}
    for partition in enumerate_triangle_partitions():
        square = build_square(partition)
        labels = square_labels(square)
        matches = [sid for sid, want in expected.items() if want == labels]
        if len(matches) != 1:
            raise AssertionError(
                f"square with states {sorted(labels)} matches {matches}"
            )
        sid = matches[0]
        named[sid] = MagicSquare(square.grid, square.line_signs, sid)
    if len(named) != 10:
        raise AssertionError("the ten squares must get ten distinct names")
    return tuple(named[f"S{i}"] for i in range(1, 11))


def square_by_id(sid: str) -> MagicSquare:
    for square in enumerate_squares():
        if square.id == sid:
            return square
    raise KeyError(f"unknown square {sid!r} (expected S1..S10)")
