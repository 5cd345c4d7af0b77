"""Orthogonality geometry of the 60 states.

Tetrads are sets of four mutually orthogonal states (a complete basis).
Within each square's 24 states, the twelve row states and twelve column
states each form a 12-point, 16-line configuration with three points per
line and four lines per point (a Reye configuration); lines of the two dual
configurations pair up into 16 totally orthogonal partner pairs, and each
point sits opposite four "triangles" of the other configuration.  All of it
is recomputed here from exact inner products.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .hexagon import MagicSquare, line_triads, square_by_id
from .states import StateVec, build_catalog, inner_product, norm_sq, orthogonal

Tetrad = tuple[int, int, int, int]
Line = tuple[int, int, int]
Triangle = tuple[int, int, int]


@functools.cache
def _orthogonality() -> dict[int, frozenset[int]]:
    """label -> labels of all catalog states orthogonal to it."""
    catalog = build_catalog()
    out: dict[int, set[int]] = {s.label: set() for s in catalog.states}
    for a, b in itertools.combinations(catalog.states, 2):
        if orthogonal(a, b):
            out[a.label].add(b.label)
            out[b.label].add(a.label)
    return {k: frozenset(v) for k, v in out.items()}


def enumerate_tetrads(labels: frozenset[int] | tuple[int, ...]) -> tuple[Tetrad, ...]:
    """All tetrads of mutually orthogonal states within the given labels."""
    pool = sorted(labels)
    ortho = _orthogonality()
    found: list[Tetrad] = []
    for i, a in enumerate(pool):
        na = ortho[a]
        for b in pool[i + 1:]:
            if b not in na:
                continue
            nab = na & ortho[b]
            for c in (x for x in pool if x > b and x in nab):
                nabc = nab & ortho[c]
                for d in (x for x in pool if x > c and x in nabc):
                    found.append((a, b, c, d))
    return tuple(found)


@functools.cache
def all_tetrads() -> tuple[Tetrad, ...]:
    """The 105 tetrads of the full 60-state system."""
    return enumerate_tetrads(frozenset(range(1, 61)))


@dataclass(frozen=True)
class SquareStates:
    """The 24 states of one square, split by grid parallel class."""

    square_id: str
    rows: tuple[int, ...]
    columns: tuple[int, ...]

    @property
    def all(self) -> tuple[int, ...]:
        return tuple(sorted(self.rows + self.columns))


@functools.cache
def square_states(sid: str) -> SquareStates:
    """Row-class and column-class eigenstate labels of a square."""
    catalog = build_catalog()
    rows, cols = line_triads(square_by_id(sid))
    row_labels = sorted(
        label for t in rows for label in catalog.labels_of_triad(t)
    )
    col_labels = sorted(
        label for t in cols for label in catalog.labels_of_triad(t)
    )
    return SquareStates(sid, tuple(row_labels), tuple(col_labels))


@functools.cache
def square_tetrads(sid: str) -> tuple[Tetrad, ...]:
    """The 24 tetrads living inside one square's 24 states."""
    return enumerate_tetrads(frozenset(square_states(sid).all))


# --- Reye configurations ---------------------------------------------------

class NotReyeError(ValueError):
    """Raised when 12 points do not form a 16-line, 3-per-line geometry."""


@dataclass(frozen=True)
class ReyeConfig:
    points: tuple[int, ...]
    lines: tuple[Line, ...]


def _collinear(a: StateVec, b: StateVec, c: StateVec) -> bool:
    """Exact rank test: the 3x4 coordinate matrix has rank exactly 2."""
    rows = (a.coords, b.coords, c.coords)
    for cols in itertools.combinations(range(4), 3):
        det = (
            rows[0][cols[0]] * (rows[1][cols[1]] * rows[2][cols[2]] - rows[1][cols[2]] * rows[2][cols[1]])
            - rows[0][cols[1]] * (rows[1][cols[0]] * rows[2][cols[2]] - rows[1][cols[2]] * rows[2][cols[0]])
            + rows[0][cols[2]] * (rows[1][cols[0]] * rows[2][cols[1]] - rows[1][cols[1]] * rows[2][cols[0]])
        )
        if not det.is_zero():
            return False
    # rank 2 and not 1: distinct canonical states are never proportional,
    # so any pair of distinct points already spans two dimensions.
    return True


def collinear_labels(x: int, y: int, z: int) -> bool:
    catalog = build_catalog()
    return _collinear(catalog.by_label(x), catalog.by_label(y), catalog.by_label(z))


def extract_reye(labels: tuple[int, ...] | frozenset[int]) -> ReyeConfig:
    """Find all lines among 12 points and validate the incidence counts."""
    pts = tuple(sorted(labels))
    if len(pts) != 12:
        raise NotReyeError(f"need 12 points, got {len(pts)}")
    catalog = build_catalog()
    vecs = {p: catalog.by_label(p) for p in pts}
    lines = tuple(
        (x, y, z)
        for x, y, z in itertools.combinations(pts, 3)
        if _collinear(vecs[x], vecs[y], vecs[z])
    )
    per_point = {p: sum(1 for ln in lines if p in ln) for p in pts}
    if len(lines) != 16 or any(n != 4 for n in per_point.values()):
        raise NotReyeError(
            f"found {len(lines)} lines with per-point counts {sorted(set(per_point.values()))}"
        )
    return ReyeConfig(pts, lines)


@functools.cache
def square_configs(sid: str) -> tuple[ReyeConfig, ReyeConfig]:
    """The row-class and column-class configurations of a square."""
    ss = square_states(sid)
    return extract_reye(ss.rows), extract_reye(ss.columns)


@dataclass(frozen=True)
class PartnerPairing:
    """A bijection between the lines of two dual configurations.

    Paired lines are totally orthogonal: every state on one is orthogonal to
    every state on the other.
    """

    pairs: tuple[tuple[Line, Line], ...]


def _totally_orthogonal(a: Line, b: Line) -> bool:
    catalog = build_catalog()
    return all(
        orthogonal(catalog.by_label(x), catalog.by_label(y))
        for x in a
        for y in b
    )


def partner_pairing(config_a: ReyeConfig, config_b: ReyeConfig) -> PartnerPairing:
    pairs = []
    used: set[Line] = set()
    for la in config_a.lines:
        partners = [lb for lb in config_b.lines if _totally_orthogonal(la, lb)]
        if len(partners) != 1:
            raise NotReyeError(f"line {la} has {len(partners)} partners, wanted 1")
        if partners[0] in used:
            raise NotReyeError(f"line {partners[0]} paired twice")
        used.add(partners[0])
        pairs.append((la, partners[0]))
    return PartnerPairing(tuple(pairs))


# --- triangles --------------------------------------------------------------

def is_unbiased_triple(x: int, y: int, z: int) -> bool:
    """Three states pairwise at the unbiased angle: 4|<a|b>|^2 = |a|^2 |b|^2."""
    catalog = build_catalog()
    for p, q in itertools.combinations((x, y, z), 2):
        a, b = catalog.by_label(p), catalog.by_label(q)
        if 4 * inner_product(a, b).norm() != norm_sq(a) * norm_sq(b):
            return False
    return True


@functools.cache
def triangles(config: ReyeConfig) -> tuple[Triangle, ...]:
    """Triples of configuration points pairwise joined by three distinct
    lines.  A triple lying on a single line is a line, not a triangle."""
    lines = [frozenset(l) for l in config.lines]
    joined = set()
    for l in lines:
        for pair in itertools.combinations(sorted(l), 2):
            joined.add(pair)
    out = []
    for t in itertools.combinations(config.points, 3):
        x, y, z = t
        if ((x, y) in joined and (x, z) in joined and (y, z) in joined
                and not any(set(t) <= l for l in lines)):
            out.append(t)
    return tuple(out)


@functools.cache
def point_triangles(sid: str) -> dict[int, tuple[Triangle, ...]]:
    """For each of a square's 24 states, the triangles of the opposite
    configuration whose members are all orthogonal to it."""
    cfg_rows, cfg_cols = square_configs(sid)
    ortho = _orthogonality()
    out: dict[int, tuple[Triangle, ...]] = {}
    for cfg, other in ((cfg_rows, cfg_cols), (cfg_cols, cfg_rows)):
        candidates = triangles(other)
        for p in cfg.points:
            out[p] = tuple(
                t for t in candidates if all(q in ortho[p] for q in t)
            )
    return out


def shared_states(sid_a: str, sid_b: str) -> frozenset[int]:
    return frozenset(square_states(sid_a).all) & frozenset(square_states(sid_b).all)


def co_occurrence_profile() -> dict[int, dict[int, int]]:
    """For each state, how many other states it meets once, twice, ... in
    the 105 tetrads: label -> {co-occurrence count -> number of states}."""
    counts: dict[int, dict[int, int]] = {n: {} for n in range(1, 61)}
    meet: dict[tuple[int, int], int] = {}
    for t in all_tetrads():
        for a, b in itertools.combinations(t, 2):
            meet[(a, b)] = meet.get((a, b), 0) + 1
    for (a, b), n in meet.items():
        counts[a][n] = counts[a].get(n, 0) + 1
        counts[b][n] = counts[b].get(n, 0) + 1
    return counts
