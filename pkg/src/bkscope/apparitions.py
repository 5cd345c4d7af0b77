"""Parity-proof apparitions and exhaustive coloring searches.

An apparition keeps only the tetrads of a square's 24-state system that
avoid a small excluded set: the six states of a partner-line pair (leaving
9 tetrads on 18 states) or a point plus an orthogonal triangle from the
opposite configuration (leaving 11 tetrads on 20 states).  In both cases
the tetrad count is odd while every surviving state appears an even number
of times, so no assignment of one "green" state per tetrad can exist; the
coloring search below confirms that emptiness by complete enumeration
rather than by the parity argument.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .geometry import (
    Tetrad,
    partner_pairing,
    point_triangles,
    square_configs,
    square_states,
    square_tetrads,
)
from .hexagon import enumerate_squares

#: Inputs with at most this many states are counted by direct enumeration
#: over all colorings; larger inputs fall back to the pruned search.
EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class Apparition:
    square_id: str
    kind: int  # 18 or 20: the number of distinct surviving states
    excluded: tuple[int, ...]
    tetrads: tuple[Tetrad, ...]

    def states(self) -> tuple[int, ...]:
        return tuple(sorted({s for t in self.tetrads for s in t}))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(s for t in self.tetrads for s in t))

    def canonical(self) -> tuple[Tetrad, ...]:
        """Identity of the apparition: its sorted tetrad list."""
        return tuple(sorted(self.tetrads))


def _surviving(sid: str, excluded: frozenset[int]) -> tuple[Tetrad, ...]:
    return tuple(
        t for t in square_tetrads(sid) if not excluded & set(t)
    )


def gen18(sid: str) -> tuple[Apparition, ...]:
    """The 16 18-state apparitions of a square, one per partner-line pair."""
    cfg_rows, cfg_cols = square_configs(sid)
    pairing = partner_pairing(cfg_rows, cfg_cols)
    out = []
    for line_a, line_b in pairing.pairs:
        excluded = frozenset(line_a) | frozenset(line_b)
        kept = _surviving(sid, excluded)
        if len(kept) != 9:
            raise AssertionError(
                f"{sid} partner pair {line_a}/{line_b} keeps {len(kept)} tetrads"
            )
        out.append(Apparition(sid, 18, tuple(sorted(excluded)), kept))
    assert len(out) == 16
    return tuple(out)


def gen20(sid: str) -> tuple[Apparition, ...]:
    """The 96 20-state apparitions: one per point/orthogonal-triangle pick."""
    out = []
    for point in sorted(square_states(sid).all):
        for tri in point_triangles(sid)[point]:
            excluded = frozenset((point, *tri))
            kept = _surviving(sid, excluded)
            if len(kept) != 11:
                raise AssertionError(
                    f"{sid} point {point} triangle {tri} keeps {len(kept)} tetrads"
                )
            out.append(Apparition(sid, 20, tuple(sorted(excluded)), kept))
    assert len(out) == 96
    return tuple(out)


def parity_check(app: Apparition) -> bool:
    """The counting obstruction: odd tetrad count, every multiplicity even."""
    if len(app.tetrads) % 2 == 0:
        return False
    return all(m % 2 == 0 for m in app.multiplicities().values())


def color_search(states: tuple[int, ...], tetrads: tuple[Tetrad, ...]) -> int:
    """Count subsets G of `states` with |G & t| == 1 for every tetrad.

    Up to EXHAUSTIVE_LIMIT states all 2**n colorings are enumerated (the
    enumeration is factored over two halves of the state set, which changes
    nothing about completeness).  Larger systems use a depth-first search
    that always branches on the tetrad with the fewest undetermined states.
    A parity proof is certified by a return value of 0.
    """
    pool = tuple(sorted(set(states)))
    for t in tetrads:
        missing = set(t) - set(pool)
        if missing:
            raise ValueError(f"tetrad {t} uses states {sorted(missing)} outside the system")
    if len(pool) <= EXHAUSTIVE_LIMIT:
        return _count_exhaustive(pool, tetrads)
    return _count_dfs(pool, tetrads)


def _count_exhaustive(pool: tuple[int, ...], tetrads: tuple[Tetrad, ...]) -> int:
    n = len(pool)
    if not tetrads:
        return 2 ** n
    pos = {s: i for i, s in enumerate(pool)}
    half = n // 2

    def side_keys(lo: int, hi: int) -> dict[int, int]:
        """Enumerate all subsets of bit range [lo, hi) and tabulate, per
        subset, which tetrads it hits exactly once (discarding subsets that
        hit any tetrad twice or more)."""
        width = hi - lo
        subs = np.arange(1 << width, dtype=np.int64)
        ok = np.ones(subs.shape, dtype=bool)
        key = np.zeros(subs.shape, dtype=np.int64)
        for ti, t in enumerate(tetrads):
            bits = [pos[s] - lo for s in t if lo <= pos[s] < hi]
            if not bits:
                continue
            cnt = np.zeros(subs.shape, dtype=np.int64)
            for b in bits:
                cnt += (subs >> b) & 1
            ok &= cnt <= 1
            key |= (cnt == 1).astype(np.int64) << ti
        keys, counts = np.unique(key[ok], return_counts=True)
        return dict(zip(keys.tolist(), counts.tolist()))

    low = side_keys(0, half)
    high = side_keys(half, n)
    want = (1 << len(tetrads)) - 1
    return sum(
        cnt * high.get(want ^ key, 0) for key, cnt in low.items()
    )


def _count_dfs(pool: tuple[int, ...], tetrads: tuple[Tetrad, ...]) -> int:
    tetrad_sets = [tuple(t) for t in tetrads]
    in_tetrads: dict[int, list[int]] = {s: [] for s in pool}
    for ti, t in enumerate(tetrad_sets):
        for s in t:
            in_tetrads[s].append(ti)
    free = sum(1 for s in pool if not in_tetrads[s])

    UNKNOWN, GREEN, RED = 0, 1, -1
    color: dict[int, int] = {s: UNKNOWN for s in pool}
    has_green = [False] * len(tetrad_sets)

    def set_green(s: int, trail: list[int]) -> bool:
        color[s] = GREEN
        trail.append(s)
        for ti in in_tetrads[s]:
            if has_green[ti]:
                return False
            has_green[ti] = True
            trail.append(-(ti + 1))
            for other in tetrad_sets[ti]:
                if other == s:
                    continue
                if color[other] == GREEN:
                    return False
                if color[other] == UNKNOWN:
                    color[other] = RED
                    trail.append(other)
        return True

    def undo(trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            item = trail.pop()
            if item < 0:
                has_green[-item - 1] = False
            else:
                color[item] = UNKNOWN

    def search() -> int:
        best_ti, best_opts = -1, None
        for ti, t in enumerate(tetrad_sets):
            if has_green[ti]:
                continue
            opts = [s for s in t if color[s] == UNKNOWN]
            if not opts:
                return 0
            if best_opts is None or len(opts) < len(best_opts):
                best_ti, best_opts = ti, opts
                if len(opts) == 1:
                    break
        if best_opts is None:
            return 2 ** free
        total = 0
        trail: list[int] = []
        for s in best_opts:
            mark = len(trail)
            if set_green(s, trail):
                total += search()
            undo(trail, mark)
        return total

    return search()


@functools.cache
def square_apparitions(sid: str) -> tuple[Apparition, ...]:
    return gen18(sid) + gen20(sid)


@functools.cache
def enumerate_all() -> tuple[Apparition, ...]:
    """All 1120 apparitions over the ten squares, verified distinct."""
    out: list[Apparition] = []
    for square in enumerate_squares():
        out.extend(square_apparitions(square.id))
    canon = {a.canonical() for a in out}
    if len(out) != 1120 or len(canon) != 1120:
        raise AssertionError(f"expected 1120 distinct apparitions, got {len(canon)}")
    return tuple(out)


@dataclass(frozen=True)
class RemovalProbe:
    """Colorability counts after deleting single tetrads from apparitions."""

    square_id: str
    cases: tuple[tuple[tuple[int, ...], Tetrad, int], ...]

    @property
    def all_colorable(self) -> bool:
        return all(count > 0 for _, _, count in self.cases)


def removal_probe(sid: str) -> RemovalProbe:
    """Drop each tetrad of each 18-state apparition and recount colorings.

    This probes whether the parity proofs are minimal (they are expected to
    be, but the result is reported rather than assumed).
    """
    cases = []
    for app in gen18(sid):
        for drop in app.tetrads:
            rest = tuple(t for t in app.tetrads if t != drop)
            count = color_search(app.states(), rest)
            cases.append((app.excluded, drop, count))
    return RemovalProbe(sid, tuple(cases))
