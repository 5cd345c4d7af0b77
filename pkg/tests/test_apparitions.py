"""Parity-proof apparitions and the coloring counter.

The coloring oracle here is a literal scan over all subsets of the state
pool, with no factoring tricks, so it independently certifies the package's
half-split counter and the depth-first engine.
"""

import itertools

import numpy as np
import pytest

from bkscope.apparitions import (
    Apparition,
    _count_dfs,
    _count_exhaustive,
    color_search,
    enumerate_all,
    gen18,
    gen20,
    parity_check,
    removal_probe,
    square_apparitions,
)
from bkscope.geometry import all_tetrads

SQUARE_IDS = tuple(f"S{i}" for i in range(1, 11))


def literal_coloring_count(states, tetrads):
    pool = tuple(sorted(states))
    pos = {s: i for i, s in enumerate(pool)}
    subs = np.arange(1 << len(pool), dtype=np.int64)
    ok = np.ones(subs.shape, dtype=bool)
    for t in tetrads:
        cnt = np.zeros(subs.shape, dtype=np.int64)
        for s in t:
            cnt += (subs >> pos[s]) & 1
        ok &= cnt == 1
    return int(ok.sum())


@pytest.mark.parametrize("sid", SQUARE_IDS)
def test_sixteen_kind18_per_square(sid):
    apps = gen18(sid)
    assert len(apps) == 16
    for a in apps:
        assert a.kind == 18
        assert len(a.tetrads) == 9
        assert len(a.states()) == 18
        assert set(a.multiplicities().values()) == {2}


@pytest.mark.parametrize("sid", SQUARE_IDS)
def test_ninety_six_kind20_per_square(sid):
    apps = gen20(sid)
    assert len(apps) == 96
    for a in apps:
        assert a.kind == 20
        assert len(a.tetrads) == 11
        assert len(a.states()) == 20
        mults = sorted(a.multiplicities().values())
        assert mults == [2] * 18 + [4, 4]


def test_known_kind18_apparition():
    app = next(a for a in gen18("S1") if a.excluded == (1, 5, 10, 16, 20, 24))
    assert app.tetrads == (
        (2, 3, 21, 23),
        (2, 4, 13, 15),
        (3, 4, 17, 18),
        (6, 7, 21, 22),
        (6, 8, 17, 19),
        (7, 8, 13, 14),
        (9, 11, 14, 15),
        (9, 12, 18, 19),
        (11, 12, 22, 23),
    )


def test_known_kind20_apparition():
    app = next(a for a in gen20("S1") if a.excluded == (1, 14, 19, 22))
    assert app.tetrads == (
        (2, 3, 21, 23),
        (2, 4, 13, 15),
        (3, 4, 17, 18),
        (5, 6, 7, 8),
        (5, 6, 15, 16),
        (5, 7, 18, 20),
        (5, 8, 23, 24),
        (9, 10, 11, 12),
        (9, 10, 21, 24),
        (10, 11, 17, 20),
        (10, 12, 13, 16),
    )
    assert sorted(s for s, c in app.multiplicities().items() if c == 4) == [5, 10]


def test_all_apparitions_pass_parity_check():
    apps = enumerate_all()
    assert len(apps) == 1120
    assert all(parity_check(a) for a in apps)


def test_apparitions_are_distinct_across_squares():
    apps = enumerate_all()
    assert len({a.canonical() for a in apps}) == 1120
    by_kind = {18: 0, 20: 0}
    for a in apps:
        by_kind[a.kind] += 1
    assert by_kind == {18: 160, 20: 960}


def test_parity_check_rejects_even_systems():
    app = gen18("S1")[0]
    shaved = Apparition(app.square_id, app.kind, app.excluded, app.tetrads[:-1])
    assert not parity_check(shaved)


def test_every_apparition_has_zero_colorings():
    for a in enumerate_all():
        assert color_search(a.states(), a.tetrads) == 0


def test_literal_scan_confirms_one_kind18_proof():
    app = gen18("S1")[0]
    assert literal_coloring_count(app.states(), app.tetrads) == 0


def test_literal_scan_agrees_on_positive_counts():
    assert color_search((1, 2, 3, 4), ((1, 2, 3, 4),)) == 4
    assert literal_coloring_count((1, 2, 3, 4), ((1, 2, 3, 4),)) == 4
    two = ((1, 2, 3, 4), (5, 6, 7, 8))
    assert color_search(tuple(range(1, 9)), two) == 16
    assert literal_coloring_count(tuple(range(1, 9)), two) == 16


def test_free_states_double_the_count():
    # states 5 and 6 sit in no tetrad
    assert color_search((1, 2, 3, 4, 5, 6), ((1, 2, 3, 4),)) == 16


def test_engines_agree_on_partial_systems():
    app = gen18("S1")[0]
    pool = app.states()
    for k in (0, 1, 3, 5, 7, 9):
        tetrads = app.tetrads[:k]
        exhaustive = _count_exhaustive(pool, tetrads)
        dfs = _count_dfs(pool, tetrads)
        literal = literal_coloring_count(pool, tetrads)
        assert exhaustive == dfs == literal


def test_dfs_handles_large_pools():
    # 24 states forces the depth-first path through color_search
    tetrads = tuple(itertools.islice(
        (t for t in all_tetrads() if max(t) <= 24), 6))
    count = color_search(tuple(range(1, 25)), tetrads)
    assert count == _count_exhaustive(tuple(range(1, 25)), tetrads)
    assert count > 0


def test_whole_catalog_is_uncolorable():
    assert color_search(tuple(range(1, 61)), all_tetrads()) == 0


def test_color_search_rejects_stray_tetrads():
    with pytest.raises(ValueError):
        color_search((1, 2, 3, 4), ((1, 2, 3, 5),))


def test_removing_any_tetrad_restores_colorability():
    probe = removal_probe("S1")
    assert len(probe.cases) == 144
    assert probe.all_colorable


def test_square_apparitions_is_both_kinds():
    apps = square_apparitions("S3")
    assert len(apps) == 112
    assert sorted({a.kind for a in apps}) == [18, 20]
