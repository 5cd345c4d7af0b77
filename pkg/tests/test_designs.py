"""Block-design signatures and the six unbiased-family partitions."""

import itertools

import numpy as np
import pytest

from bkscope import tables
from bkscope.designs import (
    NotBlockDesignError,
    mub_sets,
    qbd_profile,
    square_design,
    square_mub_relations,
    triad_basis,
    unbiased,
    verify_mub_sets,
)
from bkscope.geometry import all_tetrads
from bkscope.pauli import OBSERVABLES, enumerate_triads, triad_of
from bkscope.states import build_catalog

SQUARE_IDS = tuple(f"S{i}" for i in range(1, 11))


def test_triads_over_observables_signature():
    names = [str(o) for o in OBSERVABLES]
    blocks = [[str(m) for m in t.members] for t in enumerate_triads()]
    symbol = qbd_profile(names, blocks)
    assert str(symbol) == "{15,15,3,3;(1,6)}"
    assert symbol.identities_hold()


@pytest.mark.parametrize("sid", SQUARE_IDS)
def test_square_tetrad_signature(sid):
    assert str(square_design(sid)) == "{24,24,4,4;(1,6),(2,3)}"


def test_all_tetrads_signature():
    symbol = qbd_profile(tuple(range(1, 61)), all_tetrads())
    assert str(symbol) == "{105,60,7,4;(1,12),(3,3)}"


def test_family_over_triads_signature():
    triads = enumerate_triads()
    blocks = [list(family) for family in mub_sets()]
    symbol = qbd_profile(triads, blocks)
    assert str(symbol) == "{6,15,2,5;(1,8)}"


def test_profile_rejects_irregular_systems():
    with pytest.raises(NotBlockDesignError, match="no blocks"):
        qbd_profile((1, 2), [])
    with pytest.raises(NotBlockDesignError, match="unknown points"):
        qbd_profile((1, 2, 3), [(1, 2, 4)])
    with pytest.raises(NotBlockDesignError, match="sizes vary"):
        qbd_profile((1, 2, 3), [(1, 2), (1, 2, 3)])
    with pytest.raises(NotBlockDesignError, match="replication"):
        qbd_profile((1, 2, 3), [(1, 2)])
    with pytest.raises(NotBlockDesignError, match="profile"):
        qbd_profile(
            (1, 2, 3, 4, 5),
            [(1, 2), (1, 2), (3, 4), (3, 5), (4, 5)],
        )


def _numpy_unbiased(labels_a, labels_b):
    catalog = build_catalog()

    def normed(lab):
        v = np.array(
            [c.re + 1j * c.im for c in catalog.by_label(lab).coords]
        )
        return v / np.linalg.norm(v)

    return all(
        np.isclose(abs(np.vdot(normed(a), normed(b))) ** 2, 0.25)
        for a in labels_a
        for b in labels_b
    )


def test_unbiased_matches_numpy_oracle():
    catalog = build_catalog()
    xi_family = triad_of(("XI", "IX", "XX"))
    zi_family = triad_of(("ZI", "IZ", "ZZ"))
    assert unbiased(triad_basis(xi_family), triad_basis(zi_family))
    assert _numpy_unbiased(
        catalog.labels_of_triad(xi_family), catalog.labels_of_triad(zi_family)
    )
    # a basis is never unbiased with itself
    assert not unbiased(triad_basis(xi_family), triad_basis(xi_family))


def test_six_families_match_stored_table():
    families = mub_sets()
    assert len(families) == 6
    got = [
        {frozenset(str(m) for m in t.members) for t in fam} for fam in families
    ]
    want = [
        {frozenset(names) for names in row} for row in tables.MUB_SETS
    ]
    assert got == want


def test_families_partition_the_observables():
    for fam in mub_sets():
        seen = [str(m) for t in fam for m in t.members]
        assert sorted(seen) == sorted(str(o) for o in OBSERVABLES)


def test_each_triad_in_exactly_two_families():
    cover = {t: 0 for t in enumerate_triads()}
    for fam in mub_sets():
        for t in fam:
            cover[t] += 1
    assert set(cover.values()) == {2}


def test_no_two_families_share_more_than_one_triad():
    for a, b in itertools.combinations(mub_sets(), 2):
        assert len(set(a) & set(b)) <= 1


def test_family_report():
    report = verify_mub_sets()
    assert report.ok
    assert report.computed_match_stored
    assert report.pairwise_unbiased
    assert report.maximal
    assert report.triad_cover_counts == {2: 15}
    assert not report.exists_disjoint_pair
    assert report.locally_equivalent


@pytest.mark.parametrize("sid", SQUARE_IDS)
def test_square_rows_and_columns_are_unbiased_internally(sid):
    rel = square_mub_relations(sid)
    assert rel.ok
    assert rel.rows_pairwise_unbiased
    assert rel.columns_pairwise_unbiased
    assert rel.row_column_unbiased_pairs == 0
