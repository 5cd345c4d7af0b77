"""Symplectic maps between squares and their exact Clifford lifts.

Numpy complex arithmetic serves as the oracle for everything the exact
Gaussian-integer layer claims: group membership, unitarity, and the
conjugation action on observables and states.
"""

import itertools

import numpy as np
import pytest

from bkscope import tables
from bkscope.gaussian import GaussianInt
from bkscope.hexagon import square_by_id
from bkscope.pauli import OBSERVABLES, obs
from bkscope.states import build_catalog
from bkscope.transforms import (
    IDENTITY_MAP,
    ExactUnitary,
    LocalMap,
    apply_local_map,
    apply_relabeling,
    clifford_catalog,
    enumerate_symplectic,
    find_maps,
    known_local_maps,
    lift_to_unitary,
    local_maps,
    relabeling_witnesses,
    relabelings,
    s6_column_report,
    state_image_labels,
    symplectic_of_unitary,
)

_SINGLE = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def oracle_matrix(o):
    a, b = o.letters()
    return np.kron(_SINGLE[a], _SINGLE[b])


def to_complex(u: ExactUnitary) -> np.ndarray:
    return np.array(
        [[e.re + 1j * e.im for e in row] for row in u.num]
    ) / u.den


def test_nine_stored_relabelings_carry_tetrads():
    rs = relabelings()
    assert len(rs) == 9
    for r in rs:
        report = apply_relabeling(r)
        assert report.ok
        assert report.fixed_count == 8


def test_relabeling_rejects_foreign_domain():
    r = relabelings()[0]
    from bkscope.transforms import Relabeling

    bad = Relabeling("S2", r.target, r.mapping)
    with pytest.raises(ValueError):
        apply_relabeling(bad)


def test_thirty_six_letter_maps_are_the_local_subgroup():
    maps = local_maps()
    assert len(maps) == 36
    group = enumerate_symplectic()
    locals_ = {m for m in group if m.is_local()}
    assert {m.to_symplectic() for m in maps} == locals_


def test_letter_map_rejects_non_permutation():
    with pytest.raises(ValueError):
        LocalMap.from_dicts({"X": "Y", "Y": "Y"}, {})


def test_letter_map_action_matches_its_symplectic_matrix():
    for m in local_maps():
        sym = m.to_symplectic()
        for o in OBSERVABLES:
            assert m.apply(o) == sym.apply(o)


def test_stored_letter_maps_reach_their_squares():
    known = known_local_maps()
    assert len(known) == 8
    assert "S6" not in known
    s1 = square_by_id("S1")
    for sid, m in known.items():
        assert apply_local_map(m, s1).id == sid


def test_symplectic_group_order_and_membership():
    group = enumerate_symplectic()
    assert len(group) == 720
    j = np.array(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    )
    for m in group:
        r = np.array(m.rows)
        assert ((r.T @ j @ r) % 2 == j).all()


def test_symplectic_maps_preserve_commutation():
    group = enumerate_symplectic()
    pairs = list(itertools.combinations(OBSERVABLES, 2))[:12]
    from bkscope.pauli import commutes

    for m in group[::90]:
        for a, b in pairs:
            assert commutes(a, b) == commutes(m.apply(a), m.apply(b))


def test_compose_matches_sequential_application():
    group = enumerate_symplectic()
    a, b = group[17], group[523]
    ab = a.compose(b)
    for o in OBSERVABLES:
        assert ab.apply(o) == a.apply(b.apply(o))


def test_coset_sizes_partition_the_group():
    sizes = {sid: len(find_maps("S1", sid)) for sid in
             (f"S{i}" for i in range(1, 11))}
    assert set(sizes.values()) == {72}
    assert sum(sizes.values()) == 720
    assert IDENTITY_MAP in find_maps("S1", "S1")


def test_only_the_all_two_body_square_needs_a_nonlocal_map():
    for i in range(2, 11):
        sid = f"S{i}"
        has_local = any(m.is_local() for m in find_maps("S1", sid))
        assert has_local == (sid != "S6")


def test_clifford_catalog_is_complete_and_unitary():
    catalog = clifford_catalog()
    assert len(catalog) == 720
    dens = {}
    for m, u in catalog.items():
        dens[u.den] = dens.get(u.den, 0) + 1
        c = to_complex(u)
        assert np.allclose(c @ c.conj().T, np.eye(4))
    assert dens == {1: 48, 2: 672}


def test_catalog_entries_realize_their_maps():
    catalog = clifford_catalog()
    sample = list(catalog)[::144]
    for m in sample:
        assert symplectic_of_unitary(catalog[m]) == m


def test_lift_conjugation_matches_numpy_oracle():
    for m in (IDENTITY_MAP, find_maps("S1", "S6")[0], find_maps("S1", "S2")[0]):
        lift = lift_to_unitary(m)
        c = to_complex(lift.unitary)
        for o in OBSERVABLES:
            got = c @ oracle_matrix(o) @ c.conj().T
            want = lift.signs[str(o)] * oracle_matrix(m.apply(o))
            assert np.allclose(got, want)


def test_identity_lift_fixes_every_state():
    u = clifford_catalog()[IDENTITY_MAP]
    images = state_image_labels(u, tuple(range(1, 61)))
    assert images == {n: n for n in range(1, 61)}


def test_state_images_match_numpy_oracle():
    catalog = build_catalog()
    m = find_maps("S1", "S6")[0]
    u = lift_to_unitary(m).unitary
    c = to_complex(u)
    images = state_image_labels(u, tuple(range(1, 25)))
    for label, target in images.items():
        vec = np.array(
            [x.re + 1j * x.im for x in catalog.by_label(label).coords]
        )
        out = c @ vec
        tgt = np.array(
            [x.re + 1j * x.im for x in catalog.by_label(target).coords]
        )
        # projective match: the image is a scalar multiple of the target
        overlap = abs(np.vdot(out, tgt)) ** 2
        assert np.isclose(overlap, np.vdot(out, out).real * np.vdot(tgt, tgt).real)


def test_s6_column_search_report():
    report = s6_column_report()
    assert report.candidates == 72
    assert report.all_nonlocal
    assert report.lifts_verified == 72
    assert report.state_set_matches == 72
    assert report.exact_column_matches == 1


def test_unique_s6_witness():
    witnesses = relabeling_witnesses("S6")
    assert len(witnesses) == 1
    m, u = witnesses[0]
    assert m.rows == ((0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))
    assert u.den == 2
    assert [[(e.re, e.im) for e in row] for row in u.num] == [
        [(-1, 1), (0, 0), (0, 0), (-1, -1)],
        [(0, 0), (-1, 1), (1, 1), (0, 0)],
        [(0, 0), (1, 1), (-1, 1), (0, 0)],
        [(-1, -1), (0, 0), (0, 0), (-1, 1)],
    ]
    column = tables.SQUARE_RELABELINGS["S6"]
    assert state_image_labels(u, tuple(range(1, 25))) == {
        s: column[s - 1] for s in range(1, 25)
    }


def test_reduced_strips_common_content():
    two = ExactUnitary(
        tuple(
            tuple(GaussianInt(2 if i == j else 0, 0) for j in range(4))
            for i in range(4)
        ),
        2,
    )
    r = two.reduced()
    assert r.den == 1
    assert all(r.num[i][i].re == 1 for i in range(4))
