"""The 60-state catalog: canonical forms, eigen structure, inner products.

The eigenvector oracle here redoes everything in floating-point numpy,
independent of the exact path: each catalog state must be an eigenvector
of its three home observables with the recorded eigenvalues.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bkscope import tables
from bkscope.gaussian import GaussianInt, gint
from bkscope.pauli import obs
from bkscope.states import (
    NotEigenstateError,
    build_catalog,
    canonicalize,
    eigenbasis,
    eigenvalue_signature,
    inner_product,
    norm_sq,
    orthogonal,
    projective_equal,
    signature_table,
    state,
)

ints = st.integers(min_value=-9, max_value=9)
coords4 = st.tuples(*(st.builds(GaussianInt, ints, ints),) * 4).filter(
    lambda c: any(not g.is_zero() for g in c)
)


def to_complex(vec) -> np.ndarray:
    return np.array([c.re + 1j * c.im for c in vec.coords])


def pauli_complex(name: str) -> np.ndarray:
    single = {
        "I": np.eye(2, dtype=complex),
        "X": np.array([[0, 1], [1, 0]], dtype=complex),
        "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    }
    return np.kron(single[name[0]], single[name[1]])


def test_catalog_has_sixty_states_matching_the_stored_table():
    catalog = build_catalog()
    assert len(catalog.states) == 60
    stored = [
        tuple(GaussianInt(re, im) for re, im in row_coords)
        for _, _, coords in tables.STATE_ROWS
        for row_coords in coords
    ]
    assert [s.coords for s in catalog.states] == stored


def test_every_state_is_an_eigenvector_of_its_home_triad():
    catalog = build_catalog()
    for s in catalog.states:
        home = catalog.home_triad(s.label)
        signature = eigenvalue_signature(s, home)
        v = to_complex(s)
        for member, eig in zip(home.members, signature):
            m = pauli_complex(str(member))
            assert np.allclose(m @ v, eig * v), (s.label, str(member))


def test_signatures_are_unique_within_each_row():
    catalog = build_catalog()
    table = signature_table()
    for triad in catalog.row_triads:
        labels = catalog.labels_of_triad(triad)
        assert len({table[lab] for lab in labels}) == 4


def test_signature_product_equals_triad_sign():
    catalog = build_catalog()
    table = signature_table()
    for s in catalog.states:
        e1, e2, e3 = table[s.label]
        assert e1 * e2 * e3 == catalog.home_triad(s.label).sign


@pytest.mark.parametrize(
    "label,signature",
    [(1, (1, 1, 1)), (2, (-1, 1, -1)), (3, (1, -1, -1)), (4, (-1, -1, 1))],
)
def test_signature_examples(label, signature):
    assert signature_table()[label] == signature


def test_state_37_prints_as_documented():
    catalog = build_catalog()
    assert [(c.re, c.im) for c in catalog.by_label(37).coords] == [
        (1, 0),
        (0, 0),
        (0, 0),
        (0, 1),
    ]


def test_starred_rows_are_the_negative_triads():
    catalog = build_catalog()
    for (names, starred, _), triad in zip(tables.STATE_ROWS, catalog.row_triads):
        assert {str(o) for o in triad.members} == set(names)
        assert (triad.sign == -1) is starred


@pytest.mark.parametrize(
    "a,b,expected_norm",
    [((1, 2), (1, 2), 0), ((1, 5), (1, 5), 1), ((25, 25), (25, 25), 16)],
)
def test_inner_product_examples(a, b, expected_norm):
    catalog = build_catalog()
    ip = inner_product(catalog.by_label(a[0]), catalog.by_label(b[1]))
    assert ip.norm() == expected_norm


def test_orthogonality_is_exact():
    catalog = build_catalog()
    assert orthogonal(catalog.by_label(1), catalog.by_label(2))
    assert not orthogonal(catalog.by_label(1), catalog.by_label(5))


@given(coords4)
def test_canonicalize_is_idempotent(coords):
    once = canonicalize(coords)
    assert canonicalize(once) == once


@given(coords4)
def test_canonicalize_first_nonzero_is_positive_real_when_possible(coords):
    result = canonicalize(coords)
    lead = next(c for c in result if not c.is_zero())
    assert lead.re > 0 and lead.im >= 0


def test_canonicalize_removes_content_and_rotates():
    assert canonicalize((gint(0, 2), gint(2, 0), gint(0, 0), gint(0, 0))) == (
        gint(1, 0),
        gint(0, -1),
        gint(0, 0),
        gint(0, 0),
    )
    assert canonicalize((gint(-3, 0), gint(0, 3), gint(0, 0), gint(3, 0))) == (
        gint(1, 0),
        gint(0, -1),
        gint(0, 0),
        gint(-1, 0),
    )


@given(coords4)
def test_projective_equal_ignores_scale(coords):
    doubled = tuple(c.scale(2) for c in coords)
    rotated = tuple(c * gint(0, 1) for c in coords)
    assert projective_equal(state(coords), state(doubled))
    assert projective_equal(state(coords), state(rotated))


def test_projective_equal_separates_distinct_states():
    catalog = build_catalog()
    assert not projective_equal(catalog.by_label(1), catalog.by_label(2))
    assert projective_equal(catalog.by_label(5), state(tuple(
        c.scale(-3) for c in catalog.by_label(5).coords
    )))


def test_eigenbasis_orders_by_first_two_signatures():
    catalog = build_catalog()
    for triad in catalog.row_triads:
        basis = eigenbasis(triad)
        sigs = [eigenvalue_signature(v, triad)[:2] for v in basis]
        assert sigs == [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def test_non_eigenstate_raises():
    catalog = build_catalog()
    with pytest.raises(NotEigenstateError):
        eigenvalue_signature(catalog.by_label(5), catalog.home_triad(1))


def test_label_lookup_roundtrip():
    catalog = build_catalog()
    for s in catalog.states:
        assert catalog.label_of(s.coords) == s.label
    with pytest.raises(KeyError):
        catalog.label_of((gint(7, 0), gint(1, 0), gint(0, 0), gint(0, 0)))
