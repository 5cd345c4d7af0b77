"""Verification suites over every layer of the catalog.

Each suite recomputes a family of objects from scratch and checks the
invariants that define them, returning a report of named pass/fail checks
plus informational notes (facts worth surfacing that are not pass/fail,
like search outcomes).  `run("all")` chains every suite.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import apparitions as app_mod
from . import designs, geometry, hexagon, pauli, states, tables, transforms
from .gaussian import GaussianInt, mat_conj_transpose, mat_identity, mat_mul, mat_scale


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    scope: str
    checks: tuple[Check, ...]
    notes: tuple[str, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def to_payload(self) -> dict:
        return {
            "scope": self.scope,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
            "notes": list(self.notes),
        }


def _timed(scope: str, body) -> SuiteReport:
    checks: list[Check] = []
    notes: list[str] = []
    start = time.perf_counter()
    try:
        body(checks, notes)
    except Exception as exc:  # a broken table must fail loudly, not crash
        checks.append(Check("suite_completed", False, f"{type(exc).__name__}: {exc}"))
    return SuiteReport(scope, tuple(checks), tuple(notes), time.perf_counter() - start)


def _add(checks: list[Check], name: str, ok: bool, detail: str = "") -> None:
    checks.append(Check(name, bool(ok), detail))


# --- suites -----------------------------------------------------------------


def verify_observables() -> SuiteReport:
    def body(checks, notes):
        obs_all = pauli.OBSERVABLES
        _add(checks, "observable_count", len(obs_all) == 15, f"{len(obs_all)}")
        triads = pauli.enumerate_triads()
        _add(checks, "triad_count", len(triads) == 15, f"{len(triads)}")

        membership = Counter()
        for t in triads:
            for o in t.members:
                membership[o] += 1
        _add(
            checks,
            "each_observable_in_three_triads",
            set(membership.values()) == {3} and len(membership) == 15,
        )

        degree_ok = all(
            sum(pauli.commutes(a, b) for b in obs_all if b != a) == 6 for a in obs_all
        )
        _add(checks, "commutation_degree_six", degree_ok)

        product_ok = True
        for t in triads:
            m = mat_identity(4)
            for member in t.members:
                m = mat_mul(m, member.matrix())
            if m != mat_scale(mat_identity(4), GaussianInt(t.sign, 0)):
                product_ok = False
        _add(checks, "triad_products_exact", product_ok)

        negative = {
            frozenset(str(o) for o in t.members) for t in triads if t.sign == -1
        }
        expected = {
            frozenset({"XX", "ZZ", "YY"}),
            frozenset({"XY", "YZ", "ZX"}),
            frozenset({"YX", "ZY", "XZ"}),
        }
        _add(checks, "negative_triads", negative == expected, f"{len(negative)} of 15")

    return _timed("observables", body)


def verify_states() -> SuiteReport:
    def body(checks, notes):
        catalog = states.build_catalog()
        _add(checks, "catalog_rebuilt_from_eigenbases", len(catalog.states) == 60)
        _add(
            checks,
            "states_projectively_distinct",
            len({s.coords for s in catalog.states}) == 60,
        )
        _add(
            checks,
            "coordinates_stored_canonical",
            all(states.canonicalize(s.coords) == s.coords for s in catalog.states),
        )

        rows_orthogonal = True
        signatures_ok = True
        for triad in catalog.row_triads:
            labels = catalog.labels_of_triad(triad)
            vecs = [catalog.by_label(lab) for lab in labels]
            for a, b in combinations(vecs, 2):
                if not states.orthogonal(a, b):
                    rows_orthogonal = False
            sigs = set()
            for v in vecs:
                sig = states.eigenvalue_signature(v, triad)
                sigs.add(sig)
                if sig[0] * sig[1] * sig[2] != triad.sign:
                    signatures_ok = False
            if len(sigs) != 4:
                signatures_ok = False
        _add(checks, "row_bases_orthogonal", rows_orthogonal)
        _add(checks, "eigenvalue_signatures_consistent", signatures_ok)

    return _timed("states", body)


def verify_squares() -> SuiteReport:
    def body(checks, notes):
        parts = hexagon.enumerate_triangle_partitions()
        _add(checks, "triangle_partitions", len(parts) == 10, f"{len(parts)}")
        squares = hexagon.enumerate_squares()
        _add(
            checks,
            "square_ids_assigned",
            sorted(s.id for s in squares) == sorted(f"S{i}" for i in range(1, 11)),
        )

        all_magic = True
        negative_counts = Counter()
        for s in squares:
            report = hexagon.verify_magic(s)
            if not report.is_magic:
                all_magic = False
            negative_counts[report.negative_lines] += 1
        _add(checks, "all_squares_magic", all_magic)
        _add(
            checks,
            "negative_line_distribution",
            negative_counts == Counter({1: 9, 3: 1}),
            f"{dict(sorted(negative_counts.items()))}",
        )
        s6 = hexagon.square_by_id("S6")
        _add(
            checks,
            "triple_negative_square_is_all_two_body",
            sum(sign == -1 for sign in s6.line_signs) == 3
            and all("I" not in str(o) for o in s6.observables()),
        )

        obs_usage = Counter()
        line_usage = Counter()
        for s in squares:
            for o in s.observables():
                obs_usage[o] += 1
            rows, cols = hexagon.line_triads(s)
            for t in rows + cols:
                line_usage[t] += 1
        _add(checks, "each_observable_in_six_squares", set(obs_usage.values()) == {6})
        _add(checks, "each_triad_lines_four_squares", set(line_usage.values()) == {4})

        state_usage = Counter()
        for s in squares:
            labels = geometry.square_states(s.id).all
            if len(labels) != 24:
                _add(checks, f"{s.id}_state_count", False, f"{len(labels)}")
            for lab in labels:
                state_usage[lab] += 1
        _add(
            checks,
            "each_state_in_four_squares",
            set(state_usage.values()) == {4} and len(state_usage) == 60,
        )

        sharing_ok = True
        for a, b in combinations(squares, 2):
            ra, ca = map(set, hexagon.line_triads(a))
            rb, cb = map(set, hexagon.line_triads(b))
            shared = (ra | ca) & (rb | cb)
            if not (
                len(shared) == 2
                and len(shared & ra) == 1
                and len(shared & ca) == 1
                and len(shared & rb) == 1
                and len(shared & cb) == 1
            ):
                sharing_ok = False
            if len(geometry.shared_states(a.id, b.id)) != 8:
                sharing_ok = False
        _add(checks, "pairs_share_one_row_one_column_eight_states", sharing_ok)

    return _timed("squares", body)


def verify_reye() -> SuiteReport:
    def body(checks, notes):
        tetrads = geometry.all_tetrads()
        _add(checks, "tetrad_count", len(tetrads) == 105, f"{len(tetrads)}")
        per_state = Counter()
        for t in tetrads:
            for lab in t:
                per_state[lab] += 1
        _add(
            checks,
            "each_state_in_seven_tetrads",
            set(per_state.values()) == {7} and len(per_state) == 60,
        )
        profile = geometry.co_occurrence_profile()
        _add(
            checks,
            "co_occurrence_profile",
            all(p == {1: 12, 3: 3} for p in profile.values()),
        )

        configs_ok = True
        pairings_ok = True
        triangles_ok = True
        for i in range(1, 11):
            sid = f"S{i}"
            if len(geometry.square_tetrads(sid)) != 24:
                _add(checks, f"{sid}_tetrad_count", False)
            row_cfg, col_cfg = geometry.square_configs(sid)
            for cfg in (row_cfg, col_cfg):
                if len(cfg.points) != 12 or len(cfg.lines) != 16:
                    configs_ok = False
                per_point = Counter(p for line in cfg.lines for p in line)
                if set(per_point.values()) != {4}:
                    configs_ok = False
                for a, b in combinations(cfg.lines, 2):
                    if len(set(a) & set(b)) > 1:
                        configs_ok = False
            pairing = geometry.partner_pairing(row_cfg, col_cfg)
            if len(pairing.pairs) != 16:
                pairings_ok = False
            tri = geometry.point_triangles(sid)
            if set(len(v) for v in tri.values()) != {4} or len(tri) != 24:
                triangles_ok = False
        _add(checks, "configs_twelve_points_sixteen_lines", configs_ok)
        _add(checks, "partner_pairings_complete", pairings_ok)
        _add(checks, "four_triangles_per_point", triangles_ok)

        _add(
            checks,
            "stored_tetrads_match",
            set(geometry.square_tetrads("S1")) == set(tables.S1_TETRADS),
        )
        row_cfg, col_cfg = geometry.square_configs("S1")
        pairing = geometry.partner_pairing(row_cfg, col_cfg)
        _add(
            checks,
            "stored_partner_lines_match",
            set(pairing.pairs)
            == {(tuple(a), tuple(b)) for a, b in tables.S1_PARTNER_LINES},
        )
        _add(
            checks,
            "stored_point_triangles_match",
            {
                p: set(v) for p, v in geometry.point_triangles("S1").items()
            }
            == {p: set(map(tuple, v)) for p, v in tables.S1_POINT_TRIANGLES.items()},
        )

    return _timed("reye", body)


def verify_apparitions() -> SuiteReport:
    def body(checks, notes):
        counts_ok = True
        parity_ok = True
        for i in range(1, 11):
            sid = f"S{i}"
            k18 = app_mod.gen18(sid)
            k20 = app_mod.gen20(sid)
            if len(k18) != 16 or len(k20) != 96:
                counts_ok = False
            for a in k18 + k20:
                if not app_mod.parity_check(a):
                    parity_ok = False
        _add(checks, "per_square_counts_16_and_96", counts_ok)
        _add(checks, "parity_proof_structure", parity_ok)

        everything = app_mod.enumerate_all()
        _add(checks, "total_distinct", len(everything) == 1120, f"{len(everything)}")

        uncolorable = all(
            app_mod.color_search(a.states(), a.tetrads) == 0
            for a in app_mod.square_apparitions("S1")
        )
        _add(checks, "sample_square_apparitions_uncolorable", uncolorable)

        full = app_mod.color_search(
            tuple(range(1, 61)), geometry.all_tetrads()
        )
        _add(checks, "full_system_uncolorable", full == 0, f"{full} colorings")

        probe = app_mod.removal_probe("S1")
        notes.append(
            "kind-18 removal probe on S1: dropping any single tetrad "
            f"{'restores' if probe.all_colorable else 'does not always restore'} "
            "colorability"
        )

    return _timed("apparitions", body)


def verify_designs() -> SuiteReport:
    def body(checks, notes):
        triads = pauli.enumerate_triads()
        triad_design = designs.qbd_profile(
            pauli.OBSERVABLES, [t.members for t in triads]
        )
        _add(
            checks,
            "triad_design_symbol",
            str(triad_design) == "{15,15,3,3;(1,6)}",
            str(triad_design),
        )

        square_symbols = {
            designs.square_design(f"S{i}") for i in range(1, 11)
        }
        _add(
            checks,
            "square_design_symbol",
            {str(s) for s in square_symbols} == {"{24,24,4,4;(1,6),(2,3)}"},
            ", ".join(sorted(str(s) for s in square_symbols)),
        )

        global_design = designs.qbd_profile(
            list(range(1, 61)), geometry.all_tetrads()
        )
        _add(
            checks,
            "global_tetrad_design_symbol",
            str(global_design) == "{105,60,7,4;(1,12),(3,3)}",
            str(global_design),
        )

        report = designs.verify_mub_sets()
        _add(checks, "unbiased_families_verified", report.ok)
        _add(
            checks,
            "unbiased_family_design_symbol",
            str(report.design) == "{6,15,2,5;(1,8)}",
            str(report.design),
        )
        notes.append(
            "disjoint pair of unbiased families exists: "
            f"{report.exists_disjoint_pair} (a partition of the 15 triads into "
            "three disjoint families would require one)"
        )

        relations_ok = all(
            designs.square_mub_relations(f"S{i}").ok for i in range(1, 11)
        )
        _add(checks, "square_row_column_unbiasedness", relations_ok)

    return _timed("designs", body)


def verify_transforms() -> SuiteReport:
    def body(checks, notes):
        group = transforms.enumerate_symplectic()
        _add(checks, "symplectic_group_order", len(group) == 720, f"{len(group)}")

        locals_ = [m for m in group if m.is_local()]
        letter_maps = transforms.local_maps()
        _add(
            checks,
            "local_subgroup_order",
            len(locals_) == 36 and len(letter_maps) == 36,
        )
        _add(
            checks,
            "letter_maps_are_the_local_subgroup",
            {m.to_symplectic() for m in letter_maps} == set(locals_),
        )

        reports = [transforms.apply_relabeling(r) for r in transforms.relabelings()]
        _add(checks, "stored_relabelings_carry_tetrads", all(r.ok for r in reports))

        known = transforms.known_local_maps()
        known_ok = all(
            transforms.apply_local_map(m, hexagon.square_by_id("S1")).id == sid
            for sid, m in known.items()
        )
        _add(checks, "stored_letter_maps_reach_targets", known_ok, f"{len(known)} rows")

        sizes = {}
        nonlocal_only = None
        for i in range(1, 11):
            sid = f"S{i}"
            maps = transforms.find_maps("S1", sid)
            sizes[sid] = len(maps)
            if sid == "S6":
                nonlocal_only = all(not m.is_local() for m in maps)
        _add(
            checks,
            "cosets_of_equal_size",
            set(sizes.values()) == {72} and sum(sizes.values()) == 720,
            f"{sizes}",
        )
        _add(checks, "all_two_body_square_needs_nonlocal_map", bool(nonlocal_only))

        catalog = transforms.clifford_catalog()
        _add(checks, "clifford_catalog_complete", len(catalog) == 720)
        scale_ok = True
        for m, u in catalog.items():
            prod = mat_mul(u.num, mat_conj_transpose(u.num))
            if prod != mat_scale(mat_identity(4), GaussianInt(u.den * u.den, 0)):
                scale_ok = False
                break
        _add(checks, "catalog_entries_unitary", scale_ok)

        report = transforms.s6_column_report()
        _add(
            checks,
            "s6_candidates_lift_and_land",
            report.candidates == 72
            and report.all_nonlocal
            and report.lifts_verified == report.candidates
            and report.state_set_matches == report.candidates,
        )
        notes.append(
            f"S1->S6 search: {report.candidates} symplectic candidates, all "
            f"nonlocal; {report.exact_column_matches} reproduce the stored "
            "state relabeling column exactly"
        )

    return _timed("transforms", body)


SCOPES = {
    "observables": verify_observables,
    "states": verify_states,
    "squares": verify_squares,
    "reye": verify_reye,
    "apparitions": verify_apparitions,
    "designs": verify_designs,
    "transforms": verify_transforms,
}


def run(scope: str) -> SuiteReport:
    if scope == "all":
        checks: list[Check] = []
        notes: list[str] = []
        start = time.perf_counter()
        for name, suite in SCOPES.items():
            report = suite()
            checks.extend(
                Check(f"{name}:{c.name}", c.ok, c.detail) for c in report.checks
            )
            notes.extend(report.notes)
        return SuiteReport("all", tuple(checks), tuple(notes), time.perf_counter() - start)
    if scope not in SCOPES:
        raise KeyError(f"unknown scope {scope!r}")
    return SCOPES[scope]()


def clear_caches() -> None:
    """Drop every memoized table so a patched golden table takes effect."""
    cached = [
        pauli.enumerate_triads,
        states.build_catalog,
        hexagon.enumerate_triangle_partitions,
        hexagon.enumerate_squares,
        geometry._orthogonality,
        geometry.all_tetrads,
        geometry.square_states,
        geometry.square_tetrads,
        geometry.square_configs,
        geometry.triangles,
        geometry.point_triangles,
        app_mod.square_apparitions,
        app_mod.enumerate_all,
        transforms.relabelings,
        transforms.local_maps,
        transforms.known_local_maps,
        transforms.enumerate_symplectic,
        transforms.clifford_catalog,
        designs.mub_sets,
    ]
    for fn in cached:
        fn.cache_clear()
