"""HTTP API over the catalog.

Every endpoint recomputes nothing per request beyond what the cached core
enumerations provide; responses are deterministic documents described by
the models in schemas.py.  The CLI talks to this app in-process, so the
service layer is also the single formatting boundary of the package.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from .. import apparitions as app_mod
from .. import designs, geometry, hexagon, pauli, tables, transforms, verify
from ..states import build_catalog, eigenvalue_signature, norm_sq
from . import schemas

app = FastAPI(title="bkscope", version=__version__)

_SQUARE_IDS = tuple(f"S{i}" for i in range(1, 11))


def _need_square(sid: str) -> str:
    if sid not in _SQUARE_IDS:
        raise HTTPException(status_code=404, detail=f"unknown square {sid!r}")
    return sid


@app.get("/health", response_model=schemas.HealthOut)
def health():
    return {"status": "ok", "version": __version__}


@app.get("/observables", response_model=schemas.ObservablesOut)
def observables():
    rows = [{"name": str(o), "bits": list(o.bits)} for o in pauli.OBSERVABLES]
    return {"count": len(rows), "observables": rows}


@app.get("/triads", response_model=schemas.TriadsOut)
def triads():
    catalog = build_catalog()
    rows = [
        {
            "members": [str(o) for o in t.members],
            "sign": t.sign,
            "state_labels": list(catalog.labels_of_triad(t)),
        }
        for t in catalog.row_triads
    ]
    return {"count": len(rows), "triads": rows}


@app.get("/states", response_model=schemas.StatesOut)
def states():
    catalog = build_catalog()
    rows = []
    for s in catalog.states:
        home = catalog.home_triad(s.label)
        rows.append(
            {
                "label": s.label,
                "coords": [[c.re, c.im] for c in s.coords],
                "home_triad": [str(o) for o in home.members],
                "signature": list(eigenvalue_signature(s, home)),
                "norm": norm_sq(s),
            }
        )
    return {"count": len(rows), "states": rows}


def _square_summary(s) -> dict:
    return {
        "id": s.id,
        "grid": [[str(o) for o in row] for row in s.grid],
        "line_signs": list(s.line_signs),
    }


@app.get("/squares", response_model=schemas.SquaresOut)
def squares():
    rows = [_square_summary(s) for s in hexagon.enumerate_squares()]
    return {"count": len(rows), "squares": rows}


@app.get("/squares/{sid}", response_model=schemas.SquareOut)
def square_detail(sid: str):
    sid = _need_square(sid)
    s = hexagon.square_by_id(sid)
    report = hexagon.verify_magic(s)
    catalog = build_catalog()
    rows, cols = hexagon.line_triads(s)
    payload = _square_summary(s)
    payload.update(
        negative_lines=report.negative_lines,
        satisfying_assignments=report.satisfying_assignments,
        row_states=[list(catalog.labels_of_triad(t)) for t in rows],
        column_states=[list(catalog.labels_of_triad(t)) for t in cols],
    )
    return payload


@app.get("/tetrads", response_model=schemas.TetradsOut)
def tetrads(square: str | None = None):
    if square is None:
        found = geometry.all_tetrads()
    else:
        found = geometry.square_tetrads(_need_square(square))
    return {
        "square": square,
        "count": len(found),
        "tetrads": [list(t) for t in found],
    }


@app.get("/reye", response_model=schemas.ReyeOut)
def reye(square: str):
    sid = _need_square(square)
    row_cfg, col_cfg = geometry.square_configs(sid)
    pairing = geometry.partner_pairing(row_cfg, col_cfg)
    return {
        "square": sid,
        "row_config": {
            "points": list(row_cfg.points),
            "lines": [list(l) for l in row_cfg.lines],
        },
        "column_config": {
            "points": list(col_cfg.points),
            "lines": [list(l) for l in col_cfg.lines],
        },
        "partner_pairs": [[list(a), list(b)] for a, b in pairing.pairs],
        "point_triangles": {
            p: [list(t) for t in tris]
            for p, tris in sorted(geometry.point_triangles(sid).items())
        },
    }


@app.get("/mubsets", response_model=schemas.MubSetsOut)
def mubsets():
    sets = designs.mub_sets()
    rows = [
        {
            "index": i + 1,
            "triads": [[str(o) for o in t.members] for t in row],
        }
        for i, row in enumerate(sets)
    ]
    return {"count": len(rows), "sets": rows}


def _design_payload(name: str, symbol: designs.QBDSymbol) -> dict:
    return {
        "name": name,
        "b": symbol.b,
        "v": symbol.v,
        "r": symbol.r,
        "k": symbol.k,
        "pairs": [list(p) for p in symbol.pairs],
        "symbol": str(symbol),
        "identities_hold": symbol.identities_hold(),
    }


@app.get("/designs", response_model=schemas.DesignsOut)
def design_symbols():
    triad_design = designs.qbd_profile(
        pauli.OBSERVABLES, [t.members for t in pauli.enumerate_triads()]
    )
    square = designs.square_design("S1")
    global_design = designs.qbd_profile(list(range(1, 61)), geometry.all_tetrads())
    mub_design = designs.qbd_profile(
        list(pauli.enumerate_triads()),
        [list(row) for row in designs.mub_sets()],
    )
    return {
        "designs": [
            _design_payload("triads_over_observables", triad_design),
            _design_payload("tetrads_over_square_states", square),
            _design_payload("tetrads_over_all_states", global_design),
            _design_payload("unbiased_families_over_triads", mub_design),
        ]
    }


@app.get("/apparitions", response_model=schemas.ApparitionsOut)
def apparitions(square: str = "all", kind: str = "all", check: bool = False):
    if square == "all":
        sids = _SQUARE_IDS
    else:
        sids = (_need_square(square),)
    if kind not in ("18", "20", "all"):
        raise HTTPException(status_code=422, detail=f"unknown kind {kind!r}")
    rows = []
    for sid in sids:
        found = app_mod.square_apparitions(sid)
        for a in found:
            if kind != "all" and a.kind != int(kind):
                continue
            payload = {
                "square": a.square_id,
                "kind": a.kind,
                "excluded": list(a.excluded),
                "tetrads": [list(t) for t in a.tetrads],
                "parity": app_mod.parity_check(a),
            }
            if check:
                payload["colorings"] = app_mod.color_search(a.states(), a.tetrads)
            rows.append(payload)
    return {"count": len(rows), "apparitions": rows}


@app.get("/find-map", response_model=schemas.FindMapOut)
def find_map(src: str, dst: str, lift: bool = False):
    source = _need_square(src)
    target = _need_square(dst)
    maps = transforms.find_maps(source, target)
    rows = []
    for m in maps:
        payload = m.to_payload()
        if lift:
            lifted = transforms.lift_to_unitary(m)
            payload["lift"] = {
                "den": lifted.unitary.den,
                "num": lifted.unitary.to_payload()["num"],
                "signs": lifted.signs,
            }
        rows.append(payload)
    return {
        "source": source,
        "target": target,
        "count": len(rows),
        "all_nonlocal": all(not m.is_local() for m in maps),
        "maps": rows,
    }


@app.get("/verify/{scope}", response_model=schemas.VerifyOut)
def run_verify(scope: str):
    if scope != "all" and scope not in verify.SCOPES:
        raise HTTPException(status_code=404, detail=f"unknown scope {scope!r}")
    return verify.run(scope).to_payload()


@app.get("/golden")
def golden():
    return tables.golden_payload()
