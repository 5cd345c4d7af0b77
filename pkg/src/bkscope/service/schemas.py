"""Response models for the HTTP API.

Everything the service returns is one of these shapes; the CLI renders them
and the tests round-trip them.  Coordinates are exact: a Gaussian integer
travels as [re, im], a unitary as an integer matrix over a denominator.
"""

from pydantic import BaseModel

GaussianPair = list[int]  # [re, im]


class HealthOut(BaseModel):
    status: str
    version: str


class ObservableOut(BaseModel):
    name: str
    bits: list[int]


class ObservablesOut(BaseModel):
    count: int
    observables: list[ObservableOut]


class TriadOut(BaseModel):
    members: list[str]
    sign: int
    state_labels: list[int]


class TriadsOut(BaseModel):
    count: int
    triads: list[TriadOut]


class StateOut(BaseModel):
    label: int
    coords: list[GaussianPair]
    home_triad: list[str]
    signature: list[int]
    norm: int


class StatesOut(BaseModel):
    count: int
    states: list[StateOut]


class SquareSummaryOut(BaseModel):
    id: str
    grid: list[list[str]]
    line_signs: list[int]


class SquareOut(BaseModel):
    id: str
    grid: list[list[str]]
    line_signs: list[int]
    negative_lines: int
    satisfying_assignments: int
    row_states: list[list[int]]
    column_states: list[list[int]]


class SquaresOut(BaseModel):
    count: int
    squares: list[SquareSummaryOut]


class TetradsOut(BaseModel):
    square: str | None
    count: int
    tetrads: list[list[int]]


class ReyeConfigOut(BaseModel):
    points: list[int]
    lines: list[list[int]]


class ReyeOut(BaseModel):
    square: str
    row_config: ReyeConfigOut
    column_config: ReyeConfigOut
    partner_pairs: list[list[list[int]]]
    point_triangles: dict[int, list[list[int]]]


class MubSetOut(BaseModel):
    index: int
    triads: list[list[str]]


class MubSetsOut(BaseModel):
    count: int
    sets: list[MubSetOut]


class DesignOut(BaseModel):
    name: str
    b: int
    v: int
    r: int
    k: int
    pairs: list[list[int]]
    symbol: str
    identities_hold: bool


class DesignsOut(BaseModel):
    designs: list[DesignOut]


class ApparitionOut(BaseModel):
    square: str
    kind: int
    excluded: list[int]
    tetrads: list[list[int]]
    parity: bool
    colorings: int | None = None


class ApparitionsOut(BaseModel):
    count: int
    apparitions: list[ApparitionOut]


class LiftOut(BaseModel):
    den: int
    num: list[list[GaussianPair]]
    signs: dict[str, int]


class MapOut(BaseModel):
    rows: list[list[int]]
    local: bool
    lift: LiftOut | None = None


class FindMapOut(BaseModel):
    source: str
    target: str
    count: int
    all_nonlocal: bool
    maps: list[MapOut]


class CheckOut(BaseModel):
    name: str
    ok: bool
    detail: str


class VerifyOut(BaseModel):
    scope: str
    ok: bool
    elapsed: float
    checks: list[CheckOut]
    notes: list[str]
