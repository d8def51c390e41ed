"""HTTP service wrapping the core operations.

Run with: uvicorn wtables.service:app
Domain errors map to 422 responses with the error class and message.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .bv import bv, bv_details
from .caction import c_k_action
from .classify import classify, is_finite_dimensional
from .domino import DominoTableau, cycles, dt, move_through_seq
from .stables import stable_from_json, stable_to_json
from .tau import DEFAULT_CAP, tau_class
from .words import parse_word, rs_insert

app = FastAPI(title="wtables", version=__version__)


@app.exception_handler(ValueError)
@app.exception_handler(AssertionError)
async def _domain_error(request: Request, exc: Exception):
    return JSONResponse(status_code=422, content={
        "error": type(exc).__name__, "detail": str(exc)})


class WordRequest(BaseModel):
    word: list[str] = Field(description='Entries as exact strings, e.g. "-7", "3/2".')


class TableauResponse(BaseModel):
    tableau: list[list[str]] = Field(description="Rows, bottom row first.")


@app.post("/rs", response_model=TableauResponse)
def rs_endpoint(req: WordRequest):
    t = rs_insert(parse_word(req.word))
    return {"tableau": [[str(x) for x in r] for r in t]}


class BvRequest(BaseModel):
    gtype: str
    weight: list[str]
    details: bool = False


class BvResponse(BaseModel):
    partition: list[int]
    details: dict | None = None


@app.post("/bv", response_model=BvResponse)
def bv_endpoint(req: BvRequest):
    mu = parse_word(req.weight)
    out = {"partition": list(bv(mu, req.gtype))}
    if req.details:
        out["details"] = bv_details(mu, req.gtype)
    return out


class TauRequest(BaseModel):
    weight: list[str]
    cap: int = DEFAULT_CAP
    members: bool = False


class TauResponse(BaseModel):
    size: int
    fingerprint: list[str]
    non_regular: bool
    members: list[list[str]] | None = None


@app.post("/tau-class", response_model=TauResponse)
def tau_endpoint(req: TauRequest):
    cls = tau_class(parse_word(req.weight), req.cap)
    out = {
        "size": len(cls),
        "fingerprint": [str(x) for x in cls.fingerprint],
        "non_regular": cls.has_repeated_abs,
    }
    if req.members:
        out["members"] = sorted([str(x) for x in m] for m in cls.members)
    return out


class SignedTableauRequest(BaseModel):
    tableau: list[list[str]] = Field(description="Rows, bottom row first.")


class DominoModel(BaseModel):
    dominoes: dict[str, list[list[int]]]
    zero_cell: bool = False


@app.post("/domino/dt", response_model=DominoModel)
def dt_endpoint(req: SignedTableauRequest):
    return dt([parse_word(r) for r in req.tableau]).to_json()


class CyclesResponse(BaseModel):
    cycles: list[list[int]]


@app.post("/domino/cycles", response_model=CyclesResponse)
def cycles_endpoint(req: DominoModel):
    r = DominoTableau.from_json(req.model_dump())
    return {"cycles": sorted(sorted(c) for c in cycles(r))}


class MtRequest(BaseModel):
    tableau: DominoModel
    cycle_sequence: list[list[int]]


@app.post("/domino/mt", response_model=DominoModel)
def mt_endpoint(req: MtRequest):
    r = DominoTableau.from_json(req.tableau.model_dump())
    return move_through_seq(r, [frozenset(c) for c in req.cycle_sequence]).to_json()


class STableModel(BaseModel):
    gtype: str
    rows: list[list[str]] = Field(description="Rows, top to bottom.")


class CactionRequest(BaseModel):
    table: STableModel
    k: int = 1
    strategy: str = "oracle"
    cap: int = DEFAULT_CAP


@app.post("/caction", response_model=STableModel)
def caction_endpoint(req: CactionRequest):
    a = stable_from_json(req.table.model_dump())
    return stable_to_json(c_k_action(a, req.k, req.strategy, req.cap))


class FinDimRequest(BaseModel):
    table: STableModel
    method: str = "bv"
    cap: int = DEFAULT_CAP


class FinDimResponse(BaseModel):
    finite_dimensional: bool


@app.post("/finite-dimensional", response_model=FinDimResponse)
def findim_endpoint(req: FinDimRequest):
    a = stable_from_json(req.table.model_dump())
    return {"finite_dimensional": is_finite_dimensional(a, req.method, req.cap)}


class ClassifyRequest(BaseModel):
    gtype: str
    partition: list[int]
    bound: str
    method: str = "bv"
    cap: int = DEFAULT_CAP
    workers: int = 1


@app.post("/classify")
def classify_endpoint(req: ClassifyRequest):
    return classify(tuple(req.partition), req.gtype, req.bound,
                    req.method, req.cap, req.workers)
