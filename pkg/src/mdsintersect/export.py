"""JSON records for fields, codes, pairs, verdicts, AEAQECC parameters and run reports.

Every record carries ``schema_version`` and ``record``; elements are canonical
integers and matrices are row lists.  ``from_dict(to_dict(x))`` rebuilds an
equal object for every record type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

import numpy as np

from .code import LinearCode
from .construct import FeasibilityVerdict, IntersectionPair, PairRequest, Status
from .field import FieldContext, make_field
from .matrix import Matrix
from .quantum import AeaqeccParams

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    pass


def _head(kind: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "record": kind}


def _check(d: dict, kind: str) -> None:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {d.get('schema_version')!r}")
    if d.get("record") != kind:
        raise SchemaError(f"expected a {kind!r} record, got {d.get('record')!r}")


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, np.integer):
        return int(x)
    return x


# -- field / matrix / code ------------------------------------------------------


def field_to_dict(F: FieldContext) -> dict:
    return {**_head("field"), "p": F.p, "m": F.m, "modulus": list(F.modulus)}


def field_from_dict(d: dict) -> FieldContext:
    _check(d, "field")
    F = make_field(d["p"], d["m"])
    if list(F.modulus) != list(d["modulus"]):
        raise SchemaError(f"modulus {d['modulus']} differs from the canonical {list(F.modulus)}")
    return F


def _matrix_from_rows(F: FieldContext, rows, cols: int) -> Matrix:
    return Matrix(F, np.array(rows, dtype=np.int64).reshape(-1, cols), cols=cols)


def code_to_dict(C: LinearCode, with_parity: bool = True) -> dict:
    out = {
        **_head("code"),
        "field": field_to_dict(C.field),
        "n": C.n,
        "k": C.k,
        "generator": C.G.tolist(),
        "parity": C.H.tolist() if with_parity else None,
        "d": C.d,
        "tag": C.tag,
    }
    return out


def code_from_dict(d: dict) -> LinearCode:
    _check(d, "code")
    F = field_from_dict(d["field"])
    n = d["n"]
    G = _matrix_from_rows(F, d["generator"], n)
    H = _matrix_from_rows(F, d["parity"], n) if d.get("parity") is not None else None
    C = LinearCode(G, H=H, d=d.get("d"), tag=d.get("tag", ""))
    if C.k != d["k"]:
        raise SchemaError("generator row count disagrees with k")
    return C


def codes_equal(a: LinearCode, b: LinearCode) -> bool:
    """Same field, same displayed generator, same parity rows, tag and d."""
    return code_to_dict(a) == code_to_dict(b)


# -- verdict / pair / params ----------------------------------------------------


def request_to_dict(r: PairRequest) -> dict:
    return {**_head("request"), "q": r.q, "n": r.n, "k1": r.k1, "k2": r.k2, "l": r.l}


def request_from_dict(d: dict) -> PairRequest:
    _check(d, "request")
    return PairRequest(d["q"], d["n"], d["k1"], d["k2"], d["l"])


def verdict_to_dict(v: FeasibilityVerdict) -> dict:
    return {**_head("verdict"), "status": v.status.value, "route": v.route, "reason": v.reason}


def verdict_from_dict(d: dict) -> FeasibilityVerdict:
    _check(d, "verdict")
    return FeasibilityVerdict(Status(d["status"]), route=d.get("route"), reason=d.get("reason", ""))


def pair_to_dict(p: IntersectionPair) -> dict:
    return {
        **_head("pair"),
        "C1": code_to_dict(p.C1),
        "C2": code_to_dict(p.C2),
        "l_claimed": p.l_claimed,
        "l_verified": p.l_verified,
        "route": p.route,
        "intersection_basis": p.intersection_basis.tolist(),
        "oracles": _jsonable(p.oracles),
    }


def pair_from_dict(d: dict) -> IntersectionPair:
    _check(d, "pair")
    C1, C2 = code_from_dict(d["C1"]), code_from_dict(d["C2"])
    return IntersectionPair(
        C1=C1,
        C2=C2,
        l_claimed=d["l_claimed"],
        l_verified=d["l_verified"],
        route=d["route"],
        intersection_basis=_matrix_from_rows(C1.field, d["intersection_basis"], C1.n),
        oracles=dict(d.get("oracles", {})),
    )


def params_to_dict(a: AeaqeccParams, pair: Optional[dict] = None) -> dict:
    out = {
        **_head("aeaqecc"),
        "q": a.q,
        "n": a.n,
        "k": a.k,
        "dz": a.dz,
        "dx": a.dx,
        "c": a.c,
        "pure": a.pure,
        "mds": a.mds,
        "label": str(a),
    }
    if pair is not None:
        out["pair"] = pair
    return out


def params_from_dict(d: dict) -> AeaqeccParams:
    _check(d, "aeaqecc")
    return AeaqeccParams(
        q=d["q"], n=d["n"], k=d["k"], dz=d["dz"], dx=d["dx"], c=d["c"], pure=d["pure"], mds=d["mds"]
    )


# -- run report -----------------------------------------------------------------------


@dataclass
class RunReport:
    command: str
    request: dict
    verdict: Optional[dict] = None
    artifacts: dict = dc_field(default_factory=dict)
    verification: dict = dc_field(default_factory=dict)
    timing: dict = dc_field(default_factory=dict)
    exit_code: int = 0


def report_to_dict(r: RunReport) -> dict:
    return {
        **_head("report"),
        "command": r.command,
        "request": _jsonable(r.request),
        "verdict": r.verdict,
        "artifacts": _jsonable(r.artifacts),
        "verification": _jsonable(r.verification),
        "timing": _jsonable(r.timing),
        "exit_code": r.exit_code,
    }


def report_from_dict(d: dict) -> RunReport:
    _check(d, "report")
    return RunReport(
        command=d["command"],
        request=d["request"],
        verdict=d.get("verdict"),
        artifacts=d.get("artifacts", {}),
        verification=d.get("verification", {}),
        timing=d.get("timing", {}),
        exit_code=d.get("exit_code", 0),
    )


def dumps(record: dict) -> str:
    return json.dumps(_jsonable(record), indent=2, sort_keys=True)


def loads(text: str) -> dict:
    return json.loads(text)
