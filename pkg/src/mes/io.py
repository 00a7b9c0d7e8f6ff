"""JSON (de)serialization for states, operator tuples, and decompositions.

State file:        {"dims": [d1, ..., dn], "amps": [[re, im], ...]}
Operator tuple:    {"ops": [{"rows": r, "cols": c, "entries": [[re, im], ...]}, ...]}
Decomposition:     {"terms": [[[[re, im], ...] per party], ...]}
All entries row-major; state amplitudes use the party-0-slowest layout.
"""

from __future__ import annotations

import json
from typing import Optional

import numpy as np

from .core import LocalOperatorTuple, PureState, make_state
from .rank import ProductDecomposition


def _pairs(arr: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(arr, dtype=complex).reshape(-1)]


def _complex(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


def state_to_dict(state: PureState) -> dict:
    return {"dims": list(state.dims), "amps": _pairs(state.amplitudes)}


def state_from_dict(data: dict, label: Optional[str] = None) -> PureState:
    return make_state(data["dims"], _complex(data["amps"]), label=label)


def ops_to_dict(tup: LocalOperatorTuple) -> dict:
    return {
        "ops": [
            {"rows": op.shape[0], "cols": op.shape[1], "entries": _pairs(op)}
            for op in tup.ops
        ]
    }


def ops_from_dict(data: dict) -> LocalOperatorTuple:
    ops = []
    for entry in data["ops"]:
        mat = _complex(entry["entries"]).reshape(entry["rows"], entry["cols"])
        ops.append(mat)
    return LocalOperatorTuple(tuple(ops))


def decomposition_to_dict(decomposition: ProductDecomposition) -> dict:
    return {
        "terms": [[_pairs(v) for v in term] for term in decomposition.terms]
    }


def decomposition_from_dict(data: dict) -> ProductDecomposition:
    return ProductDecomposition(
        tuple(tuple(_complex(v) for v in term) for term in data["terms"])
    )


def load_state(path: str, label: Optional[str] = None) -> PureState:
    with open(path) as fh:
        return state_from_dict(json.load(fh), label=label)


def save_state(state: PureState, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(state_to_dict(state), fh)


def load_ops(path: str) -> LocalOperatorTuple:
    with open(path) as fh:
        return ops_from_dict(json.load(fh))


def load_decomposition(path: str) -> ProductDecomposition:
    with open(path) as fh:
        return decomposition_from_dict(json.load(fh))
