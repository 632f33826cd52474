"""Documents shipped in frobfix/data/fixtures, built from the library itself."""
import json
import os
from typing import Dict

from frobfix.algebra import LinearFunctional, StructureAlgebra, matrix_algebra
from frobfix.algebra.groups import cyclic_group_table, symmetric_group_table
from frobfix.cli.loaders import Document, algebra_to_json, context_to_json, frobenius_to_json
from frobfix.skeletal import FrobeniusAlgebra, MoritaContext

MALFORMED = '{"dim": 2, "c": [[["1", "0"], ["0", "1"]],\n'


def _dual_numbers() -> Document:
    # Q[x]/(x^2) with the form picking the x coefficient.
    one, x = ("1", "0"), ("0", "1")
    zero = ("0", "0")
    a = StructureAlgebra(2, ((one, x), (x, zero)), one)
    return algebra_to_json(a, LinearFunctional(x))


def _group(table) -> Document:
    return {"order": len(table), "table": table, "unit": 0}


def _fixed_point(dims, central) -> Document:
    return {"algebra": frobenius_to_json(FrobeniusAlgebra.of(dims, [1] * len(dims))), "lambda_central": central}


def build_documents() -> Dict[str, Document]:
    a12 = FrobeniusAlgebra.of([1, 2], [2, 3])
    a21 = FrobeniusAlgebra.of([2, 1], [3, 2])
    a12_other = FrobeniusAlgebra.of([1, 2], [2, 5])
    basic = _fixed_point([1, 2], ["2", "3"])
    swap_target = _fixed_point([2, 1], ["3", "2"])
    return {
        "m2_trace": algebra_to_json(*matrix_algebra([2])),
        "dual_numbers": _dual_numbers(),
        "group_z2": _group(cyclic_group_table(2)),
        "group_s3": _group(symmetric_group_table(3)),
        "ctx_identity": context_to_json(MoritaContext(a12, a12, (0, 1), (1, 1), (1, 1))),
        "ctx_swap_compatible": context_to_json(MoritaContext(a12, a21, (1, 0), (2, "1/3"), (2, "1/3"))),
        "ctx_eta_mismatch": context_to_json(MoritaContext(a12, a12, (0, 1), (2, 1), (3, 1))),
        "ctx_incompatible": context_to_json(MoritaContext(a12, a12_other, (0, 1), (1, 1), (1, 1))),
        "fp_basic": basic,
        "fp_swap_target": swap_target,
        "fp_mismatch_target": _fixed_point([2, 1], ["3", "5"]),
        "fp_morphism": {
            "source": basic,
            "target": swap_target,
            "context": {"perm": [1, 0], "eps": ["1", "1"], "eta": ["1", "1"]},
        },
    }


def build_fixtures(out_dir: str) -> Dict[str, str]:
    """Write every fixture document; returns name -> path. manifest.yaml is kept by hand."""
    os.makedirs(out_dir, exist_ok=True)
    written = {}
    for name, doc in build_documents().items():
        path = os.path.join(out_dir, f"{name}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        written[name] = path
    path = os.path.join(out_dir, "malformed.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write(MALFORMED)
    written["malformed"] = path
    return written
