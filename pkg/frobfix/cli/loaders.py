import json
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple, Union

from jsonschema import Draft7Validator

from frobfix.algebra import LinearFunctional, StructureAlgebra, group_algebra
from frobfix.cli.schemas import SCHEMAS
from frobfix.cycat import CYCategory, CYFunctorData
from frobfix.errors import SchemaError
from frobfix.exactlin import format_rat, to_rat
from frobfix.fixedpoint import FixedPointObject, FullFixedPointData
from frobfix.skeletal import FrobeniusAlgebra, MoritaContext, MoritaMorphism, SemisimpleSkeleton
from frobfix.skeletal.types import SkeletalObject

Document = Dict[str, Any]


def read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON, {exc.msg}") from exc


def validate(doc: Any, kind: str, source: str = "<document>") -> None:
    validator = Draft7Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        field = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise SchemaError(f"{source}: {kind} document, field {field}: {first.message}")


def detect_kind(doc: Any) -> str:
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    keys = set(doc)
    if "c" in keys:
        return "algebra"
    if "table" in keys:
        return "group"
    if "theta" in keys:
        return "fixedpoint-data"
    if "lambda_central" in keys:
        return "fixedpoint"
    if "context" in keys:
        return "morphism"
    if "perm" in keys:
        return "context"
    if "simples" in keys:
        return "cycat"
    if "dims" in keys:
        return "frobenius"
    raise SchemaError(f"unrecognized document with keys {sorted(keys)}")


def load_document(path: str, kinds: Sequence[str]) -> Tuple[str, Document]:
    doc = read_json(path)
    kind = detect_kind(doc)
    if kind not in kinds:
        raise SchemaError(f"{path}: expected one of {', '.join(kinds)}, found a {kind} document")
    validate(doc, kind, path)
    return kind, doc


def _rats(values: Sequence[str]) -> Tuple[Fraction, ...]:
    return tuple(to_rat(v) for v in values)


def algebra_from_json(doc: Document) -> Tuple[StructureAlgebra, LinearFunctional]:
    n = doc["dim"]
    a = StructureAlgebra(n, tuple(tuple(_rats(cell) for cell in row) for row in doc["c"]), _rats(doc["unit"]))
    form = LinearFunctional(_rats(doc["form"]))
    if form.dim != n:
        raise SchemaError(f"form has length {form.dim}, dim is {n}")
    return a, form


def group_from_json(doc: Document) -> Tuple[StructureAlgebra, LinearFunctional]:
    if len(doc["table"]) != doc["order"]:
        raise SchemaError(f"table has {len(doc['table'])} rows for a group of order {doc['order']}")
    return group_algebra(doc["table"], doc["unit"])


def algebra_to_json(a: StructureAlgebra, form: LinearFunctional) -> Document:
    return {
        "dim": a.dim,
        "c": [[[format_rat(v) for v in cell] for cell in row] for row in a.constants],
        "unit": [format_rat(v) for v in a.unit],
        "form": [format_rat(v) for v in form.coefficients],
    }


def structure_from_json(kind: str, doc: Document) -> Tuple[StructureAlgebra, LinearFunctional]:
    return group_from_json(doc) if kind == "group" else algebra_from_json(doc)


def frobenius_from_json(doc: Document) -> SkeletalObject:
    skeleton = SemisimpleSkeleton(tuple(doc["dims"]))
    if "lambdas" not in doc:
        return skeleton
    return FrobeniusAlgebra(skeleton, _rats(doc["lambdas"]))


def frobenius_to_json(obj: SkeletalObject) -> Document:
    if isinstance(obj, SemisimpleSkeleton):
        return {"dims": list(obj.block_dims)}
    return {"dims": list(obj.block_dims), "lambdas": [format_rat(v) for v in obj.lambdas]}


def _context_between(source: SkeletalObject, target: SkeletalObject, doc: Document) -> MoritaContext:
    return MoritaContext(source, target, tuple(doc["perm"]), _rats(doc["eps"]), _rats(doc["eta"]))


def context_from_json(doc: Document) -> MoritaContext:
    return _context_between(frobenius_from_json(doc["source"]), frobenius_from_json(doc["target"]), doc)


def context_to_json(m: MoritaContext) -> Document:
    return {
        "source": frobenius_to_json(m.source),
        "target": frobenius_to_json(m.target),
        "perm": list(m.perm),
        "eps": [format_rat(v) for v in m.eps],
        "eta": [format_rat(v) for v in m.eta],
    }


def fixed_point_from_json(doc: Document) -> FixedPointObject:
    return FixedPointObject(frobenius_from_json(doc["algebra"]), _rats(doc["lambda_central"]))


def _morphism_from_json(doc: Document) -> MoritaMorphism:
    return MoritaMorphism(_rats(doc["f"]), _rats(doc["g"]))


def morphism_to_json(phi: MoritaMorphism) -> Document:
    return {"f": [format_rat(v) for v in phi.f_scalars], "g": [format_rat(v) for v in phi.g_scalars]}


def fixed_point_data_from_json(doc: Document) -> FullFixedPointData:
    obj = frobenius_from_json(doc["algebra"])
    return FullFixedPointData(
        obj=obj,
        theta=_context_between(obj, obj, doc["theta"]),
        big_m=_morphism_from_json(doc["big_m"]),
        lambda_tilde=_morphism_from_json(doc["lambda_tilde"]),
        pi=_morphism_from_json(doc["pi"]),
    )


def fixed_point_data_to_json(d: FullFixedPointData) -> Document:
    theta = context_to_json(d.theta)
    return {
        "algebra": frobenius_to_json(d.obj),
        "theta": {key: theta[key] for key in ("perm", "eps", "eta")},
        "big_m": morphism_to_json(d.big_m),
        "lambda_tilde": morphism_to_json(d.lambda_tilde),
        "pi": morphism_to_json(d.pi),
    }


def morphism_triple_from_json(doc: Document) -> Tuple[FixedPointObject, FixedPointObject, MoritaContext]:
    src, dst = fixed_point_from_json(doc["source"]), fixed_point_from_json(doc["target"])
    return src, dst, _context_between(src.algebra, dst.algebra, doc["context"])


def cycat_from_json(doc: Document) -> CYCategory:
    traces = _rats(doc["traces"])
    if len(traces) != doc["simples"]:
        raise SchemaError(f"{len(traces)} traces for {doc['simples']} simples")
    return CYCategory(traces)


def cycat_to_json(cy: CYCategory) -> Document:
    return {"simples": cy.simples, "traces": [format_rat(t) for t in cy.traces]}


def functor_to_json(F: CYFunctorData) -> Document:
    return {"perm": list(F.perm)}


def jsonable(value: Any) -> Union[Document, list, str, int, float, bool, None]:
    """Fractions become "p/q" strings; tuples become lists."""
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value
