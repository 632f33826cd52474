import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import yaml

from frobfix.algebra import (
    center_basis,
    check_axioms,
    check_semisimple,
    check_symmetric_frobenius,
    commutator_subspace,
    decompose,
)
from frobfix.cli import loaders
from frobfix.config.loader import Settings
from frobfix.cycat import (
    CYObject,
    check_cy_axioms,
    check_cy_functor,
    rep_morphism,
    rep_object,
)
from frobfix.errors import DegenerateSample, FrobfixError, MissingFrobeniusData, NotSemisimple, NotSplit
from frobfix.fixedpoint import expand, fixed_point_morphism, morphism_coherence, verify_coherence
from frobfix.fixedpoint.coherence import modification_findings
from frobfix.report import Finding, Findings
from frobfix.skeletal import FrobeniusAlgebra, check_compatible, check_morita_axioms, induced_f
from frobfix.skeletal.compatibility import MODES, incompatible_blocks

logger = logging.getLogger(__name__)

EXIT_CODES = {"pass": 0, "fail": 1, "error": 2}

HINTS = {
    NotSemisimple: "the algebra has a nonzero radical; only semisimple algebras decompose",
    NotSplit: "a block is not a full matrix algebra over Q; the algebra needs a larger splitting field",
    DegenerateSample: "try another --seed or raise decompose.max_retries",
}


@dataclass
class Report:
    command: str
    status: str
    findings: Findings = field(default_factory=list)
    artifacts: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        return loaders.jsonable(
            {
                "command": self.command,
                "status": self.status,
                "findings": [f.to_dict() for f in self.findings],
                "artifacts": self.artifacts,
            }
        )


def _report(command: str, findings: Findings, artifacts: Optional[Dict[str, Any]] = None) -> Report:
    return Report(command, "fail" if findings else "pass", list(findings), artifacts or {})


def error_report(command: str, exc: Exception) -> Report:
    data: Dict[str, Any] = {"error": type(exc).__name__}
    for kind, hint in HINTS.items():
        if isinstance(exc, kind):
            data["hint"] = hint
    return Report(command, "error", [Finding("error", str(exc), data)])


def _write_document(path: Optional[str], doc: Dict[str, Any]) -> None:
    if not path:
        return
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def run_check_frobenius(path: str) -> Report:
    kind, doc = loaders.load_document(path, ("algebra", "group"))
    a, form = loaders.structure_from_json(kind, doc)
    findings = check_axioms(a)
    artifacts: Dict[str, Any] = {"dim": a.dim}
    if not findings:
        findings += check_symmetric_frobenius(a, form)
        if not check_semisimple(a):
            findings.append(Finding("semisimplicity", "the trace form tr(L_x L_y) is degenerate"))
        artifacts["center_dim"] = len(center_basis(a))
        artifacts["cocenter_dim"] = a.dim - len(commutator_subspace(a))
    return _report("check-frobenius", findings, artifacts)


def _decomposed(path: str, settings: Settings, seed: int) -> FrobeniusAlgebra:
    kind, doc = loaders.load_document(path, ("algebra", "group"))
    a, form = loaders.structure_from_json(kind, doc)
    _, frob = decompose(
        a,
        form,
        seed=seed,
        max_retries=settings.get("decompose.max_retries"),
        coefficient_bound=settings.get("decompose.coefficient_bound"),
    )
    return frob


def run_decompose(path: str, settings: Settings, seed: int, out: Optional[str] = None) -> Report:
    frob = _decomposed(path, settings, seed)
    artifact = loaders.frobenius_to_json(frob)
    _write_document(out, artifact)
    return _report("decompose", [], {"skeleton": artifact, "seed": seed})


def run_check_morita(path: str, mode: str) -> Report:
    _, doc = loaders.load_document(path, ("context",))
    ctx = loaders.context_from_json(doc)
    findings = check_morita_axioms(ctx)
    if findings:
        return _report("check-morita", findings, {"axioms": False})
    modes = MODES if mode == "all" else (int(mode),)
    verdicts = {m: check_compatible(ctx, m) for m in modes}
    findings = []
    if len(set(verdicts.values())) > 1:
        findings.append(Finding("modes", "compatibility modes disagree", {"verdicts": verdicts}))
    elif not all(verdicts.values()):
        findings.append(
            Finding(
                "compatibility",
                "the context does not intertwine the Frobenius forms",
                {"blocks": incompatible_blocks(ctx)},
            )
        )
    artifacts = {
        "axioms": True,
        "verdicts": {str(m): v for m, v in verdicts.items()},
        "induced_f": induced_f(ctx).to_rows(),
    }
    return _report("check-morita", findings, artifacts)


def run_fixed_point_expand(path: str, out: Optional[str] = None) -> Report:
    _, doc = loaders.load_document(path, ("fixedpoint",))
    data = expand(loaders.fixed_point_from_json(doc))
    artifact = loaders.fixed_point_data_to_json(data)
    _write_document(out, artifact)
    return _report("fixed-point expand", verify_coherence(data), {"data": artifact})


def run_fixed_point_verify(path: str) -> Report:
    kind, doc = loaders.load_document(path, ("fixedpoint", "fixedpoint-data"))
    if kind == "fixedpoint":
        data = expand(loaders.fixed_point_from_json(doc))
    else:
        data = loaders.fixed_point_data_from_json(doc)
    return _report("fixed-point verify", verify_coherence(data), {"blocks": data.r})


def run_fixed_point_morphism(paths: Sequence[str]) -> Report:
    if len(paths) == 1:
        _, doc = loaders.load_document(paths[0], ("morphism",))
        src, dst, f = loaders.morphism_triple_from_json(doc)
    elif len(paths) == 3:
        src = loaders.fixed_point_from_json(loaders.load_document(paths[0], ("fixedpoint",))[1])
        dst = loaders.fixed_point_from_json(loaders.load_document(paths[1], ("fixedpoint",))[1])
        f = loaders.context_from_json(loaders.load_document(paths[2], ("context",))[1])
    else:
        raise FrobfixError("fixed-point morphism takes a morphism file or SRC DST CONTEXT")
    full_src, full_dst = expand(src), expand(dst)
    fm = fixed_point_morphism(full_src, full_dst, f)
    findings = modification_findings(fm) + morphism_coherence(full_src, full_dst, fm.context, fm.derived_m)
    return _report("fixed-point morphism", findings, {"m": loaders.morphism_to_json(fm.derived_m)})


def _sample_objects(r: int) -> List[CYObject]:
    samples = [CYObject.simple(r, i) for i in range(r)]
    samples.append(CYObject(tuple(i % 3 + 1 for i in range(r))))
    return samples


def run_rep(path: str, settings: Settings, seed: int) -> Report:
    kind, doc = loaders.load_document(path, ("algebra", "group", "frobenius", "context"))
    sample_seed = settings.get("cy.sample_seed", 0)
    if kind != "context":
        if kind == "frobenius":
            frob = loaders.frobenius_from_json(doc)
            if not isinstance(frob, FrobeniusAlgebra):
                raise MissingFrobeniusData("rep needs lambdas on the algebra")
        else:
            frob = _decomposed(path, settings, seed)
        cy = rep_object(frob)
        findings = check_cy_axioms(cy, _sample_objects(cy.simples), seed=sample_seed)
        return _report("rep", findings, {"cy": loaders.cycat_to_json(cy)})

    ctx = loaders.context_from_json(doc)
    if not isinstance(ctx.source, FrobeniusAlgebra) or not isinstance(ctx.target, FrobeniusAlgebra):
        raise MissingFrobeniusData("both ends of the context need lambdas")
    src, dst, functor = rep_object(ctx.source), rep_object(ctx.target), rep_morphism(ctx)
    compatible = check_compatible(ctx, 3)
    cy_functor = check_cy_functor(src, dst, functor)
    findings: Findings = []
    if compatible != cy_functor:
        findings.append(
            Finding(
                "equivalence",
                "compatibility and Calabi-Yau functor verdicts disagree",
                {"compatible": compatible, "cy_functor": cy_functor},
            )
        )
    artifacts = {
        "source": loaders.cycat_to_json(src),
        "target": loaders.cycat_to_json(dst),
        "functor": loaders.functor_to_json(functor),
        "compatible": compatible,
        "cy_functor": cy_functor,
        "agree": compatible == cy_functor,
    }
    return _report("rep", findings, artifacts)


def _load_manifest(fixtures_dir: str) -> List[Dict[str, Any]]:
    with open(os.path.join(fixtures_dir, "manifest.yaml"), "r", encoding="utf-8") as f:
        manifest = yaml.safe_load(f) or {}
    cases = manifest.get("cases", [])
    if not isinstance(cases, list):
        raise ValueError("manifest.yaml: cases must be a list")
    return cases


def _subset_mismatch(expected: Any, actual: Any) -> bool:
    if isinstance(expected, dict):
        return not isinstance(actual, dict) or any(
            k not in actual or _subset_mismatch(v, actual[k]) for k, v in expected.items()
        )
    return expected != actual


def run_self_test(fixtures_dir: str, runner: Callable[[List[str]], Report]) -> Report:
    """Run every manifest case; argv entries "{fixtures}/x.json" are expanded."""
    findings: Findings = []
    cases = _load_manifest(fixtures_dir)
    for case in cases:
        argv = [str(a).replace("{fixtures}", fixtures_dir) for a in case["argv"]]
        report = runner(argv)
        expected_exit = case.get("exit", 0)
        if report.exit_code != expected_exit:
            findings.append(
                Finding(
                    case["name"],
                    f"exit {report.exit_code}, expected {expected_exit}",
                    {"argv": case["argv"], "findings": [f.message for f in report.findings]},
                )
            )
            continue
        expected_artifacts = case.get("artifacts")
        if expected_artifacts and _subset_mismatch(expected_artifacts, report.to_dict()["artifacts"]):
            findings.append(Finding(case["name"], "artifacts differ from the manifest", {"expected": expected_artifacts}))
        logger.info("self-test case %s: exit %d", case["name"], report.exit_code)
    return _report("self-test", findings, {"cases": len(cases), "fixtures_dir": fixtures_dir})
