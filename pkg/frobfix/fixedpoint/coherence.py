"""Coherence of homotopy fixed points for the trivial SO(2)-action.

The strictified data of a fixed point is (c, Theta, M, lambda~, Pi) and all
conditions become per-block scalar identities between 2-cells:

    associativity  Pi o (id_Theta * Pi) = Pi o (Pi * id_Theta)
    unit.left      Pi = id_Theta * M
    unit.right     Pi = M * id_Theta
"""
import logging
from typing import List, Sequence

from frobfix.errors import PermMismatch, ShapeMismatch, SourceTargetMismatch
from frobfix.fixedpoint.data import FixedPointMorphism, FixedPointObject, FullFixedPointData
from frobfix.fixedpoint.twocells import (
    Cell,
    cell_of,
    horizontal,
    identity_cell,
    inverse_cell,
    vertical,
)
from frobfix.report import Finding, Findings
from frobfix.skeletal.morita import (
    MoritaContext,
    MoritaMorphism,
    check_morita_axioms,
    compose,
    compose_perms,
    identity_context,
    identity_morphism,
    morphism_findings,
    morphism_from_f,
    require_context,
)
from frobfix.skeletal.types import FrobeniusAlgebra, skeleton_of

logger = logging.getLogger(__name__)


def _labelled(label: str, findings: Findings) -> Findings:
    return [Finding(f.location, f"{label}: {f.message}", dict(f.data, part=label)) for f in findings]


def _cell_mismatches(equation: str, lhs: Cell, rhs: Cell, message: str) -> Findings:
    return [
        Finding(f"block {i}", f"{equation}: {message}", {"equation": equation, "lhs": a, "rhs": b})
        for i, (a, b) in enumerate(zip(lhs, rhs))
        if a != b
    ]


def expand(p: FixedPointObject) -> FullFixedPointData:
    """Full fixed-point data with Theta = id_c and M = id_Theta."""
    theta = identity_context(p.algebra)
    big_m = identity_morphism(theta)
    m = cell_of(big_m)
    ident = identity_cell(p.r)
    pi = morphism_from_f(compose(theta, theta), theta, horizontal(ident, m, theta.perm))
    lambda_tilde = morphism_from_f(theta, theta, vertical(inverse_cell(m), vertical(p.lambda_central, m)))
    return FullFixedPointData(obj=p.algebra, theta=theta, big_m=big_m, lambda_tilde=lambda_tilde, pi=pi)


def forget(d: FullFixedPointData) -> FixedPointObject:
    """lambda := M o lambda~ o M^-1."""
    m = cell_of(d.big_m)
    return FixedPointObject(d.obj, vertical(m, vertical(cell_of(d.lambda_tilde), inverse_cell(m))))


def structure_findings(d: FullFixedPointData) -> Findings:
    """Theta is a valid context and M, lambda~, Pi are morphisms of contexts."""
    findings = _labelled("Theta", check_morita_axioms(d.theta))
    if findings:
        return findings
    parts = (
        ("M", d.theta, identity_context(d.obj), d.big_m),
        ("lambda~", d.theta, d.theta, d.lambda_tilde),
        ("Pi", compose(d.theta, d.theta), d.theta, d.pi),
    )
    for label, src, dst, phi in parts:
        if src.perm != dst.perm:
            findings.append(
                Finding("perm", f"{label}: contexts have different permutations", {"source": src.perm, "target": dst.perm})
            )
            continue
        findings.extend(_labelled(label, morphism_findings(src, dst, phi)))
    return findings


def pi_equations(theta_perm: Sequence[int], m: Sequence, pi: Sequence) -> Findings:
    tau = tuple(theta_perm)
    ident = identity_cell(len(tau))
    findings: Findings = []
    findings += _cell_mismatches(
        "associativity",
        vertical(pi, horizontal(ident, pi, compose_perms(tau, tau))),
        vertical(pi, horizontal(pi, ident, tau)),
        "Pi o (id * Pi) != Pi o (Pi * id)",
    )
    findings += _cell_mismatches("unit.left", tuple(pi), horizontal(ident, m, tau), "Pi != id_Theta * M")
    findings += _cell_mismatches("unit.right", tuple(pi), horizontal(m, ident, tau), "Pi != M * id_Theta")
    return findings


def verify_coherence(d: FullFixedPointData) -> Findings:
    findings = structure_findings(d) + pi_equations(d.theta.perm, cell_of(d.big_m), cell_of(d.pi))
    logger.debug("coherence of fixed point on %d blocks: %d findings", d.r, len(findings))
    return findings


def _rebased(f: MoritaContext, source: FrobeniusAlgebra, target: FrobeniusAlgebra) -> MoritaContext:
    if skeleton_of(f.source) != source.skeleton or skeleton_of(f.target) != target.skeleton:
        raise SourceTargetMismatch("the context does not run between the underlying algebras")
    require_context(f)
    return MoritaContext(source, target, f.perm, f.eps, f.eta)


def derive_m(src: FullFixedPointData, dst: FullFixedPointData, f: MoritaContext) -> MoritaMorphism:
    """m: f o Theta => Theta' o f, the composite (M'^-1 * id_f) o (id_f * M)."""
    f = _rebased(f, src.obj, dst.obj)
    ident = identity_cell(f.r)
    first = horizontal(ident, cell_of(src.big_m), src.theta.perm)
    second = horizontal(inverse_cell(cell_of(dst.big_m)), ident, f.perm)
    before, after = compose(f, src.theta), compose(dst.theta, f)
    if before.perm != after.perm:
        raise PermMismatch("f o Theta and Theta' o f permute the blocks differently")
    return morphism_from_f(before, after, vertical(second, first))


def fixed_point_morphism(src: FullFixedPointData, dst: FullFixedPointData, f: MoritaContext) -> FixedPointMorphism:
    f = _rebased(f, src.obj, dst.obj)
    return FixedPointMorphism(source=src, target=dst, context=f, derived_m=derive_m(src, dst, f))


def morphism_coherence(src: FullFixedPointData, dst: FullFixedPointData, f: MoritaContext, m: MoritaMorphism) -> Findings:
    """m o (id_f * Pi) = (Pi' * id_f) o (id_Theta' * m) o (m * id_Theta)."""
    tau, sigma = src.theta.perm, f.perm
    ident = identity_cell(f.r)
    mc = cell_of(m)
    lhs = vertical(mc, horizontal(ident, cell_of(src.pi), compose_perms(tau, tau)))
    rhs = vertical(
        horizontal(cell_of(dst.pi), ident, sigma),
        vertical(horizontal(ident, mc, compose_perms(sigma, tau)), horizontal(mc, ident, tau)),
    )
    return _cell_mismatches("associativity", lhs, rhs, "m does not intertwine Pi and Pi'")


def modification_findings(fm: FixedPointMorphism) -> Findings:
    """(lambda~' * id_f) o m = m o (id_f * lambda~), one finding per offending source block."""
    sigma = fm.context.perm
    ident = identity_cell(fm.context.r)
    m = cell_of(fm.derived_m)
    lt, lt_target = cell_of(fm.source.lambda_tilde), cell_of(fm.target.lambda_tilde)
    lhs = vertical(horizontal(lt_target, ident, sigma), m)
    rhs = vertical(m, horizontal(ident, lt, fm.source.theta.perm))
    return [
        Finding(
            f"block {i}",
            f"lambda[{i}] != lambda'[{sigma[i]}]",
            {"lambda": lt[i], "lambda_target": lt_target[sigma[i]], "target_block": sigma[i]},
        )
        for i in range(len(m))
        if lhs[i] != rhs[i]
    ]


def fp_morphism_report(p: FixedPointObject, p_target: FixedPointObject, f: MoritaContext) -> Findings:
    return modification_findings(fixed_point_morphism(expand(p), expand(p_target), f))


def check_fp_morphism(p: FixedPointObject, p_target: FixedPointObject, f: MoritaContext) -> bool:
    return not fp_morphism_report(p, p_target, f)


def check_2morphism_auto(f: FixedPointMorphism, g: FixedPointMorphism, alpha: MoritaMorphism) -> bool:
    """Evaluate (id_Theta' * alpha) o m = n o (alpha * id_Theta) for alpha: f => g."""
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("fixed-point morphisms are not parallel")
    if f.context.perm != g.context.perm:
        raise ShapeMismatch(f"contexts permute blocks as {list(f.context.perm)} and {list(g.context.perm)}")
    if len(alpha.f_scalars) != f.context.r:
        raise ShapeMismatch(f"2-morphism has {len(alpha.f_scalars)} blocks, contexts have {f.context.r}")
    a = cell_of(alpha)
    ident = identity_cell(f.context.r)
    lhs = vertical(horizontal(ident, a, f.context.perm), cell_of(f.derived_m))
    rhs = vertical(cell_of(g.derived_m), horizontal(a, ident, f.source.theta.perm))
    return lhs == rhs


def equations_failed(findings: Findings) -> List[str]:
    return sorted({f.data["equation"] for f in findings if "equation" in f.data})

