import os
from typing import Dict, Optional

FIXTURES_ENV = "FW_FIXTURES"


def resolve_fixtures_dir(paths: Dict[str, str], environ: Optional[Dict[str, str]] = None) -> str:
    """FW_FIXTURES wins over paths.fixtures_dir; the directory must hold a manifest."""
    environ = os.environ if environ is None else environ
    fixtures_dir = environ.get(FIXTURES_ENV) or paths["fixtures_dir"]
    if not os.path.isdir(fixtures_dir):
        raise ValueError(f"Fixture directory not found: {fixtures_dir}")
    if not os.path.isfile(os.path.join(fixtures_dir, "manifest.yaml")):
        raise ValueError(f"No manifest.yaml in fixture directory: {fixtures_dir}")
    return fixtures_dir


def check_polynomial_backend() -> None:
    # decompose factors minimal polynomials over Q with sympy.
    try:
        import sympy  # noqa: F401
    except Exception as exc:  # pragma: no cover - import error should surface clearly
        raise RuntimeError("sympy is required to decompose algebras") from exc
