"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the numpy
fallback is bound.  Both stay importable so tests and the benchmark can
compare them directly.
"""

from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKEND = "compiled" if _kernels_c is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _kernels_c is not None else [])


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "compiled" and _kernels_c is not None:
        return _kernels_c
    raise ValueError(f"backend {name!r} not available (have {available_backends()})")


_active = get_backend(BACKEND)
transitive_closure = _active.transitive_closure
leq_g_matrix = _active.leq_g_matrix
invariance_violation = _active.invariance_violation
