"""Kernel dispatch: compiled tree-sweep when available, pure Python otherwise."""

from __future__ import annotations

from . import _sweep_py

try:  # pragma: no cover - depends on build environment
    from . import _sweep as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _sweep_py


def first_path_tree(c: int, masks: list[int]) -> list[tuple[int, int]] | None:
    """First labeled tree on c nodes (Pruefer order) where every mask induces a path."""
    edges = _impl.first_path_tree(c, list(masks))
    return None if edges is None else sorted(edges)


def backends() -> dict[str, object]:
    """Available kernel implementations keyed by name (for benchmarks/tests)."""
    out: dict[str, object] = {"python": _sweep_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
