"""Grid-scan kernels: compiled extension when available, numpy otherwise."""

from . import _fallback

try:
    from . import _scan as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build environment
    _impl = _fallback
    BACKEND = "python"

scan_axis_ratio = _impl.scan_axis_ratio
scan_beta = _impl.scan_beta

__all__ = ["BACKEND", "scan_axis_ratio", "scan_beta"]
