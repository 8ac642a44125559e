"""
Backend selection for the hot loops.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python module with the same functions is used.  ``use_backend``
switches at runtime (benchmarks and tests compare both).
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# products above this bound could overflow the compiled int64 arithmetic
_C_LIMIT = 1 << 62

BACKEND = "c" if _ckernels is not None else "python"
_impl = _ckernels or _pykernels


def available_backends() -> list[str]:
    return ["python"] + (["c"] if _ckernels is not None else [])


def use_backend(name: str) -> None:
    global BACKEND, _impl
    if name == "c" and _ckernels is None:
        raise RuntimeError("compiled kernels are not available")
    if name not in ("c", "python"):
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    _impl = _ckernels if name == "c" else _pykernels


def apply_images(images, w):
    return _impl.apply_images(images, w)


def max_deviation(w, nums, denom, shift=0):
    if _impl is _ckernels and max(max(nums), denom) * (len(w) + 1) >= _C_LIMIT:
        return _pykernels.max_deviation(w, nums, denom, shift)
    return _impl.max_deviation(w, nums, denom, shift)


def balance(w, d):
    return _impl.balance(w, d)
