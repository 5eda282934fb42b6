"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension (``otplab._kernels._core``, built from Cython) is
preferred when importable; otherwise the pure-Python implementation in
``_fallback`` is selected.  Both expose the same functions and are required
to produce bit-identical results.  Set the environment variable
``OTPLAB_PURE=1`` to force the fallback, e.g. for benchmarking.

``IMPL_NAME`` names the active implementation ("compiled" or "pure").
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("OTPLAB_PURE"):
    _impl = _fallback
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

IMPL_NAME: str = _impl.IMPL_NAME

census_counts = _impl.census_counts
reduction_length_counts = _impl.reduction_length_counts
eve_guess_correct = _impl.eve_guess_correct
distinguisher_counts = _impl.distinguisher_counts


def available_impls() -> tuple:
    """Names of the kernel implementations importable right now."""
    names = ["pure"]
    try:
        from . import _core  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("compiled")
    return tuple(names)


def get_impl(name: str):
    """Fetch a kernel implementation module by name ("pure" or "compiled")."""
    if name == "pure":
        return _fallback
    if name == "compiled":
        from . import _core

        return _core
    raise ValueError(f"unknown kernel implementation {name!r}")
