"""Kernel backend selection: compiled extension if built, pure Python otherwise.

The module-level functions delegate through the active backend so the rest
of the package never imports an implementation module directly. ``use()``
swaps the backend at runtime; it exists for the benchmark suite and for
cross-checking tests, and is not thread-safe while a computation is running.
"""

from . import _kernels_py

try:
    from . import _kernels_cy as _default_impl
except ImportError:
    _default_impl = _kernels_py

_impl = _default_impl

AVAILABLE = ("python",) if _default_impl is _kernels_py else ("python", "cython")


def backend_name():
    return _impl.BACKEND_NAME


def use(name):
    """Select the active backend by name ('python' or 'cython')."""
    global _impl
    if name == "python":
        _impl = _kernels_py
    elif name == "cython":
        if "cython" not in AVAILABLE:
            raise ValueError("compiled kernel extension is not available")
        _impl = _default_impl
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    return _impl.BACKEND_NAME


def normalized(coeffs):
    return _impl.normalized(coeffs)


def primitive(coeffs):
    return _impl.primitive(coeffs)


def sign_at(coeffs, num, den):
    return _impl.sign_at(coeffs, num, den)


def sturm_chain(coeffs):
    return _impl.sturm_chain(coeffs)


def variations_at(chain, num, den):
    return _impl.variations_at(chain, num, den)


def variations_at_zero(chain):
    return _impl.variations_at_zero(chain)


def variations_at_infinity(chain):
    return _impl.variations_at_infinity(chain)


def count_roots_halfopen(chain, a_num, a_den, b_num, b_den):
    return _impl.count_roots_halfopen(chain, a_num, a_den, b_num, b_den)


def count_roots_above(chain, a_num, a_den):
    return _impl.count_roots_above(chain, a_num, a_den)


def positive_on_nonneg(coeffs):
    return _impl.positive_on_nonneg(coeffs)


def is_hurwitz(coeffs):
    return _impl.is_hurwitz(coeffs)
