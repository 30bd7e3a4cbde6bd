"""Kernel backend selection.

Imports the compiled extension when available and routes each call to it
whenever the arguments fit its int64-safe range; everything else goes to the
exact pure-Python backend. Both backends are bit-identical where their domains
overlap (asserted in tests).
"""

from . import _kernels_py as _py

try:
    from . import _fastkernels as _fast
except ImportError:  # extension not built; pure-Python fallback
    _fast = None

BACKEND = _fast.BACKEND_NAME if _fast is not None else _py.BACKEND_NAME

_N_MAX = 1 << 24
_P_MAX = 30
_DDEN_MAX = 1 << 16


def _fits_fast(n: int, p: int, dden: int = 1) -> bool:
    return _fast is not None and n <= _N_MAX and p <= _P_MAX and dden <= _DDEN_MAX


def to_numeric_t(k: int, n: int, p: int) -> int:
    if _fits_fast(n, p):
        return _fast.to_numeric_t(k, n, p)
    return _py.to_numeric_t(k, n, p)


def recover_t(t: int, n: int, p: int, dnum: int, dden: int) -> int:
    if _fits_fast(n, p, dden):
        return _fast.recover_t(t, n, p, dnum, dden)
    return _py.recover_t(t, n, p, dnum, dden)


def roundtrip_all(n: int, p: int, dnum: int, dden: int) -> int:
    if _fits_fast(n, p, dden):
        return _fast.roundtrip_all(n, p, dnum, dden)
    return _py.roundtrip_all(n, p, dnum, dden)


def sweep_success_count(n: int, p: int, dnum: int, dden: int, ks) -> int:
    if _fits_fast(n, p, dden):
        return _fast.sweep_success_count(n, p, dnum, dden, ks)
    return _py.sweep_success_count(n, p, dnum, dden, ks)


def chain_success_count(n, p, dnum, dden, ks_flat, m, trials) -> int:
    if _fits_fast(n, p, dden):
        return _fast.chain_success_count(n, p, dnum, dden, ks_flat, m, trials)
    return _py.chain_success_count(n, p, dnum, dden, ks_flat, m, trials)
