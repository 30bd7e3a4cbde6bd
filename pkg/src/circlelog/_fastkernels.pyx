# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython fixed-point kernels.

Same contract as ``_kernels_py`` but restricted to the int64-safe range
(n <= 2^24, p <= 30, dden <= 2^16); the dispatcher in ``_kernels`` enforces
the bounds before calling in here.
"""

BACKEND_NAME = "cython"


cdef inline long long _to_numeric_t(long long k, long long n, int p) nogil:
    cdef long long num = (k % n) << p
    cdef long long q = num / n
    cdef long long r = num - q * n
    cdef long long r2 = r * 2
    if r2 > n or (r2 == n and (q & 1)):
        q += 1
    return q & ((<long long>1 << p) - 1)


cdef inline long long _recover_t(long long t, long long n, int p,
                                 long long dnum, long long dden) nogil:
    cdef long long half_turns = <long long>1 << p
    cdef long long num = t * n
    cdef long long q = num / half_turns
    cdef long long r = num - q * half_turns
    cdef long long r2 = r * 2
    cdef long long k, dist_num
    if r2 > half_turns or (r2 == half_turns and (q & 1)):
        k = q + 1
        dist_num = half_turns - r
    else:
        k = q
        dist_num = r
    if 2 * dden * dist_num > half_turns * (dden - 2 * dnum):
        return -1
    return k % n


def to_numeric_t(k, n, p):
    return _to_numeric_t(k % n, n, p)


def recover_t(t, n, p, dnum, dden):
    return _recover_t(t, n, p, dnum, dden)


def roundtrip_all(n, p, dnum, dden):
    cdef long long cn = n, cdnum = dnum, cdden = dden
    cdef int cp = p
    cdef long long k, successes = 0
    with nogil:
        for k in range(cn):
            if _recover_t(_to_numeric_t(k, cn, cp), cn, cp, cdnum, cdden) == k:
                successes += 1
    return successes


def sweep_success_count(n, p, dnum, dden, ks):
    cdef long long cn = n, cdnum = dnum, cdden = dden
    cdef int cp = p
    cdef long long k, successes = 0
    for k_obj in ks:
        k = k_obj
        if _recover_t(_to_numeric_t(k, cn, cp), cn, cp, cdnum, cdden) == k % cn:
            successes += 1
    return successes


def chain_success_count(n, p, dnum, dden, ks_flat, m, trials):
    cdef long long cn = n, cdnum = dnum, cdden = dden
    cdef int cp = p
    cdef long long mask = (<long long>1 << cp) - 1
    cdef long long k, k_sum, t_sum, successes = 0
    cdef Py_ssize_t cm = m, ctrials = trials, i, j, idx = 0
    cdef list ks = list(ks_flat)
    for i in range(ctrials):
        k_sum = 0
        t_sum = 0
        for j in range(cm):
            k = ks[idx]
            idx += 1
            k_sum += k
            t_sum += _to_numeric_t(k, cn, cp)
        if _recover_t(t_sum & mask, cn, cp, cdnum, cdden) == k_sum % cn:
            successes += 1
    return successes
