# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: power-chain fingerprinting and the exhaustive scan."""

from math import isqrt


def power_chain_fps(start, mult, n, long count, mask):
    """Fingerprints of start, start*mult, ... (count values, mod n)."""
    cdef long i
    cdef list fps = []
    cur = start
    for i in range(count):
        fps.append(cur & mask)
        if i + 1 < count:
            cur = cur * mult % n
    return fps, (count - 1 if count > 0 else 0)


cdef inline long _cgcd(long a, long b):
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef _method1_try(n, e, d, k):
    t = d * e - 1
    if t % k:
        return None
    psum = n + 1 - t // k
    if psum < 2:
        return None
    disc = psum * psum - 4 * n
    if disc < 0:
        return None
    root = isqrt(disc)
    if root * root != disc:
        return None
    p = (psum - root) // 2
    q = (psum + root) // 2
    if p <= 1 or p * q != n:
        return None
    return p, q


def vvt_scan(n, e, p0, q0, p1, q1, long r_max, long s_max, bint minus_form):
    """Exhaustive scan of d = r*q1 +/- s*q0 over coprime (r, s) pairs."""
    limit = (<object> 1) << 62
    if (r_max * q1 + s_max * q0 < limit and r_max * p1 + s_max * p0 < limit
            and q1 < limit and p1 < limit):
        return _vvt_scan_small(n, e, p0, q0, p1, q1, r_max, s_max, minus_form)
    return _vvt_scan_big(n, e, p0, q0, p1, q1, r_max, s_max, minus_form)


cdef _vvt_scan_small(n, e, long long p0, long long q0, long long p1,
                     long long q1, long r_max, long s_max, bint minus_form):
    cdef long r, s
    cdef long long trials = 0
    cdef long long d, k, sq0, sp0, two_sq0, two_sp0, dm, km
    for s in range(1, s_max + 1):
        sq0 = s * q0
        sp0 = s * p0
        two_sq0 = 2 * sq0
        two_sp0 = 2 * sp0
        d = sq0
        k = sp0
        for r in range(1, r_max + 1):
            d += q1
            k += p1
            if _cgcd(r, s) != 1:
                continue
            if k >= 1:
                trials += 1
                got = _method1_try(n, e, d, k)
                if got is not None:
                    return (d, k, got[0], got[1], r, s, "+"), trials
            if minus_form:
                dm = d - two_sq0
                km = k - two_sp0
                if dm > 0 and km >= 1:
                    trials += 1
                    got = _method1_try(n, e, dm, km)
                    if got is not None:
                        return (dm, km, got[0], got[1], r, s, "-"), trials
    return None, trials


cdef _vvt_scan_big(n, e, p0, q0, p1, q1, long r_max, long s_max,
                   bint minus_form):
    cdef long r, s
    cdef long long trials = 0
    for s in range(1, s_max + 1):
        sq0 = s * q0
        sp0 = s * p0
        two_sq0 = 2 * sq0
        two_sp0 = 2 * sp0
        d = sq0
        k = sp0
        for r in range(1, r_max + 1):
            d = d + q1
            k = k + p1
            if _cgcd(r, s) != 1:
                continue
            if k >= 1:
                trials += 1
                got = _method1_try(n, e, d, k)
                if got is not None:
                    return (d, k, got[0], got[1], r, s, "+"), trials
            if minus_form:
                dm = d - two_sq0
                km = k - two_sp0
                if dm > 0 and km >= 1:
                    trials += 1
                    got = _method1_try(n, e, dm, km)
                    if got is not None:
                        return (dm, km, got[0], got[1], r, s, "-"), trials
    return None, trials
