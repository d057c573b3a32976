"""Pure-Python hot kernels; drop-in fallback for the compiled module."""

from math import gcd, isqrt


def power_chain_fps(start, mult, n, count, mask):
    """Fingerprints of start, start*mult, ... (count values, mod n).

    Returns (fps, modmuls); one modular multiplication per step after the
    first value.
    """
    fps = []
    append = fps.append
    cur = start
    for i in range(count):
        append(cur & mask)
        if i + 1 < count:
            cur = cur * mult % n
    return fps, max(count - 1, 0)


def _method1_try(n, e, d, k):
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


def vvt_scan(n, e, p0, q0, p1, q1, r_max, s_max, minus_form):
    """Exhaustive scan of d = r*q1 +/- s*q0 over [1,r_max] x [1,s_max].

    Only coprime (r, s) pairs are tested. Returns (hit, trials) where hit
    is (d, k, p, q, r, s, sign) or None and trials counts factor-recovery
    attempts.
    """
    trials = 0
    for s in range(1, s_max + 1):
        sq0 = s * q0
        sp0 = s * p0
        d = sq0
        k = sp0
        two_sq0 = 2 * sq0
        two_sp0 = 2 * sp0
        for r in range(1, r_max + 1):
            d += q1
            k += p1
            if gcd(r, s) != 1:
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
