"""Attack engines: classic Wiener, exhaustive (r, s) search, meet-in-the-middle.

All engines share a cheap convergent pre-pass: a hit there is free relative
to a table build. The exhaustive engine doubles as the testing oracle for
the meet-in-the-middle one.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from . import contfrac
from ._kernel import power_chain_fps, vvt_scan
from .mitm_table import DEFAULT_ROW_PRIMES, FingerprintTable, fingerprint_width
from .numeric import NotInvertibleError, isqrt, mod_inv, mod_pow
from .rsa import PublicKey, method1_factor

VARIANTS = ("wiener", "vvt", "mitm")
BOUND_MODES = ("fixed-4d", "quotient", "explicit")
APPROX_MODES = ("plain", "improved")


@dataclass
class AttackConfig:
    variant: str = "mitm"
    r_max: int | None = None
    s_max: int | None = None
    bound_mode: str = "explicit"
    d_ratio: float | None = None  # for fixed-4d / quotient bound modes
    approx: str = "plain"
    gcd_rows: bool = False
    probe_minus_form: bool = False
    m_candidates: tuple | None = None
    primes: tuple = DEFAULT_ROW_PRIMES

    def validate(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.bound_mode not in BOUND_MODES:
            raise ValueError(f"unknown bound mode {self.bound_mode!r}")
        if self.approx not in APPROX_MODES:
            raise ValueError(f"unknown approximation mode {self.approx!r}")
        if self.variant in ("vvt", "mitm"):
            if self.bound_mode == "explicit":
                if not self.r_max or not self.s_max:
                    raise ValueError("explicit bound mode needs r_max and s_max >= 1")
            elif self.d_ratio is None or self.d_ratio <= 0:
                raise ValueError(f"{self.bound_mode} bound mode needs a positive d_ratio")


@dataclass
class Stats:
    modmuls: int = 0
    probes: int = 0
    collisions: int = 0
    method1_trials: int = 0
    table_bytes: int = 0
    rows_examined: int = 0
    rows_skipped: int = 0
    m_tried: int = 0
    wall_time: float = 0.0


@dataclass
class AttackResult:
    outcome: str  # recovered | exhausted | gcd-break
    d: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None
    stats: Stats = field(default_factory=Stats)

    @property
    def recovered(self) -> bool:
        return self.outcome == "recovered"


def approximation_target(pub: PublicKey, mode: str = "plain"):
    """Approximation target for k/d and a safe rational over-estimate of
    the error bound (sqrt(n) rounded down in the bound denominator, up in
    the improved target's denominator)."""
    n, e = pub.n, pub.e
    root = isqrt(n)
    if mode == "plain":
        return Fraction(e, n), Fraction(2122, 1000) * Fraction(e, n * root)
    if mode == "improved":
        two_root = isqrt(4 * n)
        if two_root * two_root != 4 * n:
            two_root += 1
        return (
            Fraction(e, n + 1 - two_root),
            Fraction(1221, 10000) * Fraction(e, n * root),
        )
    raise ValueError(f"unknown approximation mode {mode!r}")


def anchor_index(pub: PublicKey, approx: str = "plain"):
    """The attack's anchor index m' for this key, or None."""
    target, bound = approximation_target(pub, approx)
    return contfrac.locate_m_prime(target, bound, contfrac.expand(target))


def _try_candidate(pub, d, k, stats):
    if d < 1 or k < 1:
        return None
    stats.method1_trials += 1
    res = method1_factor(pub, d, k)
    if res.ok:
        return res
    return None


def _wiener_pass(pub: PublicKey, cf: contfrac.ContFrac, stats: Stats):
    for k, d in cf.convergents:
        if k < 1:
            continue
        res = _try_candidate(pub, d, k, stats)
        if res is not None:
            return AttackResult("recovered", d, k, res.p, res.q, stats)
    return None


def wiener_classic(pub: PublicKey) -> AttackResult:
    """Try every convergent denominator of e/n as the secret exponent."""
    stats = Stats()
    t0 = time.perf_counter()
    cf = contfrac.expand(Fraction(pub.e, pub.n))
    result = _wiener_pass(pub, cf, stats) or AttackResult("exhausted", stats=stats)
    stats.wall_time = time.perf_counter() - t0
    return result


def _m_candidates(cf, target, bound, cfg):
    top = len(cf) - 2  # need convergent m+1
    if cfg.m_candidates is not None:
        return [m for m in cfg.m_candidates if -1 <= m <= top]
    m_prime = contfrac.locate_m_prime(target, bound, cf)
    if m_prime is None:
        return list(range(-1, top + 1))
    return [m for m in (m_prime, m_prime + 1, m_prime + 2) if m <= top]


def _bounds_for(cfg, cf, m):
    if cfg.bound_mode == "explicit":
        return cfg.r_max, cfg.s_max
    if cfg.bound_mode == "fixed-4d":
        r = contfrac.rs_bounds(0, 0, 0, cfg.d_ratio, simple=True)[0]
        b = max(1, ceil(r))
        return b, b
    r, s = contfrac.rs_bounds(
        cf.quotient(m + 1), cf.quotient(m + 2), cf.quotient(m + 3), cfg.d_ratio
    )
    return max(1, ceil(r)), max(1, ceil(s))


def _boundary_candidates(pub, cf, m, stats):
    # r = 1, s = 0 and r = 0, s = 1 reproduce the plain convergents.
    for k, d in (cf.convergent(m + 1), cf.convergent(m)):
        res = _try_candidate(pub, d, k, stats)
        if res is not None:
            return AttackResult("recovered", d, k, res.p, res.q, stats)
    return None


def _gcd_break(g, n, stats):
    p, q = min(g, n // g), max(g, n // g)
    return AttackResult("gcd-break", p=p, q=q, stats=stats)


def vvt_exhaustive(pub: PublicKey, cfg: AttackConfig) -> AttackResult:
    """Exhaustive search over coprime (r, s) pairs, one factor-recovery
    attempt per pair. Quadratic in the bounds; serves as the oracle."""
    cfg.validate()
    stats = Stats()
    t0 = time.perf_counter()
    try:
        target, bound = approximation_target(pub, cfg.approx)
        cf = contfrac.expand(target)
        result = _wiener_pass(pub, cf, stats)
        if result is None:
            for m in _m_candidates(cf, target, bound, cfg):
                stats.m_tried += 1
                p0, q0 = cf.convergent(m)
                p1, q1 = cf.convergent(m + 1)
                r_max, s_max = _bounds_for(cfg, cf, m)
                result = _boundary_candidates(pub, cf, m, stats)
                if result is not None:
                    break
                hit, trials = vvt_scan(
                    pub.n, pub.e, p0, q0, p1, q1, r_max, s_max,
                    cfg.probe_minus_form,
                )
                stats.method1_trials += trials
                if hit is not None:
                    d, k, p, q = hit[0], hit[1], hit[2], hit[3]
                    result = AttackResult("recovered", d, k, p, q, stats)
                    break
        if result is None:
            result = AttackResult("exhausted", stats=stats)
    finally:
        stats.wall_time = time.perf_counter() - t0
    return result


def mitm_attack(pub: PublicKey, cfg: AttackConfig) -> AttackResult:
    """Meet-in-the-middle search: table over a^r, probe stream over 2*b^s.

    Per index m this costs O(r_max + s_max) modular multiplications instead
    of the exhaustive engine's r_max * s_max factor-recovery attempts.
    """
    cfg.validate()
    stats = Stats()
    t0 = time.perf_counter()
    try:
        result = _mitm_search(pub, cfg, stats)
    finally:
        stats.wall_time = time.perf_counter() - t0
    return result


def _mitm_search(pub, cfg, stats):
    n, e = pub.n, pub.e
    target, bound = approximation_target(pub, cfg.approx)
    cf = contfrac.expand(target)
    result = _wiener_pass(pub, cf, stats)
    if result is not None:
        return result
    for m in _m_candidates(cf, target, bound, cfg):
        stats.m_tried += 1
        p0, q0 = cf.convergent(m)
        p1, q1 = cf.convergent(m + 1)
        r_max, s_max = _bounds_for(cfg, cf, m)
        result = _boundary_candidates(pub, cf, m, stats)
        if result is not None:
            return result
        a = mod_pow(2, e * q1, n)
        bq = mod_pow(2, e * q0, n)
        try:
            b = mod_inv(bq, n) if bq != 1 else 1
            w = fingerprint_width(r_max, s_max)
            table = FingerprintTable.build(a, n, r_max, cfg.primes, w)
        except NotInvertibleError as exc:
            return _gcd_break(exc.gcd, n, stats)
        stats.modmuls += table.modmuls
        stats.table_bytes = max(stats.table_bytes, table.nominal_bytes)
        mask = (1 << w) - 1
        # Probe streams: plus form a^r == 2*b^s, minus form a^r == 2*bq^s.
        chains = [("+", power_chain_fps(2 * b % n, b, n, s_max, mask))]
        stats.modmuls += s_max  # chain muls plus the initial 2*b mod n
        if cfg.probe_minus_form:
            chains.append(("-", power_chain_fps(2 * bq % n, bq, n, s_max, mask)))
            stats.modmuls += s_max
        for s in range(1, s_max + 1):
            for sign, (fps, _) in chains:
                for r in table.probe_fp(fps[s - 1], s, cfg.gcd_rows):
                    if sign == "+":
                        d, k = r * q1 + s * q0, r * p1 + s * p0
                    else:
                        d, k = r * q1 - s * q0, r * p1 - s * p0
                    res = _try_candidate(pub, d, k, stats)
                    if res is not None:
                        _drain_counters(table, stats)
                        return AttackResult("recovered", d, k, res.p, res.q, stats)
                    stats.collisions += 1
        _drain_counters(table, stats)
    return AttackResult("exhausted", stats=stats)


def _drain_counters(table, stats):
    stats.probes += table.probes
    stats.rows_examined += table.rows_examined
    stats.rows_skipped += table.rows_skipped


def run_attack(pub: PublicKey, cfg: AttackConfig) -> AttackResult:
    cfg.validate()
    if cfg.variant == "wiener":
        return wiener_classic(pub)
    if cfg.variant == "vvt":
        return vvt_exhaustive(pub, cfg)
    return mitm_attack(pub, cfg)
