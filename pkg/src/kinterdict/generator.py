"""Deterministic random instance generator.

Values are drawn from an explicit SplitMix64 stream so identical parameters
produce byte-identical instance files on every platform and Python version.
Draw order is fixed: profits p[0..n), then costs c[0..n), then weights row
by row w[0][0..n), ..., w[t-1][0..n).  Each value is uniform on [1, vmax]
via rejection sampling (no modulo bias).  The budget is
round(budget_frac * sum(c)) and each capacity round(cap_frac * row sum),
rounded half to even on exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .instance import Instance

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny fixed PRNG; the documented source of all generated values."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection sampling."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + v % span


def generate_instance(
    n: int,
    t: int,
    seed: int,
    pmax: int = 100,
    wmax: int = 100,
    cmax: int = 100,
    budget_frac=Fraction(1, 2),
    cap_frac=Fraction(1, 2),
) -> Instance:
    if n < 0:
        raise ValueError("n must be non-negative")
    if t < 1:
        raise ValueError("t must be >= 1")
    if min(pmax, wmax, cmax) < 1:
        raise ValueError("value maxima must be >= 1")
    budget_frac = Fraction(budget_frac)
    cap_frac = Fraction(cap_frac)
    if budget_frac < 0 or cap_frac < 0:
        raise ValueError("fractions must be non-negative")
    rng = SplitMix64(seed)
    p = tuple(rng.uniform(1, pmax) for _ in range(n))
    c = tuple(rng.uniform(1, cmax) for _ in range(n))
    W = tuple(tuple(rng.uniform(1, wmax) for _ in range(n)) for _ in range(t))
    B = round(budget_frac * sum(c))
    C = tuple(round(cap_frac * sum(row)) for row in W)
    return Instance(n=n, t=t, p=p, c=c, W=W, B=B, C=C)
