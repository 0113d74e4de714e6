"""Deterministic sampling of exact rational spectral points.

Identity checks in this package are Schwartz-Zippel style: every identity in
scope is a rational function of low total degree, so exact evaluation at a
handful of random rational points certifies it with overwhelming confidence.
Points that collide with poles are rejected exactly and resampled.  The
generator is a self-contained 64-bit splitmix so reports are reproducible
across platforms and Python versions.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 25

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int = DEFAULT_SEED):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; bias is irrelevant for sampling."""
        return lo + self.next_u64() % (hi - lo + 1)


def sample_fraction(rng: SplitMix64) -> Fraction:
    """Random rational with numerator in [-20, 20], denominator in [1, 20]."""
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def sample_tuple(rng, arity, reject=None, max_tries=10_000):
    """One tuple of distinct-enough rationals, resampled while ``reject`` holds."""
    for _ in range(max_tries):
        point = tuple(sample_fraction(rng) for _ in range(arity))
        if reject is None or not reject(*point):
            return point
    raise RuntimeError("rejection sampling did not find an admissible point")


def sample_tuples(rng, count, arity, reject=None):
    return [sample_tuple(rng, arity, reject) for _ in range(count)]
