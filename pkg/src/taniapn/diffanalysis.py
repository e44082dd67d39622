"""Exhaustive differential analysis.

For a function f on an n-bit index space (XOR as addition), the spectrum
collects, over every nonzero input difference a and every output value b,
the number of solutions x of

    f(x + a) + f(x) = b.

Solutions pair up as x <-> x+a, so every count is even; summed over the
histogram the counts account for all (a, x) pairs, i.e. (2^n - 1) * 2^n.
f is APN exactly when no count exceeds 2.

Works on anything exposing packed_table() and dimension: the bivariate
families (n = 2m) and the univariate Gold fixture alike.  One pass per a
buckets the derivative values into a flat array of 2^n counters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooLarge

_SCAN_BITS_LIMIT = 16  # full spectrum is 2^(2n) work; capped at n = 16


@dataclass(frozen=True)
class DifferentialSpectrum:
    """Histogram of solution counts over all (a != 0, b) pairs."""

    n: int
    uniformity: int
    histogram: dict[int, int]  # solution count -> number of (a, b) attaining it

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "uniformity": self.uniformity,
            "histogram": {str(c): f for c, f in sorted(self.histogram.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "DifferentialSpectrum":
        return cls(
            n=int(data["n"]),
            uniformity=int(data["uniformity"]),
            histogram={int(c): int(f) for c, f in data["histogram"].items()},
        )


def _checked_table(f) -> tuple[np.ndarray, int]:
    n = f.dimension
    if n > _SCAN_BITS_LIMIT:
        raise TooLarge(f"differential scan capped at n={_SCAN_BITS_LIMIT} (got n={n})")
    return f.packed_table(), n


def differential_spectrum(f) -> DifferentialSpectrum:
    """Full histogram; asserts evenness and mass conservation before returning."""
    tab, n = _checked_table(f)
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    hist: dict[int, int] = {}
    for a in range(1, size):
        d = tab[idx ^ np.uint32(a)] ^ tab
        counts = np.bincount(d, minlength=size)
        vals, freqs = np.unique(counts, return_counts=True)
        for c, fr in zip(vals, freqs):
            hist[int(c)] = hist.get(int(c), 0) + int(fr)
    uniformity = max(c for c in hist if hist[c] > 0)

    assert all(c % 2 == 0 for c in hist), "odd solution count in characteristic 2"
    mass = sum(c * fr for c, fr in hist.items())
    assert mass == (size - 1) * size, "histogram mass mismatch"
    assert uniformity >= 2

    return DifferentialSpectrum(n=n, uniformity=uniformity, histogram=hist)


def is_apn(f) -> bool:
    """Uniformity == 2, short-circuiting on the first counter to reach 4."""
    tab, n = _checked_table(f)
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    for a in range(1, size):
        d = tab[idx ^ np.uint32(a)] ^ tab
        if int(np.bincount(d, minlength=size).max()) > 2:
            return False
    return True
