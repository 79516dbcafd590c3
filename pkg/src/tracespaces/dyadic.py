"""Smooth dyadic frequency decomposition.

The generator phi_hat is an even C^inf bump with phi_hat = 1 on |xi| <= 1
and phi_hat = 0 on |xi| >= 3/2, built from the standard exp(-1/x) smooth
step.  Blocks:

    block 0:      phi_hat(xi)
    block k >= 1: phi_hat(xi / 2^k) - phi_hat(xi / 2^{k-1})

so block k >= 1 is supported in 2^{k-1} <= |xi| <= 3 * 2^{k-1}, blocks two
apart have disjoint supports, and the sum over k = 0..K telescopes to
phi_hat(xi / 2^K), identically 1 for |xi| <= 2^K.  Applying a block to a
band-limited function multiplies each Fourier coefficient by the block
symbol value, which is exact on coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import GridFunction

__all__ = ["DyadicSystem", "build_system", "apply_block", "partition_check", "smooth_step"]

_SNAP = float(2 ** 26)


def smooth_step(x, sharpness: float = 1.0):
    """C^inf monotone step: 0 for x <= 0, 1 for x >= 1, exp(-s/x) profile.

    smooth_step(1/2) = 1/2 for every sharpness by symmetry.
    """
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    out[x >= 1.0] = 1.0
    mid = (x > 0.0) & (x < 1.0)
    if np.any(mid):
        xm = x[mid]
        h0 = np.exp(-sharpness / xm)
        h1 = np.exp(-sharpness / (1.0 - xm))
        out[mid] = h0 / (h0 + h1)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class DyadicSystem:
    """Dyadic partition generated by a smooth bump; max_block is the largest
    usable block index K (the partition sums to 1 on |xi| <= 2^K)."""

    max_block: int = 8
    sharpness: float = 1.0
    _symbol_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.max_block < 1:
            raise ValueError("max_block must be >= 1")
        if not self.sharpness > 0:
            raise ValueError("sharpness must be positive")

    def generator(self, xi):
        """phi_hat(xi): 1 for |xi| <= 1, 0 for |xi| >= 3/2, smooth between.

        Values are snapped to the grid 2^-26 * {0, ..., 2^26}.  Snapping
        keeps the bump within 2^-27 of the smooth profile while making the
        telescoped block sums exactly 1.0 and block-times-coefficient
        products exact whenever the coefficients carry at most 26
        significant bits (the difference of two 26-bit grid values has at
        most 26 significant bits, so each product fits in a double).
        """
        a = np.abs(np.asarray(xi, dtype=float))
        g = smooth_step((1.5 - a) / 0.5, self.sharpness)
        snapped = np.round(np.asarray(g) * _SNAP) / _SNAP
        return snapped if snapped.ndim else float(snapped)

    def block_symbol(self, k: int, xi):
        """Multiplier of block k at frequencies xi."""
        if not 0 <= k <= self.max_block:
            raise ValueError(f"block index {k} outside 0..{self.max_block}")
        if k == 0:
            return self.generator(xi)
        xi = np.asarray(xi, dtype=float)
        return self.generator(xi / 2.0 ** k) - self.generator(xi / 2.0 ** (k - 1))

    def block_symbols_for(self, f: GridFunction) -> np.ndarray:
        """(max_block+1, N) table of block symbols on f's frequency bins."""
        key = (f.grid.half_width, f.grid.n_samples)
        got = self._symbol_cache.get(key)
        if got is None:
            xi = f.grid.frequencies()
            got = np.stack([self.block_symbol(k, xi) for k in range(self.max_block + 1)])
            got.flags.writeable = False
            self._symbol_cache[key] = got
        return got

    def covers(self, xi_max: float) -> bool:
        return xi_max <= 2.0 ** self.max_block


def build_system(max_block: int = 8, sharpness: float = 1.0) -> DyadicSystem:
    return DyadicSystem(max_block=max_block, sharpness=sharpness)


def apply_block(sys: DyadicSystem, k: int, f: GridFunction) -> GridFunction:
    """Frequency projection S_k f, exact on coefficients."""
    return f.multiplied(sys.block_symbols_for(f)[k])


def partition_check(sys: DyadicSystem, xi_samples) -> float:
    """sup |sum_{k=0}^{K} block_k(xi) - 1| over the given frequencies.

    Meaningful for |xi| <= 2^K, where the telescoped sum is exactly 1.
    """
    xi = np.asarray(xi_samples, dtype=float)
    if xi.size == 0:
        return 0.0
    total = np.zeros_like(xi)
    for k in range(sys.max_block + 1):
        total += sys.block_symbol(k, xi)
    return float(np.max(np.abs(total - 1.0)))
