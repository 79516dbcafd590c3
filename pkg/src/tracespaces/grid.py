"""Band-limited functions on a truncated periodic line, with quadrature
against power weights.

The computable model: the interval [-L, L] with periodic identification,
N equispaced samples, and trigonometric polynomials

    f(t) = sum_k c_k exp(2 pi i xi_k t),      xi_k = k / (2 L),

with every active frequency strictly below the Nyquist frequency
Xi = N / (4 L).  Coefficients c_k take values in C^dim, so the same grid
carries scalar functions and functions valued in a finite spectral model
of a Banach space.  All norm computations reduce to integrals

    int_{-L}^{L} |t|^gamma g(t) dt,

evaluated by integrating the weight exactly against a piecewise-polynomial
interpolant of the smooth factor g (never by blind quadrature of the
product, which loses the |t|^gamma singularity for gamma < 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GridError",
    "GridSpec",
    "GridFunction",
    "QuadratureMesh",
    "WeightedQuadrature",
    "weighted_lp_norm",
    "fourier_synthesize",
    "random_band_limited",
]


class GridError(ValueError):
    """Raised for out-of-band frequencies and malformed grid parameters."""


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid for the truncated periodic domain [-L, L].

    half_width is L; n_samples must be a power of two (>= 8) so the
    spectral transforms are exact FFTs.  The representable frequencies
    are the integer multiples of 1/(2L) strictly below the Nyquist
    frequency N/(4L); the unpaired Nyquist bin stays empty.
    """

    half_width: float = 1.0
    n_samples: int = 1024

    def __post_init__(self):
        if not (self.half_width > 0):
            raise GridError(f"half_width must be positive, got {self.half_width}")
        n = self.n_samples
        if n < 8 or (n & (n - 1)) != 0:
            raise GridError(f"n_samples must be a power of two >= 8, got {n}")

    @property
    def nyquist(self) -> float:
        return self.n_samples / (4.0 * self.half_width)

    @property
    def fundamental(self) -> float:
        """Smallest positive representable frequency, 1/(2L)."""
        return 1.0 / (2.0 * self.half_width)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.n_samples

    def sample_points(self) -> np.ndarray:
        n = self.n_samples
        return -self.half_width + self.spacing * np.arange(n)

    def frequencies(self) -> np.ndarray:
        """Frequencies in FFT index order (index j holds k = j or j - N)."""
        n = self.n_samples
        k = np.fft.fftfreq(n, d=1.0 / n)  # signed integer index
        return k * self.fundamental

    def freq_to_index(self, xi: float) -> int:
        k = xi / self.fundamental
        ki = int(round(k))
        if abs(k - ki) > 1e-9:
            raise GridError(f"frequency {xi} is not a multiple of 1/(2L) = {self.fundamental}")
        if abs(ki) >= self.n_samples // 2:
            raise GridError(
                f"frequency {xi} is not strictly below the Nyquist frequency {self.nyquist}"
            )
        return ki % self.n_samples


def _alternating_signs(n: int) -> np.ndarray:
    s = np.ones(n)
    s[1::2] = -1.0
    return s


class GridFunction:
    """A band-limited function on a GridSpec, stored as exact Fourier
    coefficients plus the matching sample values.

    Coefficients are a complex array of shape (N, dim) in FFT index
    order.  Construction from a coefficient map keeps the coefficients
    exact and synthesizes samples; construction from samples projects
    onto the band (the empty Nyquist bin is enforced) and re-synthesizes
    so the stored pair stays consistent.  Instances are immutable.
    """

    def __init__(self, grid: GridSpec, coeffs: np.ndarray, samples: np.ndarray | None = None):
        coeffs = np.ascontiguousarray(coeffs, dtype=complex)
        if coeffs.ndim == 1:
            coeffs = coeffs[:, None]
        if coeffs.shape[0] != grid.n_samples:
            raise GridError("coefficient array length must equal n_samples")
        nyq = grid.n_samples // 2
        if np.any(coeffs[nyq] != 0):
            raise GridError("Nyquist bin must stay empty: the unpaired mode is not band-limited")
        self.grid = grid
        self._coeffs = coeffs
        if samples is None:
            alt = _alternating_signs(grid.n_samples)[:, None]
            samples = grid.n_samples * np.fft.ifft(coeffs * alt, axis=0)
        self._samples = np.ascontiguousarray(samples)
        self._coeffs.flags.writeable = False
        self._samples.flags.writeable = False
        active = np.flatnonzero(np.any(coeffs != 0, axis=1))
        self._active = active
        self._eval_cache: dict[int, np.ndarray] = {}

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coeff_map(cls, grid: GridSpec, coeff_map: dict) -> "GridFunction":
        vals = [np.atleast_1d(np.asarray(v, dtype=complex)) for v in coeff_map.values()]
        dim = vals[0].shape[0] if vals else 1
        c = np.zeros((grid.n_samples, dim), dtype=complex)
        for xi, v in zip(coeff_map.keys(), vals):
            if v.shape[0] != dim:
                raise GridError("all coefficient values must share one dimension")
            c[grid.freq_to_index(float(xi))] += v
        return cls(grid, c)

    @classmethod
    def from_samples(cls, grid: GridSpec, samples: np.ndarray) -> "GridFunction":
        samples = np.asarray(samples, dtype=complex)
        if samples.ndim == 1:
            samples = samples[:, None]
        if samples.shape[0] != grid.n_samples:
            raise GridError("sample array length must equal n_samples")
        alt = _alternating_signs(grid.n_samples)[:, None]
        coeffs = alt * np.fft.fft(samples, axis=0) / grid.n_samples
        coeffs[grid.n_samples // 2] = 0.0  # project off the unpaired Nyquist mode
        return cls(grid, coeffs)

    # -- basic data ---------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def samples(self) -> np.ndarray:
        return self._samples

    @property
    def dim(self) -> int:
        return self._coeffs.shape[1]

    @property
    def active_indices(self) -> np.ndarray:
        return self._active

    def active_frequencies(self) -> np.ndarray:
        return self.grid.frequencies()[self._active]

    @property
    def max_frequency(self) -> float:
        if self._active.size == 0:
            return 0.0
        return float(np.max(np.abs(self.active_frequencies())))

    def coeff_map(self) -> dict:
        freqs = self.grid.frequencies()
        return {float(freqs[j]): self._coeffs[j].copy() for j in self._active}

    @property
    def value_at_zero(self) -> np.ndarray:
        """Sample value at t = 0 (a grid point)."""
        return self._samples[self.grid.n_samples // 2]

    # -- algebra ------------------------------------------------------

    def scaled(self, c: complex) -> "GridFunction":
        return GridFunction(self.grid, self._coeffs * c)

    def __add__(self, other: "GridFunction") -> "GridFunction":
        if other.grid != self.grid or other.dim != self.dim:
            raise GridError("grid/dimension mismatch")
        return GridFunction(self.grid, self._coeffs + other._coeffs)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        return self + other.scaled(-1.0)

    def multiplied(self, factors: np.ndarray) -> "GridFunction":
        """New function with coefficients factors[j] * c[j] (FFT order)."""
        factors = np.asarray(factors)
        if factors.shape != (self.grid.n_samples,):
            raise GridError("factor array must have one entry per frequency bin")
        return GridFunction(self.grid, self._coeffs * factors[:, None])

    def derivative(self, order: int = 1) -> "GridFunction":
        xi = self.grid.frequencies()
        return self.multiplied((2j * np.pi * xi) ** order)

    # -- evaluation ---------------------------------------------------

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        """Values at arbitrary points, shape (len(t), dim).

        Exact synthesis over the active modes; cost O(len(t) * n_active).
        """
        t = np.asarray(t, dtype=float)
        if self._active.size == 0:
            return np.zeros(t.shape + (self.dim,), dtype=complex)
        xi = self.active_frequencies()
        e = np.exp((2j * np.pi) * np.multiply.outer(t, xi))
        return e @ self._coeffs[self._active]

    def values_on_mesh(self, mesh: "QuadratureMesh") -> np.ndarray:
        key = (mesh.half_width, mesh.n_cells, mesh.grading, mesh.order)
        got = self._eval_cache.get(key)
        if got is None:
            got = self.evaluate(mesh.nodes)
            got.flags.writeable = False
            self._eval_cache[key] = got
        return got


# ---------------------------------------------------------------------
# quadrature against |t|^gamma
# ---------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)
_GL_NODES = 0.5 * (_GL_NODES + 1.0)  # shifted to [0, 1]
_GL_WEIGHTS = 0.5 * _GL_WEIGHTS


def _lagrange_monomial_matrix(order: int) -> np.ndarray:
    """Row n: monomial coefficients (in the local coordinate u in [0,1])
    of the Lagrange basis polynomial through equispaced nodes."""
    nodes = np.linspace(0.0, 1.0, order + 1)
    mat = np.zeros((order + 1, order + 1))
    for n in range(order + 1):
        poly = np.poly1d([1.0])
        for m in range(order + 1):
            if m != n:
                poly *= np.poly1d([1.0, -nodes[m]]) / (nodes[n] - nodes[m])
        mat[n, : poly.order + 1] = poly.coefficients[::-1]
    return mat


class QuadratureMesh:
    """Symmetric cell mesh on [-L, L], graded toward t = 0.

    Positive-side cell edges are L*(i/M)^grading; the negative side
    mirrors them.  Each cell carries order+1 equispaced interpolation
    nodes.  Node positions are weight-independent, so a function's node
    values can be reused across every gamma.
    """

    def __init__(self, half_width: float, n_cells: int = 2048, grading: float = 2.0, order: int = 3):
        if order not in (1, 3):
            raise GridError("interpolation order must be 1 or 3")
        if n_cells < 4:
            raise GridError("need at least 4 cells per side")
        self.half_width = float(half_width)
        self.n_cells = int(n_cells)
        self.grading = float(grading)
        self.order = int(order)
        edges = half_width * (np.arange(n_cells + 1) / n_cells) ** grading
        self.pos_edges = edges
        u = np.linspace(0.0, 1.0, order + 1)
        a, b = edges[:-1], edges[1:]
        pos_nodes = a[:, None] + (b - a)[:, None] * u[None, :]
        self.pos_nodes = pos_nodes  # (n_cells, order+1)
        neg_nodes = -pos_nodes[:, ::-1]
        # ascending global node order: negative cells (far to near), then positive
        self.nodes = np.concatenate([neg_nodes[::-1].ravel(), pos_nodes.ravel()])
        self._lagrange = _lagrange_monomial_matrix(order)
        self._weight_cache: dict[float, np.ndarray] = {}

    def __repr__(self):
        return (f"QuadratureMesh(L={self.half_width}, cells={self.n_cells}, "
                f"grading={self.grading}, order={self.order})")

    @classmethod
    def for_band(cls, grid: GridSpec, band_max: float, cells_per_wave: int = 24,
                 min_cells: int = 512, max_cells: int = 20000, grading: float = 2.0,
                 order: int = 3) -> "QuadratureMesh":
        """Mesh resolving oscillation up to |xi| = band_max on one side."""
        need = int(math.ceil(cells_per_wave * max(band_max, 1.0) * grid.half_width))
        return cls(grid.half_width, min(max(need, min_cells), max_cells), grading, order)

    @classmethod
    def for_function(cls, f: GridFunction, **kw) -> "QuadratureMesh":
        return cls.for_band(f.grid, f.max_frequency, **kw)

    # -- moment machinery ---------------------------------------------

    def _cell_basis_weights(self, a: np.ndarray, b: np.ndarray, gamma: float,
                            lo: np.ndarray | None = None, hi: np.ndarray | None = None) -> np.ndarray:
        """w[cell, node] = int_{lo}^{hi} t^gamma * lagrange_node(t; cell [a,b]) dt
        for positive cells 0 <= a < b; integration limits default to the cell."""
        if lo is None:
            lo = a
        if hi is None:
            hi = b
        h = b - a
        order = self.order
        w = np.zeros((a.size, order + 1))
        # moments m_j = int t^gamma ((t - a)/h)^j dt, j = 0..order
        full = (hi >= b - 1e-300) & (lo <= a + 1e-300)
        thin = (h < 0.3 * a) & full  # cancellation regime: Gauss in the local coordinate
        if np.any(thin):
            at, ht = a[thin], h[thin]
            tg = (at[:, None] + ht[:, None] * _GL_NODES[None, :]) ** gamma
            lag_at_gl = self._lagrange @ np.vander(_GL_NODES, order + 1, increasing=True).T
            w[thin] = (tg * _GL_WEIGHTS[None, :]) @ lag_at_gl.T * ht[:, None]
        rest = ~thin
        if np.any(rest):
            ar, hr = a[rest], h[rest]
            lor, hir = np.maximum(lo[rest], ar), np.minimum(hi[rest], b[rest])
            live = hir > lor
            m = np.zeros((ar.size, order + 1))
            # I_i = int_lo^hi t^{gamma+i} dt, exact; gamma + i + 1 > 0 for gamma > -1
            powers = np.arange(order + 1)
            ii = np.zeros((ar.size, order + 1))
            with np.errstate(invalid="ignore"):
                for i in powers:
                    e = gamma + i + 1.0
                    ii[live, i] = (hir[live] ** e - lor[live] ** e) / e
            for j in powers:
                acc = np.zeros(ar.size)
                for i in range(j + 1):
                    acc += math.comb(j, i) * (-ar) ** (j - i) * ii[:, i]
                m[:, j] = acc
            scale = np.where(hr > 0, hr, 1.0)[:, None] ** powers[None, :]
            w[rest] = (m / scale) @ self._lagrange.T
        return w

    def weights(self, gamma: float) -> np.ndarray:
        """Node weights so that sum(w * g(nodes)) = int |t|^gamma * interp(g) dt."""
        if gamma <= -1:
            raise GridError(f"weight exponent must exceed -1, got gamma={gamma}")
        got = self._weight_cache.get(gamma)
        if got is not None:
            return got
        a, b = self.pos_edges[:-1], self.pos_edges[1:]
        wp = self._cell_basis_weights(a, b, gamma)
        wn = wp[::-1, ::-1]  # mirrored cells, mirrored node order
        w = np.concatenate([wn.ravel(), wp.ravel()])
        w.flags.writeable = False
        self._weight_cache[gamma] = w
        return w

    def weights_on_interval(self, gamma: float, lo: float, hi: float) -> np.ndarray:
        """Weights for int_{[lo,hi]} |t|^gamma * interp(g) dt (subset of [-L, L])."""
        if gamma <= -1:
            raise GridError(f"weight exponent must exceed -1, got gamma={gamma}")
        a, b = self.pos_edges[:-1], self.pos_edges[1:]
        # positive side clipped to [max(lo,0), max(hi,0)]
        plo, phi = max(lo, 0.0), max(hi, 0.0)
        wp = self._cell_basis_weights(a, b, gamma,
                                      lo=np.full_like(a, plo), hi=np.full_like(b, phi))
        # negative side: reflect [lo,hi] onto [|hi|, |lo|]
        nlo, nhi = max(-hi, 0.0), max(-lo, 0.0)
        wn = self._cell_basis_weights(a, b, gamma,
                                      lo=np.full_like(a, nlo), hi=np.full_like(b, nhi))
        return np.concatenate([wn[::-1, ::-1].ravel(), wp.ravel()])

    def integrate(self, node_values: np.ndarray, gamma: float,
                  interval: tuple[float, float] | None = None) -> float:
        w = self.weights(gamma) if interval is None else self.weights_on_interval(gamma, *interval)
        return float(np.real(np.dot(w, node_values)))


@dataclass(frozen=True)
class WeightedQuadrature:
    """Plan for integrals against the power weight |t|^gamma: exponent,
    interpolation order of the smooth factor, and mesh grading."""

    gamma: float
    order: int = 3
    grading: float = 2.0

    def __post_init__(self):
        if self.gamma <= -1:
            raise GridError(f"power weight needs gamma > -1, got {self.gamma}")
        if self.order not in (1, 3):
            raise GridError("interpolation order must be 1 or 3")

    def mesh(self, grid: GridSpec, band_max: float = 0.0, **kw) -> QuadratureMesh:
        return QuadratureMesh.for_band(grid, band_max, grading=self.grading,
                                       order=self.order, **kw)

    def weight_integral(self, half_width: float) -> float:
        """Closed form int_{-L}^{L} |t|^gamma dt = 2 L^{gamma+1} / (gamma+1)."""
        return 2.0 * half_width ** (self.gamma + 1.0) / (self.gamma + 1.0)


# ---------------------------------------------------------------------
# norms and constructors
# ---------------------------------------------------------------------


def _scalar_magnitudes(values: np.ndarray, inner=None) -> np.ndarray:
    if inner is None:
        if values.shape[-1] != 1:
            # default inner norm on C^dim is Euclidean
            return np.sqrt(np.sum(np.abs(values) ** 2, axis=-1))
        return np.abs(values[..., 0])
    return inner.batch_norm(values)


def weighted_lp_norm(f: GridFunction, p: float, gamma: float,
                     mesh: QuadratureMesh | None = None, inner=None,
                     interval: tuple[float, float] | None = None) -> float:
    """|| f ||_{L^p(|t|^gamma dt; X)} on [-L, L] (or on a subinterval).

    The pointwise magnitude ||f(t)||_X is sampled on the mesh nodes and its
    p-th power integrated exactly against |t|^gamma as a piecewise cubic.
    p = inf returns the node supremum (weight-independent).
    """
    if gamma <= -1:
        raise GridError(f"power weight needs gamma > -1, got {gamma}")
    if not (p >= 1):
        raise GridError(f"integrability exponent must satisfy p >= 1, got {p}")
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    mags = _scalar_magnitudes(f.values_on_mesh(mesh), inner)
    if math.isinf(p):
        return float(np.max(mags)) if mags.size else 0.0
    val = mesh.integrate(mags ** p, gamma, interval)
    return float(max(val, 0.0) ** (1.0 / p))


def fourier_synthesize(grid: GridSpec, coeff_map: dict) -> GridFunction:
    """Band-limited function from an explicit frequency -> value map."""
    return GridFunction.from_coeff_map(grid, coeff_map)


def random_band_limited(grid: GridSpec, band: tuple[float, float], seed,
                        dim: int = 1) -> GridFunction:
    """Seeded function with i.i.d. standard complex normal coefficients on
    every representable frequency inside [band[0], band[1]]."""
    lo, hi = band
    if hi < lo:
        raise GridError("band must be ordered")
    if hi >= grid.nyquist or lo <= -grid.nyquist:
        raise GridError("band must lie strictly inside (-Nyquist, Nyquist)")
    klo = int(math.ceil(lo / grid.fundamental - 1e-9))
    khi = int(math.floor(hi / grid.fundamental + 1e-9))
    if khi < klo:
        raise GridError("band contains no representable frequency")
    rng = np.random.default_rng(seed)
    ks = np.arange(klo, khi + 1)
    vals = (rng.standard_normal((ks.size, dim)) + 1j * rng.standard_normal((ks.size, dim)))
    vals /= math.sqrt(2.0)
    c = np.zeros((grid.n_samples, dim), dtype=complex)
    nyq = grid.n_samples // 2
    for k, v in zip(ks, vals):
        if abs(k) >= nyq:
            raise GridError("band must stay below the Nyquist frequency")
        c[k % grid.n_samples] = v
    return GridFunction(grid, c)
