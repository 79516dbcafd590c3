"""Embedding and interpolation inequalities between weighted spaces.

Three families of executable statements:

* Weight-trading embeddings F/B^{s0}_{p0,q0}(|t|^{gamma0}) into
  F/B^{s1}_{p1,q1}(|t|^{gamma1}) along the invariance line
  s0 - (1+gamma0)/p0 = s1 - (1+gamma1)/p1 with p0 <= p1 and
  gamma0/p0 >= gamma1/p1.  On the F-scale the microscopic parameters are
  unconstrained; on the B-scale q must not decrease.

* The mixed-derivative estimate: with 1/p = (1-theta)/p0 + theta/p1 (same
  for q, and gamma/p interpolating likewise),

    ||f||_{A^{s+(1-theta)alpha}_{p,q}(w_gamma; X_theta)}
        <= C ||f||^{1-theta}_{A^{s+alpha}_{p0,q0}(w_{gamma0}; X_0)}
             ||f||^{theta}_{A^{s}_{p1,q1}(w_{gamma1}; X_1)}.

  When gamma0 = gamma1 every norm is a sum over the same weighted nodes
  and blocks, so the outer inequality is literal Hoelder with constant 1
  and C reduces to the inner-space constant of the triple (X_0, X_1,
  X_theta).  For weighted-Euclidean triples that constant is computed by
  maximizing over coordinate pairs, which suffices at stationarity for
  weights in general position (the test oracle samples the full simplex).

* The divergence witness against mixed-scale embeddings: lacunary
  sequences whose target ell^u and source ell^q norms separate by the
  factor N^{1/u - 1/q}, blocking any embedding that would need u >= q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .dyadic import DyadicSystem
from .grid import QuadratureMesh
from .spaces import SpaceSpec, WeightedEuclideanInner, space_norm

__all__ = [
    "EMBEDDING_EXAMPLE_PAIRS",
    "validate_embedding_pair",
    "sobolev_embed_ratio",
    "MixedDerivativeParams",
    "InnerTriple",
    "diagonal_holder_constant",
    "mixed_derivative_check",
    "counterexample_norms",
    "q_monotonicity_check",
    "bf_sandwich_check",
    "h_sandwich_ratios",
    "w_sandwich_ratios",
]


# ---------------------------------------------------------------------
# weight-trading embeddings
# ---------------------------------------------------------------------


# reference pairs on the invariance line s - (1+gamma)/p = const:
# a pure weight trade at fixed p with the microscopic parameter dropping
# from inf to 1, an unweighted integrability trade, and a B-scale trade
# moving weight, integrability and q together
EMBEDDING_EXAMPLE_PAIRS = (
    (SpaceSpec("F", 1.0, 2.0, math.inf, 1.0), SpaceSpec("F", 0.5, 2.0, 1.0, 0.0)),
    (SpaceSpec("F", 1.0, 2.0, 2.0, 0.0), SpaceSpec("F", 0.75, 4.0, 2.0, 0.0)),
    (SpaceSpec("B", 1.0, 2.0, 1.0, 0.5), SpaceSpec("B", 7.0 / 12.0, 3.0, 2.0, 0.0)),
)


def validate_embedding_pair(src: SpaceSpec, dst: SpaceSpec, tol: float = 1e-12) -> None:
    """Raise unless (src, dst) sit on the sharp embedding line."""
    if src.kind != dst.kind or src.kind not in ("B", "F"):
        raise ValueError("embedding pairs must share a B or F kind")
    if not src.p <= dst.p:
        raise ValueError(f"integrability cannot drop: p0={src.p} > p1={dst.p}")
    if src.gamma / src.p < dst.gamma / dst.p - tol:
        raise ValueError(
            f"need gamma0/p0 >= gamma1/p1, got {src.gamma / src.p:g} < "
            f"{dst.gamma / dst.p:g}")
    lhs = src.s - (1.0 + src.gamma) / src.p
    rhs = dst.s - (1.0 + dst.gamma) / dst.p
    if abs(lhs - rhs) > tol:
        raise ValueError(
            f"off the invariance line: s0-(1+gamma0)/p0 = {lhs:g} but "
            f"s1-(1+gamma1)/p1 = {rhs:g}")
    if not src.s > dst.s:
        raise ValueError(f"need s0 > s1, got s0={src.s}, s1={dst.s}")
    if src.kind == "B" and src.q > dst.q:
        raise ValueError("on the B-scale the microscopic parameter cannot drop")


def sobolev_embed_ratio(f, src: SpaceSpec, dst: SpaceSpec, sys: DyadicSystem,
                        mesh: QuadratureMesh | None = None) -> dict:
    """||f||_dst / ||f||_src for a validated embedding pair."""
    validate_embedding_pair(src, dst)
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    src_norm = space_norm(f, src, sys, mesh=mesh)
    dst_norm = space_norm(f, dst, sys, mesh=mesh)
    if src_norm == 0.0:
        raise ValueError("zero function has no embedding ratio")
    return {"src_norm": src_norm, "dst_norm": dst_norm,
            "ratio": dst_norm / src_norm}


# ---------------------------------------------------------------------
# mixed-derivative estimate
# ---------------------------------------------------------------------


def _as_frac(x, name: str) -> Fraction:
    if isinstance(x, float) and math.isinf(x):
        raise ValueError(f"{name} must be finite")
    return Fraction(x)


def _recip_mix(theta: Fraction, a, b):
    """x with 1/x = (1-theta)/a + theta/b; a, b in (0, inf]."""
    inv = Fraction(0)
    if not (isinstance(a, float) and math.isinf(a)):
        inv += (1 - theta) / Fraction(a)
    if not (isinstance(b, float) and math.isinf(b)):
        inv += theta / Fraction(b)
    if inv == 0:
        return math.inf
    return 1 / inv


@dataclass(frozen=True)
class MixedDerivativeParams:
    """Exact parameter bookkeeping for the mixed-derivative estimate.

    The interpolated exponents p, q, gamma are derived in rational
    arithmetic, so the target space is exactly on the interpolation
    segment whenever the inputs are rationals (q0/q1 may be inf).
    """

    kind: str
    s: Fraction
    alpha: Fraction
    theta: Fraction
    p0: Fraction
    q0: float | Fraction
    gamma0: Fraction
    p1: Fraction
    q1: float | Fraction
    gamma1: Fraction

    def __post_init__(self):
        conv = {
            "s": _as_frac(self.s, "s"), "alpha": _as_frac(self.alpha, "alpha"),
            "theta": _as_frac(self.theta, "theta"),
            "p0": _as_frac(self.p0, "p0"), "gamma0": _as_frac(self.gamma0, "gamma0"),
            "p1": _as_frac(self.p1, "p1"), "gamma1": _as_frac(self.gamma1, "gamma1"),
        }
        for k, v in conv.items():
            object.__setattr__(self, k, v)
        for name in ("q0", "q1"):
            v = getattr(self, name)
            if not (isinstance(v, float) and math.isinf(v)):
                object.__setattr__(self, name, _as_frac(v, name))
        if self.kind not in ("B", "F"):
            raise ValueError("kind must be 'B' or 'F'")
        if not 0 < self.theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        for name in ("p0", "p1"):
            if getattr(self, name) <= 1:
                raise ValueError(f"{name} must exceed 1")
        for name in ("q0", "q1"):
            v = getattr(self, name)
            if not (isinstance(v, float) and math.isinf(v)) and v < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("gamma0", "gamma1"):
            if getattr(self, name) <= -1:
                raise ValueError(f"{name} must exceed -1")

    @property
    def p(self) -> Fraction:
        return _recip_mix(self.theta, self.p0, self.p1)

    @property
    def q(self):
        return _recip_mix(self.theta, self.q0, self.q1)

    @property
    def gamma(self) -> Fraction:
        mix = (1 - self.theta) * self.gamma0 / self.p0 + self.theta * self.gamma1 / self.p1
        return self.p * mix

    @property
    def target_smoothness(self) -> Fraction:
        return self.s + (1 - self.theta) * self.alpha

    @property
    def shared_weights(self) -> bool:
        """Whether all three norms integrate against the same weight, which
        makes the outer Hoelder step exact at the quadrature level."""
        return self.gamma0 == self.gamma1

    def _q_float(self, v) -> float:
        return float(v) if not (isinstance(v, float) and math.isinf(v)) else math.inf

    def target_spec(self, inner=None) -> SpaceSpec:
        return SpaceSpec(self.kind, float(self.target_smoothness), float(self.p),
                         self._q_float(self.q), float(self.gamma), inner=inner)

    def source0_spec(self, inner=None) -> SpaceSpec:
        return SpaceSpec(self.kind, float(self.s + self.alpha), float(self.p0),
                         self._q_float(self.q0), float(self.gamma0), inner=inner)

    def source1_spec(self, inner=None) -> SpaceSpec:
        return SpaceSpec(self.kind, float(self.s), float(self.p1),
                         self._q_float(self.q1), float(self.gamma1), inner=inner)


def diagonal_holder_constant(inner0: WeightedEuclideanInner,
                             inner1: WeightedEuclideanInner,
                             inner_theta: WeightedEuclideanInner,
                             theta: float, grid_points: int = 801) -> float:
    """Smallest C with ||x||_theta <= C ||x||_0^{1-theta} ||x||_1^{theta}
    over x != 0, for three diagonal weights.

    In squared-magnitude coordinates the ratio is linear over a geometric
    mean of two linear forms; a stationary point on the simplex pins the
    active weights to a two-parameter linear family, so for weights in
    general position at most two coordinates carry an interior maximum.
    Candidates: all axes exactly, all coordinate pairs on a dense segment
    grid.
    """
    a = inner_theta.weights ** 2
    b = inner0.weights ** 2
    c = inner1.weights ** 2
    if not (a.size == b.size == c.size):
        raise ValueError("dimension mismatch")
    best = float(np.max(a / (b ** (1.0 - theta) * c ** theta)))
    n = a.size
    if n > 1:
        iu, ju = np.triu_indices(n, k=1)
        tau = np.linspace(0.0, 1.0, grid_points)[None, :]
        na = a[iu, None] * tau + a[ju, None] * (1.0 - tau)
        nb = b[iu, None] * tau + b[ju, None] * (1.0 - tau)
        nc = c[iu, None] * tau + c[ju, None] * (1.0 - tau)
        best = max(best, float(np.max(na / (nb ** (1.0 - theta) * nc ** theta))))
    return math.sqrt(best)


@dataclass(frozen=True)
class InnerTriple:
    """Inner spaces (X_0, X_1, X_theta) with the pointwise constant C in
    ||x||_theta <= C ||x||_0^{1-theta} ||x||_1^theta."""

    inner0: WeightedEuclideanInner
    inner1: WeightedEuclideanInner
    inner_theta: WeightedEuclideanInner
    theta: float
    holder_constant: float = field(default=0.0)

    def __post_init__(self):
        if self.holder_constant == 0.0:
            c = diagonal_holder_constant(self.inner0, self.inner1,
                                         self.inner_theta, self.theta)
            object.__setattr__(self, "holder_constant", c)

    @classmethod
    def geometric(cls, inner0: WeightedEuclideanInner,
                  inner1: WeightedEuclideanInner, theta: float) -> "InnerTriple":
        """The exact-interpolation triple: X_theta from the geometric mean
        of the weights, where the constant is exactly 1."""
        return cls(inner0, inner1, inner0.geometric_mix(inner1, theta), theta)


def mixed_derivative_check(f, params: MixedDerivativeParams, triple: InnerTriple,
                           sys: DyadicSystem, mesh: QuadratureMesh | None = None,
                           tol: float | None = None) -> dict:
    """Evaluate both sides of the mixed-derivative estimate on f.

    With shared weights the comparison is exact discrete Hoelder and the
    default tolerance is rounding-level; with distinct weights the three
    quadratures differ and the default widens to the quadrature scale.
    """
    if abs(float(params.theta) - triple.theta) > 1e-15:
        raise ValueError("triple and parameter set disagree on theta")
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    theta = float(params.theta)
    lhs = space_norm(f, params.target_spec(triple.inner_theta), sys, mesh=mesh)
    n0 = space_norm(f, params.source0_spec(triple.inner0), sys, mesh=mesh)
    n1 = space_norm(f, params.source1_spec(triple.inner1), sys, mesh=mesh)
    rhs = triple.holder_constant * n0 ** (1.0 - theta) * n1 ** theta
    if tol is None:
        tol = 1e-12 if params.shared_weights else 1e-6
    return {"lhs": lhs, "factor0": n0, "factor1": n1,
            "constant": triple.holder_constant, "rhs": rhs,
            "passed": lhs <= rhs * (1.0 + tol), "tol": tol}


# ---------------------------------------------------------------------
# divergence witness
# ---------------------------------------------------------------------


def _seq_norm(v: np.ndarray, r: float) -> float:
    if math.isinf(r):
        return float(np.max(v))
    return float(np.sum(v ** r) ** (1.0 / r))


def counterexample_norms(coefficients, u: float, q: float, s: float = 0.0,
                         t: float = 0.0, alpha: float = 1.0,
                         beta: float = 1.0) -> dict:
    """Target and source norms of a lacunary block sequence.

    Blocks sit at scale ratio R = 2^{alpha/beta}; both source norms share
    the weighted ell^q sum with weight 2^{(s + alpha + t alpha/beta) j},
    while the would-be target needs the same sum in ell^u.  The common
    profile factor is normalized to 1.  For u < q the ratio grows like
    N^{1/u - 1/q} in the number of active blocks, so no embedding into
    the ell^u side can hold; u >= q is rejected because nothing diverges
    there.
    """
    if not u >= 1:
        raise ValueError(f"need u >= 1, got {u}")
    if not u < q:
        raise ValueError(f"divergence needs u < q, got u={u}, q={q}")
    if alpha <= 0 or beta <= 0:
        raise ValueError("scale orders must be positive")
    a = np.abs(np.asarray(coefficients, dtype=complex))
    if a.ndim != 1 or a.size == 0 or not np.any(a > 0):
        raise ValueError("need a nonzero 1-d coefficient sequence")
    e = s + alpha + t * alpha / beta
    w = 2.0 ** (e * np.arange(1, a.size + 1))
    seq = w * a
    target = _seq_norm(seq, u)
    source = _seq_norm(seq, q)
    return {"target": target, "source": source, "ratio": target / source,
            "scale_ratio": 2.0 ** (alpha / beta), "weight_exponent": e,
            "n_terms": int(a.size)}


# ---------------------------------------------------------------------
# elementary comparisons on a fixed grid
# ---------------------------------------------------------------------


def q_monotonicity_check(f, kind: str, s: float, p: float, gamma: float,
                         q_values, sys: DyadicSystem,
                         mesh: QuadratureMesh | None = None) -> dict:
    """Norms against increasing q never increase; with shared nodes and
    weights this holds term by term, so the tolerance is rounding-level."""
    qs = sorted(float(q) for q in q_values)
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    norms = [space_norm(f, SpaceSpec(kind, s, p, q, gamma), sys, mesh=mesh)
             for q in qs]
    passed = all(norms[i + 1] <= norms[i] * (1.0 + 1e-12)
                 for i in range(len(norms) - 1))
    return {"q_values": qs, "norms": norms, "passed": passed}


def bf_sandwich_check(f, s: float, p: float, q: float, gamma: float,
                      sys: DyadicSystem, mesh: QuadratureMesh | None = None) -> dict:
    """B^s_{p, min(p,q)} >= F^s_{p,q} >= B^s_{p, max(p,q)} with constant 1:
    on shared nodes both steps are literal Minkowski/monotonicity, so the
    inequalities hold to rounding."""
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    fn = space_norm(f, SpaceSpec("F", s, p, q, gamma), sys, mesh=mesh)
    b_small = space_norm(f, SpaceSpec("B", s, p, min(p, q), gamma), sys, mesh=mesh)
    b_large = space_norm(f, SpaceSpec("B", s, p, max(p, q), gamma), sys, mesh=mesh)
    eps = 1e-12
    return {"f_norm": fn, "b_small_q": b_small, "b_large_q": b_large,
            "passed": fn <= b_small * (1 + eps) and b_large <= fn * (1 + eps)}


def h_sandwich_ratios(f, s: float, p: float, gamma: float, sys: DyadicSystem,
                      mesh: QuadratureMesh | None = None) -> dict:
    """Ratios placing the potential space between F^s_{p,1} and
    F^s_{p,inf}: ratio_in = H/F_1 and ratio_out = F_inf/H are the two
    embedding constants, tracked against pinned baselines."""
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    h = space_norm(f, SpaceSpec("H", s, p, gamma=gamma), mesh=mesh)
    f1 = space_norm(f, SpaceSpec("F", s, p, 1.0, gamma), sys, mesh=mesh)
    finf = space_norm(f, SpaceSpec("F", s, p, math.inf, gamma), sys, mesh=mesh)
    if h == 0.0:
        raise ValueError("zero function has no sandwich ratios")
    return {"h_norm": h, "f_q1": f1, "f_qinf": finf,
            "ratio_in": h / f1, "ratio_out": finf / h}


def w_sandwich_ratios(f, m: int, p: float, gamma: float, sys: DyadicSystem,
                      mesh: QuadratureMesh | None = None) -> dict:
    """Same two-sided comparison for the integer-derivative norm at s = m."""
    if mesh is None:
        mesh = QuadratureMesh.for_function(f)
    w = space_norm(f, SpaceSpec("W", float(m), p, gamma=gamma), mesh=mesh)
    f1 = space_norm(f, SpaceSpec("F", float(m), p, 1.0, gamma), sys, mesh=mesh)
    finf = space_norm(f, SpaceSpec("F", float(m), p, math.inf, gamma), sys, mesh=mesh)
    if w == 0.0:
        raise ValueError("zero function has no sandwich ratios")
    return {"w_norm": w, "f_q1": f1, "f_qinf": finf,
            "ratio_in": w / f1, "ratio_out": finf / w}
