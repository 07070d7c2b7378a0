"""Mach-Zehnder emulation of the matrix-element measurement.

Transfer model: ``M(theta) = BS @ diag(exp(i theta), 1) @ BS`` with
balanced beamsplitters ``BS = [[1, i], [i, 1]] / sqrt(2)``, so
``|M[0, 0]| = |sin(theta/2)|``.  Light enters port X (row/column 0);
detector D1 reads row 0.  External phases never reach the detectors and
are not modelled.

Noise is a Gaussian phase-setting error plus a relative Gaussian error on
each detector reading.  Random streams are keyed by ``(seed, k, repeat)``
so a curve is bit-identical however its points are scheduled.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .braidval import Chirality, mat_pow
from .errors import AllZeroPower, DomainTooSmall, InvalidRange, NotUnitary
from .operators import CouplingParams, Mat2, build_Tnd, make_params

__all__ = [
    "MZISettings",
    "NoiseModel",
    "SimResult",
    "CurvePoint",
    "BEAMSPLITTER",
    "mzi_transfer",
    "decompose_unitary",
    "simulate",
    "measure_element",
    "theory_abs",
    "curve",
]

BEAMSPLITTER = np.array([[1, 1j], [1j, 1]]) / np.sqrt(2)
MAX_RESAMPLE = 100


@dataclass(frozen=True)
class MZISettings:
    theta: float
    input_port: str = "X"

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta} outside [0, pi]")
        if self.input_port != "X":
            raise ValueError("only input port X is wired to the laser")


@dataclass(frozen=True)
class NoiseModel:
    sigma_theta: float = 0.0
    sigma_det: float = 0.0
    repeats: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.sigma_theta < 0 or self.sigma_det < 0:
            raise ValueError("noise widths must be nonnegative")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")

    @property
    def is_noiseless(self) -> bool:
        return self.sigma_theta == 0 and self.sigma_det == 0


@dataclass(frozen=True)
class SimResult:
    """Detector statistics over the repeats.

    ``std_error`` is the standard error of the mean of ``p1_norm``
    (sample std with ddof=1 over sqrt(repeats), 0 for a single repeat).
    """

    p1_norm: float
    p2_norm: float
    estimate_abs: float
    std_error: float


@dataclass(frozen=True)
class CurvePoint:
    k: int
    theory_abs: float
    p1_norm: float
    estimate_abs: float
    std_error: float


def mzi_transfer(theta: float) -> np.ndarray:
    return BEAMSPLITTER @ np.diag([np.exp(1j * theta), 1.0]) @ BEAMSPLITTER


def _as_array(U: Union[Mat2, np.ndarray]) -> np.ndarray:
    if isinstance(U, Mat2):
        return U.to_array()
    return np.asarray(U, dtype=complex)


def decompose_unitary(U: Union[Mat2, np.ndarray], atol: float = 1e-10) -> MZISettings:
    """Internal phase that reproduces ``|U[0, 0]|`` at detector D1."""
    u = _as_array(U)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    err = np.max(np.abs(u @ u.conj().T - np.eye(2)))
    if err > atol:
        raise NotUnitary(f"|U U^+ - I|_max = {err:.3g}")
    return MZISettings(theta=2.0 * math.asin(min(1.0, abs(u[0, 0]))))


def _rng(seed: int, key: tuple) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def _readings(theta, noise: NoiseModel, rng, size):
    th = theta + noise.sigma_theta * rng.standard_normal(size)
    p1 = np.sin(th / 2) ** 2
    p2 = np.cos(th / 2) ** 2
    eta = noise.sigma_det * rng.standard_normal((2, size))
    d1 = np.maximum(0.0, p1 * (1 + eta[0]))
    d2 = np.maximum(0.0, p2 * (1 + eta[1]))
    return d1, d2


def simulate(settings: MZISettings, noise: NoiseModel = NoiseModel(), key: tuple = ()) -> SimResult:
    """Sample the two detectors ``noise.repeats`` times and normalize.

    ``key`` selects the random stream (``measure_element`` passes ``(k,)``).
    A repeat in which both detectors read zero is redrawn from its own
    stream ``key + (repeat, attempt)``; after 100 failed attempts
    :class:`AllZeroPower` is raised.
    """
    key = tuple(int(x) for x in key)
    if noise.is_noiseless:
        p1 = math.sin(settings.theta / 2) ** 2
        p2 = math.cos(settings.theta / 2) ** 2
        return SimResult(p1, p2, math.sqrt(p1), 0.0)
    d1, d2 = _readings(settings.theta, noise, _rng(noise.seed, key), noise.repeats)
    for r in np.nonzero(d1 + d2 <= 0)[0]:
        for attempt in range(MAX_RESAMPLE):
            x1, x2 = _readings(settings.theta, noise, _rng(noise.seed, key + (int(r), attempt)), 1)
            if x1[0] + x2[0] > 0:
                d1[r], d2[r] = x1[0], x2[0]
                break
        else:
            raise AllZeroPower(f"repeat {r}: both detectors dark after {MAX_RESAMPLE} draws")
    total = d1 + d2
    p1 = d1 / total
    p2 = d2 / total
    m1 = float(p1.mean())
    se = float(p1.std(ddof=1) / math.sqrt(p1.size)) if p1.size > 1 else 0.0
    return SimResult(m1, float(p2.mean()), math.sqrt(m1), se)


def _crossing_power(n: int, params: CouplingParams, chirality) -> Mat2:
    chirality = Chirality(chirality)
    return mat_pow(build_Tnd(params, adjoint=chirality is Chirality.NEGATIVE), n)


def measure_element(n: int, params: CouplingParams, chirality=Chirality.POSITIVE,
                    noise: NoiseModel = NoiseModel()) -> SimResult:
    """Emulated measurement of ``|(Tnd**n)[0, 0]|`` at one (N, k) point."""
    u = _crossing_power(n, params, chirality)
    return simulate(decompose_unitary(u), noise, key=(params.k,))


def theory_abs(n: int, params: CouplingParams, chirality=Chirality.POSITIVE) -> float:
    """``|(Tnd**n)[0, 0]|`` via a plain floating-point matrix power."""
    chirality = Chirality(chirality)
    m = build_Tnd(params, adjoint=chirality is Chirality.NEGATIVE).to_array()
    return float(abs(np.linalg.matrix_power(m, n)[0, 0]))


def _point(n, N, k, chirality, noise) -> CurvePoint:
    params = make_params(N, k)
    res = measure_element(n, params, chirality, noise)
    return CurvePoint(k, theory_abs(n, params, chirality), res.p1_norm,
                      res.estimate_abs, res.std_error)


def curve(n: int, N: int, k_min: int, k_max: int, chirality=Chirality.POSITIVE,
          noise: NoiseModel = NoiseModel(), workers: Optional[int] = None) -> list[CurvePoint]:
    """Theory and emulated estimate of ``|(Tnd**n)[0, 0]|`` for each integer k.

    ``workers > 1`` evaluates points on a thread pool; output order and
    values do not depend on it.
    """
    if k_min < 3 * N + 4:
        raise DomainTooSmall(f"k_min={k_min} < 3N+4={3 * N + 4}")
    if k_max < k_min:
        raise InvalidRange(f"k_max={k_max} < k_min={k_min}")
    ks = range(k_min, k_max + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda k: _point(n, N, k, chirality, noise), ks))
    return [_point(n, N, k, chirality, noise) for k in ks]
