"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""
import math
import random
import time

import numpy as np
import pytest

from homfly_photonic.braidval import (
    Chirality, ch_recursion_coeffs, eval_word, mat_pow, reconstruct_polynomial,
    two_strand_invariant,
)
from homfly_photonic.operators import (
    CHANNEL, IRREP, Mat2, build_S, build_Sbar, build_T, build_Tbar, build_Tnd, diag, make_params,
)
from homfly_photonic.photonics import NoiseModel, curve, measure_element, theory_abs
from homfly_photonic.ring import A, LaurentPoly2, Q, RadElem

POS, NEG = Chirality.POSITIVE, Chirality.NEGATIVE
TREFOIL_TERMS = {(0, 2): 1, (2, 4): -1, (-2, 4): -1}


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


@pytest.mark.criterion(1, "trefoil equals A^2 - A^4 q^2 - A^4 q^-2 term for term, < 1 s")
def test_c1_trefoil_exactness():
    with Timer() as t:
        inv = two_strand_invariant(3, POS, "exact").invariant
    assert isinstance(inv, LaurentPoly2)
    assert inv.terms == TREFOIL_TERMS
    assert t.elapsed < 1.0


@pytest.mark.criterion(2, "chirality flip = exponent negation (n=1,2,3,5); S T^3 S+ is the mirror, < 1 s")
def test_c2_mirror_consistency():
    with Timer() as t:
        for n in (1, 2, 3, 5):
            pos = two_strand_invariant(n, POS).invariant
            neg = two_strand_invariant(n, NEG).invariant
            assert neg == pos.mirror()
        word = eval_word("S T^3 Sd").invariant
        assert word.terms == LaurentPoly2(TREFOIL_TERMS).mirror().terms
    assert t.elapsed < 1.0


@pytest.mark.criterion(3, "S, T, Sbar, Tbar, Tnd unitary to 1e-12 for N=2,3,4, k+N<=200, < 5 s")
def test_c3_unitarity_sweep():
    builders = (build_S, build_T, build_Sbar, build_Tbar, build_Tnd)
    worst = 0.0
    count = 0
    with Timer() as t:
        for N in (2, 3, 4):
            for k in range(4 * (N + 1) - N, 200 - N + 1):
                p = make_params(N, k)
                for b in builders:
                    u = b(p).to_array()
                    worst = max(worst, float(np.max(np.abs(u @ u.conj().T - np.eye(2)))))
                    count += 1
    assert count == 5 * sum(200 - 4 * (N + 1) + 1 for N in (2, 3, 4))
    assert worst < 1e-12
    assert t.elapsed < 5.0


@pytest.mark.criterion(4, "exact S^2=I, Sbar^2=I, dressed S T S+ = Tnd, trace/det of Tnd, < 1 s")
def test_c4_structural_identities():
    one = RadElem.one()
    with Timer() as t:
        s, sd = build_S(), build_S(adjoint=True)
        # S^2 entrywise: relabel S onto a single basis so the square is defined
        s_sq = Mat2(s.entries, CHANNEL, CHANNEL)
        assert s_sq @ s_sq == diag(one, one, CHANNEL)
        assert s @ sd == diag(one, one, CHANNEL)
        assert sd @ s == diag(one, one, IRREP)
        sb = build_Sbar()
        assert sb @ sb == diag(one, one, CHANNEL)
        dress = diag(RadElem.scalar(A * A), one, CHANNEL)
        tnd = build_Tnd()
        assert dress @ s @ build_T() @ sd @ dress == tnd
        assert tnd.trace() == RadElem.scalar(-(A * (Q - Q ** -1)))
        assert tnd.det() == RadElem.scalar(-(A * A))
    assert t.elapsed < 1.0


@pytest.mark.criterion(5, "Cayley-Hamilton recursion exact for n = 1..10")
def test_c5_cayley_hamilton():
    tr, det = ch_recursion_coeffs()
    assert tr == -(A * (Q - Q ** -1)) and det == -(A * A)
    t = build_Tnd()
    x = [mat_pow(t, n)[0, 0] for n in range(1, 13)]
    for i in range(10):  # x[i] is n = i + 1
        assert x[i + 2] == RadElem.scalar(-(A * (Q - Q ** -1))) * x[i + 1] + RadElem.scalar(A * A) * x[i]


@pytest.mark.criterion(6, "exact vs numeric within 1e-10 at 100 random (N,k), n <= 7")
def test_c6_backend_agreement():
    rng = random.Random(6)
    exact = {n: two_strand_invariant(n).invariant for n in range(1, 8)}
    worst = 0.0
    for _ in range(100):
        N = rng.randint(2, 6)
        p = make_params(N, rng.randint(3 * N + 4, 500))
        for n in range(1, 8):
            num = two_strand_invariant(n, backend="numeric", params=p).invariant
            worst = max(worst, abs(exact[n].eval(p.q, p.A) - num))
    assert worst < 1e-10


@pytest.mark.criterion(7, "reconstruction equals exact backend for n = 1..7, residual < 1e-6")
def test_c7_reconstruction():
    for n in range(1, 8):
        rec = reconstruct_polynomial(n, POS, full_output=True)
        assert rec.residual < 1e-6
        assert rec.value == two_strand_invariant(n, POS).invariant


@pytest.mark.criterion(8, "zero-noise measurement curve exact to 1e-12 on k in [10,100]; spot values, < 5 s")
def test_c8_curve_reproduction():
    with Timer() as t:
        pts = curve(3, 2, 10, 100)
        assert max(abs(p.estimate_abs - p.theory_abs) for p in pts) < 1e-12
        by_k = {p.k: p.theory_abs for p in pts}
        assert abs(by_k[10] - 1) < 1e-12
        assert abs(by_k[14] - math.sqrt(2) / 2) < 1e-12
        far = make_params(2, 10 ** 5)
        assert abs(theory_abs(3, far) - 0.5) < 1e-3
        assert abs(measure_element(3, far).estimate_abs - 0.5) < 1e-3
    assert t.elapsed < 5.0


@pytest.mark.criterion(9, "noisy curve RMS < 0.02 on k in [10,60]; same seed byte-identical, < 10 s")
def test_c9_noise_robustness():
    noise = NoiseModel(sigma_theta=0.01, sigma_det=0.01, repeats=100, seed=20241014)
    with Timer() as t:
        a = curve(3, 2, 10, 60, noise=noise)
        b = curve(3, 2, 10, 60, noise=noise)
    rms = math.sqrt(np.mean([(p.estimate_abs - p.theory_abs) ** 2 for p in a]))
    assert rms < 0.02
    assert [tuple(map(float.hex, (p.theory_abs, p.p1_norm, p.estimate_abs, p.std_error))) for p in a] == \
           [tuple(map(float.hex, (p.theory_abs, p.p1_norm, p.estimate_abs, p.std_error))) for p in b]
    assert t.elapsed < 10.0
