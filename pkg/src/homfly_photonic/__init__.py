"""Two-strand HOMFLY-PT invariants from unitary 2x2 operators.

Exact evaluation over Laurent polynomials with formal square roots,
complex evaluation at ``q = exp(4 pi i/(k+N))``, ``A = q**N``, and an
emulated Mach-Zehnder measurement of the resulting matrix elements.
"""
from .braidval import (
    Chirality,
    EvalResult,
    Token,
    ch_recursion_coeffs,
    eval_word,
    framing_normalize,
    mat_pow,
    parse_word,
    reconstruct_polynomial,
    two_strand_invariant,
)
from .errors import *  # noqa: F401,F403
from .operators import (
    BasisLabel,
    CouplingParams,
    Mat2,
    build_S,
    build_Sbar,
    build_T,
    build_Tbar,
    build_Tnd,
    make_params,
)
from .photonics import (
    CurvePoint,
    MZISettings,
    NoiseModel,
    SimResult,
    curve,
    decompose_unitary,
    measure_element,
    simulate,
)
from .ring import DEFAULT_BASIS, LaurentPoly2, RadElem, RadicandBasis, RatFunc2

__version__ = "0.1.0"
