"""Exact computational kernel for two-parameter affine quantum algebras.

Everything is computed over the exact rational-function field Q(r, s, a, b)
with lattice exponents; there is no floating point anywhere.  The compiled
polynomial kernel is used when present, with a pure-Python fallback.
"""

from ._kernel import BACKEND as _KERNEL_BACKEND
from .cartan import AffineType, PairingTable, build_pairing, pairing, parse_type, weight_pairing
from .field import (
    LATTICE,
    A,
    B,
    ONE,
    R,
    S,
    ZERO,
    LaurentMono,
    RatFunc,
    gauss_binom,
    parse,
    quantum_factorial,
    quantum_int,
    render,
)
from .series import TruncSeries
from .matrix import Matrix
from .rep_core import (
    MatrixModule,
    RelationReport,
    all_pass,
    apply_word,
    check_chevalley,
    check_drinfeld,
)
from .sl2 import (
    EvalModule,
    build_chevalley_eval,
    build_current_eval,
    build_Vn,
    omega_matrices,
    recover_imaginary,
)
from .drinfeld import (
    DrinfeldPoly,
    HwSeries,
    closed_form_P,
    extract_hw_series,
    reconstruct_P,
    verify_RQ_form,
    weight_gamma_series,
)
from .hopf import TensorModule, span_closure, tensor, twist
from .specialize import SpecMap, specialize_module, specialize_table


def kernel_backend() -> str:
    """'cython' when the compiled kernel is active, else 'python'."""
    return _KERNEL_BACKEND


__version__ = "0.1.0"
