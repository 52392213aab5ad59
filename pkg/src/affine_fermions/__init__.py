"""Affine determinants, fermion-triple collapse, and affine Slater kernels."""

from .exterior import (
    antisymmetrize,
    compose,
    perm_sign,
    signed_permutations,
    tensor_product,
    wedge_scalar,
)
from .affine_forms import (
    MultiAffineForm,
    NullspaceResult,
    ProbeReport,
    affine_det,
    affine_det_form,
    antisymmetrize_generator,
    conjecture_nullspace,
    determinant_generator,
    is_affinely_dependent,
    laplace_expand,
    nondegeneracy_probe,
)
from .collapse import (
    BASIS_2D,
    ConsistencyError,
    EmbeddedTriple,
    ThetaBlocks,
    collapse,
    collapse_with_morphism,
    embed,
    lambda_tensor,
    rho,
    rho_trace_A,
    rho_trace_AC,
    theta,
    tr1,
)
from .symplectic import (
    LagrangianTriple,
    SignatureResult,
    kashiwara_index,
    kashiwara_q,
    lagrangian_triple_from_json,
    random_symplectic,
    standard_symplectic_matrix,
    symplectic_product,
)
from .slater import (
    CenteredWaveFunction,
    MeasuredSpace,
    center,
    centered_gram,
    component_means,
    gamma1,
    gamma2,
    gamma2_entry,
    gamma2_pair_expansion,
    one_point,
    order1_kernel,
    psi,
    reduce_centered,
    sample_psi_moments,
    symmetric_m_identity,
    two_point,
)
from .spin import PAULI, exchange_operator, s_squared_expectation, s_squared_matrix
from .verification import DEFAULT_SEED, DEFAULT_TOLERANCES, CheckRecord, Report, run_verify

__version__ = "0.1.0"
