# armaident/structmat/__init__.py

from .matrices import (
    shift_matrix,
    exchange_matrix,
    basis_vector,
    u_vector,
    u_phi_matrix,
    t_phi_matrix,
    s_matrix,
    s_hat_matrix,
    s_tilde_hat,
    psp_matrix,
    sylvester,
    determinant,
    resultant_det,
    resultant_det_from_roots,
    lu_singular,
    numerical_rank,
    m_matrix,
    n_matrix,
)
