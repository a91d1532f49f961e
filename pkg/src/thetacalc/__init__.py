"""Exact Giambelli/Pieri calculus through raising operators.

Three graded rings with distinguished bases indexed by partitions:

- typea:  Z[u_1, u_2, ...] with the basis U_lam (Schur functions);
- hl:     Z[t][v_1, v_2, ...] with the basis V_lam (Hall-Littlewood Q);
- typec:  B^(k) = Z[w_1, w_2, ...]/I^(k) with the basis W_lam indexed by
          k-strict partitions (theta polynomials / Schur Q at k = 0);

plus their polynomial realisations (theta), the skew tableau functions
F^(k)_{lam/mu}, and the hyperoctahedral side (hyper): signed permutations,
nilCoxeter algebra, Stanley symmetric functions and Billey-Haiman Schubert
polynomials.
"""

from .coeffs import TPoly
from .mpoly import MPoly, series_coefficients
from .partitions import (
    cset,
    dominates,
    outside_rim,
    parse_pair_set,
    parse_parts,
    partition_from_pair_set,
)
from .raising import (
    Element,
    FactorSpec,
    change_basis,
    expand_raising,
    multiply_monomial,
    pfaffian,
)
from .strips import (
    is_k_horizontal_strip,
    n_strip,
    n_strip_oracle,
    pieri_targets,
    strip_type,
)
from .tableaux import (
    count_standard_k_tableaux,
    k_bitableaux,
    k_tableaux,
)
from .typea import giambelli_u, jacobi_trudi, mirror_u, pieri_u, toprow_recursion_u
from .hl import giambelli_v, hl_function, mirror_v, phi, pieri_v, psi, realize
from .typec import (
    DIndexed,
    check_tame,
    giambelli_w,
    giambelli_w_dset,
    mirror_w,
    mitosis,
    pfaffian_w,
    pieri_w,
    straighten,
    to_W_basis,
    toprow_recursion_w,
)
from .thetas import (
    master_identities,
    q_expansion,
    schur_q,
    schur_s,
    skew_f,
    skew_schur_q,
    theta,
)
from .hyper import (
    compatible_pair,
    grassmannian_element,
    group_ops,
    is_skew,
    partition_of,
    reduced_words,
    schubert_bh,
    stanley_a,
    stanley_c,
    unimodal_factorizations,
)

__version__ = "0.1.0"
