"""Zero-sum subspaces of GF(2^n): construction, search and certification.

A subspace E of GF(2^n) over GF(2) is zero-sum when the inverses of its
nonzero elements add up to 0.
"""

from .bitlinalg import (BitMatrix, Subspace, enumerate_k_subspaces, gaussian_binomial,
                        reduce, solve_linear, subspace_elements, subspace_from_vectors)
from .census import (CensusReport, CurveCount, affine_sample_check, census_run,
                     curve_point_count)
from .construct import (SearchBudget, VerificationReport, ZeroSumCertificate,
                        build_zero_sum, complete_to_zero_sum, extend_non_zero_sum,
                        lift_chain, lift_one, span_dim_over_subfield, verify_certificate)
from .gf2n import (FieldElement, FieldSpec, fe_add, fe_frob, fe_inv, fe_mul,
                   find_irreducible, subfield_subspace)
from .moore import (delta, delta_i, direct_inverse_sum, eval_Fk, is_zero_sum,
                    linearized_delta1_map)
from .unipoly import find_roots, p_divmod, p_gcd, p_mul

__version__ = "0.1.0"
