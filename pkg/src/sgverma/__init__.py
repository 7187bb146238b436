"""Exact computations in U(sl_n) and its scalar generalized Verma modules."""
from .errors import (CapacityError, DependencyError, InvalidInputError, InvariantViolation,
                     NotInParabolicError, TruncationError, VermaError)
from .exactla import TruncatedSubspace, intersect, kernel, rref, subspace_sum
from .ideals import (IdealTruncation, ann_ideal_trunc, ann_via_generators, char_ideal_trunc,
                     equality_report, i_v_trunc, rho_u_kernel_check)
from .pbw import (EnvelopingAlgebra, PBWMonomial, UEAElement, enumerate_pbw, filtration_degree,
                  fundamental_matrix, multiply, straighten)
from .quotient import (QuotientTruncation, classify, maximal_submodule_trunc,
                       shapovalov_radical_weightspace, submodule_membership_weightspace,
                       weyl_dimension)
from .rootdata import (ChevalleyElement, ParabolicCharacter, RootDatum, Weight, bracket,
                       build_root_datum, complement_roots, delta_weight, eval_character,
                       m_alpha, m_of_lambda, weight_of_monomial)
from .verma import (ModuleVector, TruncatedModule, act, build_module, classical_verma,
                    project_from_classical, weight_spaces)

__version__ = "0.1.0"
