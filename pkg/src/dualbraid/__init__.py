"""Finite reflection groups, their classical and dual braid monoids, and
machine checks of the combinatorics that connects them."""
from .braids import (classical_braid_relation_check, classical_monoid, cross_word_problem,
                     dual_monoid, t_lifts, verify_duality_table, verify_fact_a)
from .coxeter import (ChromaticPair, GroupContext, GroupElement, build_group,
                      element_arithmetic)
from .dual import (DivisibilityPoset, RankPolynomial, TFactorization, enumerate_pc,
                   fixed_space_poset_check, hurwitz_apply, hurwitz_orbits, join,
                   lattice_check, lt_poincare_polynomial_W, meet, rank_polynomial,
                   reduced_decompositions)
from .garside import (MixedForm, PreMonoidView, delta_conjugation, divisor_premonoid,
                      e_poset, group_mixed_form, is_normal, left_gcd, left_lcm,
                      normal_form, right_gcd, right_lcm, theta_antiautomorphisms,
                      verify_garside, word_problem_eq)
from .ncp import ncp_model_a, ncp_model_b, verify_ncp_isomorphism
from .types import TypeDescriptor, catalan_number, parse_type

__all__ = [name for name in dir() if not name.startswith("_")]
