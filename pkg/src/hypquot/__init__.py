"""
Exact computations for hyperelliptic curves y^2 = c*f(x) over finite fields
of odd characteristic carrying a group of affine automorphisms: closed-form
quotient curves, the H^1 character as a virtual representation, descent of
twisted Frobenius morphisms to the quotient, and characteristic polynomials
of Frobenius recovered from exact fixed-point counts.
"""

from .ff import (FiniteField, FieldElement, Poly, make_field, embed,
                 roots_in, splitting_degree)
from .curve import (HyperellipticCurve, CurvePoint, genus, points_over,
                    count_points_over, on_curve, infinity_points)
from .group import (AffineAutomorphism, AutoGroup, validate_auto, closure,
                    structure, orbits_on_roots, infinity_action,
                    fixed_points_of_auto, cyclic_subgroups, all_subgroups,
                    apply_auto)
from .quotient import (QuotientResult, invariant_I, invariant_IT,
                       quotient_curve, push_point, quotient_genus)
from .repn import (Cyclotomic, ClassFunction, perm_character, gamma_tilde,
                   alpha_tilde, h1_character, epsilon_character,
                   dim_invariants, verify_h1, abelian_decomposition)
from .frob import (FrobMorphism, CharPoly, validate_frob, normalizes,
                   descend, count_fixed, charpoly_h1, isotypic_split,
                   tame_conductor_exponent, euler_factor_string)

__version__ = "0.1.0"
