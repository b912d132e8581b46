"""Exact linear relations, their excess and defect, and Wehrheim-Woodward categories."""
from .exactalg import (GF, QQ, FieldSpec, LinRelError, Subspace, annihilator, contains,
                       direct_sum, intersect, pivot_complement, rref, span, subspace_contains,
                       subspace_sum)
from .relcore import (IsoInvariants, LinearRelation, RelationChain, VectorSpaceObj, compose,
                      defect_pair, defect_seq, dual, excess_pair, excess_seq, identity,
                      iso_invariants, natural_factorization, st_factorization, tensor, transpose)
from .symplin import (SymplecticSpace, check_morphism, cotangent, iso_coiso_dual, opposite,
                      standard_space, symp_orthogonal)
from .wwcat import (Category, UnitEndo, WWMorphism, decompose_unit, unit_generators,
                    ww_compose, ww_embed, ww_from_chain, ww_tensor, ww_transpose, ww_two_term)

__version__ = "0.1.0"
