"""Presentations of bound quiver algebras and two-term silting / τ-tilting theory."""
from .algebra import AlgebraSpec, PathBasisAlgebra, Quiver, RelationSpec, build_algebra
from .field import Field
from .presentations import (Presentation, decompose, decorated_to_pres, direct_sum, e_dim,
                            e_space, end_algebra, g_vector, is_indecomposable, is_rigid,
                            iso_test, minimize, pres_to_decorated)
from .rep import (DecoratedRep, Representation, coker, fac_membership, hom_space,
                  injective_as_rep, min_presentation, projective_as_rep, projective_cover,
                  tau, tau_rigid_pair_check, top_and_radical)
from .silting import (ExchangeData, ExchangeGraph, SiltingObject, SupportTauTiltingPair,
                      complements, complete_to_silting, complete_to_tau_tilting, exchange_graph,
                      is_silting, maximality_oracle, mutate, pair_to_silting, silting_to_pair)

__version__ = "0.1.0"
