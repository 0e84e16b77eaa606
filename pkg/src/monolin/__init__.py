"""Linearization, equification and Betti numbers of monomial ideals."""

__version__ = "0.1.0"

from .errors import (ArgumentError, ContextError, DivisibilityError, DomainError, MonolinError,
                     ParseError, ResourceError)
from .monomial import Monomial, RingContext, lex_compare, parse_monomial, render_monomial
from .ideal import (ExponentBound, MonomialIdeal, alexander_dual, colon_by_monomial, crop, intersection,
                    is_equigenerated, is_squarefree, max_exponent_vector, membership, minimalize,
                    power_complete, product, radical, ideal_sum)
from .table import BettiTable
from .quotients import (OrderedGenerators, betti_from_quotients, colon_sequence,
                        find_linear_quotient_order, has_linear_quotients)
from .linearization import (Linearized, canonical_order, is_polymatroidal, lin, radical_star_lin,
                            radical_star_lin_betti, retrieve_source, star_lin, sum_compatibility_check)
from .squarefree import (betti_closed_form, cluster_profile, complete_part_rk_histogram, pd_and_depth,
                         veronese_betti)
from .equification import (deequify, equify, lattice_embedding_check, lcm_lattice, lin_general,
                           lin_general_z1, rooted_complex, syzygy_redundant, syzygy_redundant_eq)
from .lattice import LcmLattice
from .oracle import betti_splitting_check, is_linear_resolution, oracle_betti, oracle_table
from .hypergraph import Hypergraph, Verdict, edge_ideal, from_ideal, linear_resolution_criterion
