"""Exact computational Lie theory for horospherical subalgebra invariants.

Root systems and their theta-gradings (`rootsys`), split classical
algebras over the rationals (`splitlie`), exact adjoint group elements
(`adjointgrp`), the relative invariants of depth-1 and Heisenberg
gradings (`invariants`), desk-scale discreteness witnesses (`lab`), and
the registered verification checks behind the CLI (`checks`).
"""

from . import adjointgrp, catalog, checks, invariants, lab, linalg, rootsys, splitlie
from .adjointgrp import (GroupElement, exp_ad, opposite_cell_factor,
                         torus_element, w0_representative, weyl_representative)
from .invariants import (InvariantContext, center_block, center_det, context,
                         duality_form, duality_gram, heisenberg_expansion,
                         invariant_gradient, levi_character, make_context,
                         pairing_invariant, relative_invariant,
                         sl2_triple_center, sl2_triple_commutative)
from .linalg import Q
from .rootsys import (CartanMatrix, Root, RootSystem, cartan_matrix,
                      classify_reflexive_commutative, generate_roots, grading,
                      heisenberg_theta, highest_root, is_heisenberg,
                      is_reflexive, longest_element, n_theta,
                      reduction_step_theta, root_system, theta_zero_reduction)
from .splitlie import (AlgElement, SplitLieAlgebra, ad_matrix, bracket,
                       build_algebra, graded_decomposition, h_theta_element,
                       killing, verify_structure)

__version__ = "0.1.0"
