"""Finite-scale toolkit for the duality theory of bounded lattices:
dual graphs of maximal partial homomorphisms, TiRS graphs and frames, the
rho/gr correspondence, Galois-closed-set lattices, canonical extensions
built two independent ways, and the PTi condition."""

from .lattice import (CheckReport, FiniteLattice, LatticeEmbedding, Witness,
                      build_lattice, check_compact, check_dense,
                      filters_ideals, irreducibles, is_distributive,
                      lattice_from_leq, lattice_iso)
from .ploscica import MaximalPair, dual_graph, maximal_pairs, mph_leq
from .structures import (ConditionReport, Frame, Graph, check_frame,
                         check_graph, is_poset_graph)
from .functors import (FrameMorphism, GraphMorphism, alpha, beta,
                       check_naturality, frame_iso, gr, gr_mor, graph_iso,
                       h_set, rho, rho_mor, validate_frame_morphism,
                       validate_graph_morphism)
from .galois import (GaloisLattice, canext_polarity, canext_tandem,
                     check_perfect, closed_sets, closure, frame_of_perfect,
                     galois_down, galois_up, irreducibles_of_galois,
                     jinfty_via_maximal_pairs)
from .pti import (PTiWitness, check_pti, check_pti_frame_form,
                  pti_bridge_suite)
from .generators import GenSpec, generate

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
