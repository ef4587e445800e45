"""
Lattice path matroids, generalized Catalan matroids and their good-cycle
templates.
"""
from .words import check_word, word_to_set, set_to_word, swap_steps, reverse_word
from .matroid import (LatticePathMatroid, GenCatalan, standard_presentation, enumerate_bases_paths,
                      transversal_bases, catalan_matroid, uniform_path_matroid, delete_element,
                      contract_element, dualize, dual_basis, generalized_catalan, loop_free_core,
                      catalan_minor_order)
from .goodcycles import good_cycles_catalan, good_cycles_gencat_min, orient_edge
