"""
Family-agnostic matroid machinery: basis families, basis graphs, good
cycles and the gluing step.
"""
from .basis import (BasisFamily, basis_axiom_violation, check_basis_axiom, split_by_element,
                    family_to_json, family_from_json)
from .graph import (BasisGraph, build_basis_graph, cycle_edge, cycle_from_vertices,
                    cycle_to_vertices, is_hamiltonian_cycle, induced_minor_map, minor_vertex_map)
from .cycles import (GoodCycle, make_good_cycle, good_cycle_from_bases, good_cycles_bruteforce,
                     glue_hamiltonian)
