"""
Hamiltonian cycles of basis graphs: exact counting, closed-form
constructions, and the recursive witness generator.
"""
from .count import HcCount, enumerate_hc_through_edge, count_hc_through_edge, hc_star, hc_total
from .constructions import witnesses_complete, witnesses_prism, prism_labels, detect_complete, detect_prism
from .witness import WitnessSet, validate_witness_set, witness_set_to_json, witness_set_from_json
from .handles import MatroidHandle, GraphicHandle, CatalanHandle, UniformHandle, FamilyHandle
from .recursive import WitnessGenerator, witnesses_recursive
