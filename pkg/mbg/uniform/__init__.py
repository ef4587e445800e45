"""
Uniform matroids and their good-cycle templates.
"""
from .matroid import UniformMatroid, uniform_bases, good_cycles_uniform
