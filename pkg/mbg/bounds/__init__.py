"""
Exact evaluation of the lower bounds on Hamiltonian cycles and good
cycles in basis graphs.
"""
from .formulas import *
