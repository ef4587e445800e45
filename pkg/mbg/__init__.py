"""
mbg

This package constructs and counts Hamiltonian cycles in matroid basis
graphs.  It generates good 4-cycles for graphic, generalized Catalan and
uniform matroids, glues Hamiltonian cycles of minors along them, and
checks the resulting counts against closed-form lower bounds.

Users should import symbols directly from mbg sub-packages:

    $ from mbg.hamiltonian import *

Version: %s
"""

from mbg._version import __version__
__doc__ = __doc__ % __version__

__all__ = ('__version__')

import mbg.common
import mbg.matroid
import mbg.graphic
import mbg.latticepath
import mbg.uniform
import mbg.hamiltonian
import mbg.bounds
import mbg.harness

from mbg.common import Campaign
