#
# Exceptions raised by mbg
#

__all__ = ['MBGError', 'InvalidBasisFamily', 'LoopOrIsthmus', 'NotAnEdge',
           'EdgeNotOnCycle', 'GlueNotHamiltonian', 'InvalidGoodCycle',
           'Disconnected', 'ChordInTree', 'NotTreeEdge', 'InvalidExchange',
           'NoSuchEdge', 'PAboveQ', 'BadParams', 'TooSmall', 'NoGoodCycle',
           'ScaleExceeded', 'CountMismatch', 'TooFewGoodCycles']


class MBGError(RuntimeError):
    """
    The base class for errors raised by mbg.
    """
    pass


class InvalidBasisFamily(MBGError):
    """A basis family is empty, has mixed cardinalities, or repeats a basis"""


class LoopOrIsthmus(MBGError):
    """The element lies in no basis (loop) or in every basis (isthmus)"""


class NotAnEdge(MBGError):
    """Two vertices of a basis graph are not adjacent"""


class EdgeNotOnCycle(MBGError):
    """A cycle passed to the gluing step misses the edge it must contain"""


class GlueNotHamiltonian(MBGError):
    """The symmetric difference of a gluing step is not a Hamiltonian cycle"""


class InvalidGoodCycle(MBGError):
    """Four bases do not form a good cycle for the given edge"""


class Disconnected(MBGError):
    """The multigraph is not connected"""


class ChordInTree(MBGError):
    """The chord of a fundamental cycle is an edge of the tree"""


class NotTreeEdge(MBGError):
    """An edge expected in a spanning tree is not there"""


class InvalidExchange(MBGError):
    """Two bases are not related by the exchange a construction requires"""


class NoSuchEdge(MBGError):
    """The edge id does not exist in the multigraph"""


class PAboveQ(MBGError):
    """The lower bounding path goes above the upper bounding path"""


class BadParams(MBGError, ValueError):
    """Parameters outside the hypothesis of a construction or formula"""


class TooSmall(MBGError):
    """The basis graph has fewer than three vertices"""


class NoGoodCycle(MBGError):
    """An edge lies on no good cycle and no base case applies"""


class ScaleExceeded(MBGError):
    """An instance is larger than the documented desk-scale limits"""

    def __init__(self, msg, instance=None):
        super().__init__(msg)
        self.instance = instance


class CountMismatch(MBGError):
    """An enumeration disagrees with an independent count of the same objects"""


class TooFewGoodCycles(MBGError):
    """A good-cycle template produced fewer cycles than it guarantees"""
