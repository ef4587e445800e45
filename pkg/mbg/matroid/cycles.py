#
# Good cycles and the gluing step of the recursive construction
#
import dataclasses
import logging

from mbg.common.errors import EdgeNotOnCycle, GlueNotHamiltonian, InvalidGoodCycle, NotAnEdge
from mbg.matroid.graph import cycle_edge, is_hamiltonian_cycle

__all__ = ['GoodCycle', 'make_good_cycle', 'good_cycle_from_bases',
           'good_cycles_bruteforce', 'glue_hamiltonian']

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class GoodCycle:
    """
    A 4-cycle b1 b2 b3 b4 of a basis graph where B2 = B1-e+g, the bases
    B1 and B4 contain e, and B2 and B3 do not.  The second exchange is
    B4 = B1-f+w.

    Two good cycles are equal when they have the same vertex set and the
    same distinguished edge b1b2; the membership of e then fixes which
    of the other two vertices is b3.
    """

    b1: int
    b2: int
    b3: int
    b4: int
    e: int
    g: int
    f: int
    w: int

    @property
    def key(self):
        return (frozenset((self.b1, self.b2, self.b3, self.b4)), frozenset((self.b1, self.b2)))

    def __eq__(self, other):
        if not isinstance(other, GoodCycle):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def vertices(self):
        return (self.b1, self.b2, self.b3, self.b4)

    def edges(self):
        """The four edges of the cycle in canonical form"""
        return frozenset((cycle_edge(self.b1, self.b2), cycle_edge(self.b2, self.b3),
                          cycle_edge(self.b3, self.b4), cycle_edge(self.b4, self.b1)))

    def sort_key(self):
        return (self.b1, self.b2, self.b3, self.b4)


def make_good_cycle(bg, b1, b2, b3, b4):
    """
    Validate four vertices of a basis graph as a good cycle for the
    edge b1b2 and annotate it with its exchange elements.

    Raises
    ------
    InvalidGoodCycle
        The vertices are not distinct, some consecutive pair is not
        adjacent, or the membership pattern of e is wrong.
    """
    if len(set((b1, b2, b3, b4))) != 4:
        raise InvalidGoodCycle("Good cycle vertices are not distinct: %s" % str((b1, b2, b3, b4)))
    for u, v in ((b1, b2), (b2, b3), (b3, b4), (b4, b1)):
        if not bg.has_edge(u, v):
            raise InvalidGoodCycle("Vertices %d and %d of a candidate good cycle are not adjacent" % (u, v))
    e, g = bg.exchange(b1, b2)
    B3 = bg.basis(b3)
    B4 = bg.basis(b4)
    if e not in B4 or e in B3:
        raise InvalidGoodCycle("Element %d does not have the good-cycle membership pattern" % e)
    f, w = bg.exchange(b1, b4)
    return GoodCycle(b1, b2, b3, b4, e, g, f, w)


def good_cycle_from_bases(bg, B1, B2, B3, B4):
    """
    Same as :func:`make_good_cycle`, but the cycle is given by its bases.

    Family-specific templates produce candidate bases by set
    arithmetic; this function rejects any candidate that is not a basis
    or does not close a good cycle.
    """
    try:
        vertices = [bg.index(B) for B in (B1, B2, B3, B4)]
    except KeyError:
        e = "Template produced a set that is not a basis: %s" % str([sorted(B) for B in (B1, B2, B3, B4)])
        logger.error(e)
        raise InvalidGoodCycle(e) from None
    return make_good_cycle(bg, *vertices)


def good_cycles_bruteforce(bg, b1, b2):
    """
    Enumerate every good cycle for the edge b1b2 from the definition.

    Parameters
    ----------
    bg: BasisGraph
    b1, b2: int
        Adjacent vertices; e is the element of B1 missing from B2.

    Returns
    -------
    set
        The good cycles, each a :class:`GoodCycle`.

    Raises
    ------
    NotAnEdge
    """
    e, g = bg.exchange(b1, b2)
    B1 = bg.basis(b1)
    fours = [v for v in bg.neighbors(b1) if v != b2 and e in bg.basis(v)]
    threes = [v for v in bg.neighbors(b2) if v != b1 and e not in bg.basis(v)]
    cycles = set()
    for b4 in fours:
        B4 = bg.basis(b4)
        f, = B1 - B4
        w, = B4 - B1
        for b3 in threes:
            if bg.has_edge(b3, b4):
                cycles.add(GoodCycle(b1, b2, b3, b4, e, g, f, w))
    return cycles


def _side_is_edge(bg, e, member, u, v):
    side = bg.side(e, member=member)
    return len(side) == 2 and set(side) == {u, v}


def glue_hamiltonian(bg, hc_x, good, hc_y=None, validate=True):
    """
    Glue Hamiltonian cycles of the two sides of a split along a good cycle.

    The result is the symmetric difference hc_x + good + hc_y of edge
    sets.

    Parameters
    ----------
    bg: BasisGraph
        The basis graph of M, with both sides expressed in its vertex
        indices.
    hc_x: frozenset or None
        A Hamiltonian cycle on the vertices containing e, through the
        edge b1b4.  None is allowed only when that side is the single
        edge b1b4.
    good: GoodCycle
    hc_y: frozenset or None
        A Hamiltonian cycle on the vertices avoiding e, through the edge
        b2b3.  None is allowed only when that side is the single edge
        b2b3.
    validate: bool
        If True, the result is checked to be a Hamiltonian cycle of bg.

    Returns
    -------
    frozenset
        A Hamiltonian cycle of bg containing the edge b1b2.

    Raises
    ------
    EdgeNotOnCycle
    GlueNotHamiltonian
    """
    e14 = cycle_edge(good.b1, good.b4)
    e23 = cycle_edge(good.b2, good.b3)
    if hc_x is None:
        if not _side_is_edge(bg, good.e, True, good.b1, good.b4):
            raise EdgeNotOnCycle("The contract side is not the single edge %s" % str(e14))
        hc_x = frozenset()
    elif e14 not in hc_x:
        raise EdgeNotOnCycle("Edge %s is not on the contract-side cycle" % str(e14))
    if hc_y is None:
        if not _side_is_edge(bg, good.e, False, good.b2, good.b3):
            raise EdgeNotOnCycle("The delete side is not the single edge %s" % str(e23))
        hc_y = frozenset()
    elif e23 not in hc_y:
        raise EdgeNotOnCycle("Edge %s is not on the delete-side cycle" % str(e23))
    result = hc_x ^ good.edges() ^ hc_y
    if validate:
        if cycle_edge(good.b1, good.b2) not in result or not is_hamiltonian_cycle(bg, result):
            e = "Gluing along the good cycle %s did not produce a Hamiltonian cycle" % str(good.vertices())
            logger.error(e)
            raise GlueNotHamiltonian(e)
    return result
