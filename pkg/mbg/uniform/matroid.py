#
# Uniform matroids U_{r,n}
#
import itertools
import logging

from mbg.common.errors import BadParams, InvalidExchange, NotAnEdge
from mbg.matroid import BasisFamily, good_cycle_from_bases

__all__ = ['UniformMatroid', 'uniform_bases', 'good_cycles_uniform']

logger = logging.getLogger(__name__)


class UniformMatroid(object):
    """
    The uniform matroid U_{r,n}, whose bases are the r-subsets of 0..n-1.

    Raises
    ------
    BadParams
        Unless n > r >= 1.
    """

    def __init__(self, r, n):
        if not (isinstance(r, int) and isinstance(n, int) and n > r >= 1):
            raise BadParams("U_{r,n} needs integers n > r >= 1, not r=%s n=%s" % (str(r), str(n)))
        self.r = r
        self.n = n
        self._family = None

    @property
    def key(self):
        return ('uniform', self.r, self.n)

    def family(self):
        if self._family is None:
            self._family = uniform_bases(self)
        return self._family

    def __eq__(self, other):
        if not isinstance(other, UniformMatroid):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "UniformMatroid(r=%d, n=%d)" % (self.r, self.n)


def uniform_bases(matroid):
    """
    Returns the C(n,r) bases of U_{r,n} in lexicographic order.
    """
    if not isinstance(matroid, UniformMatroid):
        matroid = UniformMatroid(*matroid)
    return BasisFamily(itertools.combinations(range(matroid.n), matroid.r), ground=range(matroid.n))


def good_cycles_uniform(matroid, bg, b1, b2):
    """
    Good cycles of U_{r,n} for the edge b1b2, where B2 = B1-e+g.

    For every f in B1-e and every w outside B1+g there are three good
    cycles:

    * Type A: B4 = B1-f+w and B3 = B2-f+w
    * Type B: B4 = B1-f+g and B3 = B2-f+w
    * Type C: B4 = B1-f+w and B3 = B2-g+w

    Returns
    -------
    set
        3(n-r-1)(r-1) validated :class:`GoodCycle` objects.

    Raises
    ------
    InvalidExchange
        b1 and b2 are not adjacent.
    """
    try:
        e, g = bg.exchange(b1, b2)
    except NotAnEdge:
        raise InvalidExchange("Bases %d and %d do not differ by a single exchange" % (b1, b2)) from None
    B1 = bg.basis(b1)
    B2 = bg.basis(b2)
    outside = [w for w in range(matroid.n) if w not in B1 and w != g]
    cycles = set()
    for f in sorted(B1 - {e}):
        for w in outside:
            cycles.add(good_cycle_from_bases(bg, B1, B2, (B2 - {f}) | {w}, (B1 - {f}) | {w}))
            cycles.add(good_cycle_from_bases(bg, B1, B2, (B2 - {f}) | {w}, (B1 - {f}) | {g}))
            cycles.add(good_cycle_from_bases(bg, B1, B2, (B2 - {g}) | {w}, (B1 - {f}) | {w}))
    expected = 3*(matroid.n-matroid.r-1)*(matroid.r-1)
    assert (len(cycles) == expected), "Expected %d uniform good cycles, found %d" % (expected, len(cycles))
    logger.debug("U_{%d,%d} edge (%d,%d): %d good cycles", matroid.r, matroid.n, b1, b2, len(cycles))
    return cycles
