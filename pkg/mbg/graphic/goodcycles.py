#
# Good cycles of graphic matroids
#
import enum
import logging

import networkx as nx

from mbg.common.errors import InvalidExchange, NotAnEdge
from mbg.matroid import good_cycle_from_bases
from mbg.graphic import generators
from mbg.graphic.trees import fundamental_cycle, xyz_partition

__all__ = ['Exceptional', 'good_cycles_at', 'good_cycles_graphic', 'recognize_exceptional',
           'fact_shape']

logger = logging.getLogger(__name__)


class Exceptional(enum.Enum):
    """
    The 2-edge-connected graphs whose basis graphs have an edge on fewer
    than two good cycles.
    """

    neither = 0
    """Every basis-graph edge is on at least two good cycles"""

    cycle = 1
    """The cycle C_n; its basis graph is K_n"""

    two_sum = 2
    """The 1-sum of C_2 and C_{n-1}; its basis graph is K_2 x K_{n-1}"""


def _exchange(bg, b1, b2):
    try:
        return bg.exchange(b1, b2)
    except NotAnEdge:
        raise InvalidExchange("Bases %d and %d do not differ by a single exchange" % (b1, b2)) from None


def _templates(g, B1, B2, e, gch, f):
    #
    # Yields (B4, B3) pairs for the good cycles in C_e(f)
    #
    cycle = fundamental_cycle(g, B1, gch).cycle_edges
    part = xyz_partition(g, B1, e, f)
    X, Y, Z = part.x_set, part.y_set, part.z_set
    if f not in cycle:
        for w in sorted(g.edges_between(X | Y, Z) - {f}):
            yield (B1 - {f}) | {w}, (B2 - {f}) | {w}
        return
    for l in sorted(g.edges_between(Y, Z) - {f}):
        yield (B1 - {f}) | {l}, (B2 - {f}) | {l}
        yield (B1 - {f}) | {gch}, (B2 - {f}) | {l}
    for h in sorted(g.edges_between(X, Y) - {e}):
        yield (B1 - {f}) | {gch}, (B2 - {f}) | {h}
    for j in sorted(g.edges_between(X, Z) - {gch}):
        yield (B1 - {f}) | {j}, (B2 - {gch}) | {j}


def good_cycles_at(g, bg, b1, b2, f):
    """
    The good cycles of C_e(f): those for the edge b1b2 whose fourth
    vertex B4 = B1-f+w drops the tree edge f.

    When f is not on the fundamental cycle C(g,B1), there is one cycle
    for each edge w from X+Y to Z other than f.  Otherwise there are two
    cycles for each edge from Y to Z other than f, one for each edge
    from X to Y other than e, and one for each edge from X to Z other
    than g.

    Parameters
    ----------
    g: Multigraph
    bg: BasisGraph
        The basis graph of the graphic matroid of g.
    b1, b2: int
        Adjacent vertices of bg with B2 = B1-e+g.
    f: int
        An edge of B1 other than e.

    Returns
    -------
    set
        Validated :class:`GoodCycle` objects.

    Raises
    ------
    InvalidExchange
    """
    e, gch = _exchange(bg, b1, b2)
    B1 = bg.basis(b1)
    B2 = bg.basis(b2)
    if f not in B1 or f == e:
        raise InvalidExchange("Edge %s is not a tree edge of B1 other than e=%d" % (str(f), e))
    return set(good_cycle_from_bases(bg, B1, B2, B3, B4) for B4, B3 in _templates(g, B1, B2, e, gch, f))


def good_cycles_graphic(g, bg, b1, b2):
    """
    The union of :func:`good_cycles_at` over all tree edges f of B1 other than e.

    Raises
    ------
    NotAnEdge
    """
    e, _ = bg.exchange(b1, b2)
    cycles = set()
    for f in sorted(bg.basis(b1) - {e}):
        cycles.update(good_cycles_at(g, bg, b1, b2, f))
    logger.debug("Edge (%d,%d): %d good cycles from the fact templates", b1, b2, len(cycles))
    return cycles


def fact_shape(g, bg, good):
    """
    Classify a good cycle by its second exchange.

    Returns
    -------
    str
        'shared' when B3 = B2-f+w, 'chord' when w = g, 'swap' when
        B3 = B2-g+w with f on C(g,B1), and 'outside' when B3 = B2-g+w
        with f off C(g,B1).  Only 'outside' cycles are missed by the
        templates of :func:`good_cycles_at`.
    """
    B1 = bg.basis(good.b1)
    B2 = bg.basis(good.b2)
    B3 = bg.basis(good.b3)
    if B3 == (B2 - {good.f}) | {good.w}:
        return 'shared'
    if good.w == good.g:
        return 'chord'
    assert (B3 == (B2 - {good.g}) | {good.w}), "Unexpected good cycle shape %s" % str(good.vertices())
    cycle = fundamental_cycle(g, B1, good.g).cycle_edges
    return 'swap' if good.f in cycle else 'outside'


def recognize_exceptional(g):
    """
    Decide whether g is isomorphic to C_n or to the 1-sum of C_2 and C_{n-1}.

    Parameters
    ----------
    g: Multigraph

    Returns
    -------
    Exceptional
    """
    n = g.n_vertices
    if n < 2 or g.num_edges not in (n, n+1):
        return Exceptional.neither
    G = g.to_networkx()
    if g.num_edges == n and nx.is_isomorphic(G, generators.cycle(n).to_networkx()):
        return Exceptional.cycle
    if g.num_edges == n+1 and n >= 3 and nx.is_isomorphic(G, generators.k2_sum_cycle(n).to_networkx()):
        return Exceptional.two_sum
    return Exceptional.neither
