#
# Good cycles of generalized Catalan matroids
#
import logging

from mbg.common.errors import BadParams, InvalidExchange, LoopOrIsthmus, NotAnEdge, TooFewGoodCycles
from mbg.matroid import build_basis_graph, good_cycle_from_bases
from mbg.latticepath.matroid import GenCatalan, dual_basis, dualize

__all__ = ['good_cycles_catalan', 'good_cycles_gencat_min', 'orient_edge']

logger = logging.getLogger(__name__)


def _check_gencat(m):
    if not isinstance(m, GenCatalan):
        raise BadParams("%s is not a generalized Catalan matroid" % m)
    if not m.is_loop_free():
        raise LoopOrIsthmus("%s has a loop or an isthmus" % m)
    if min(m.rank, m.corank) < 2:
        raise BadParams("Good-cycle templates need rank and corank at least 2: %s" % m)


def orient_edge(bg, b1, b2):
    """
    Returns the edge as (b1, b2) or (b2, b1), whichever removes the
    earlier of the two exchanged positions from the first basis.
    """
    try:
        e, g = bg.exchange(b1, b2)
    except NotAnEdge:
        raise InvalidExchange("Bases %d and %d do not differ by a single exchange" % (b1, b2)) from None
    return (b1, b2) if e < g else (b2, b1)


def _templates(B1, B2, e, g, n):
    #
    # Yields (B4, B3) pairs; positions not in a basis are its East steps
    #
    common_n = sorted(B1 & B2)
    common_e = [i for i in range(n) if i not in B1 and i not in B2]
    found = False
    before = [l for l in common_n if l < e]
    if before:
        f = before[0]
        logger.debug("Case 1 with f=%d", f)
        for w in common_e:
            yield (B1 - {f}) | {w}, (B2 - {f}) | {w}
        found = True
    after = [l for l in common_e if l > g]
    if after:
        w = after[-1]
        logger.debug("Case 2 with w=%d", w)
        for f in common_n:
            yield (B1 - {f}) | {w}, (B2 - {f}) | {w}
        found = True
    if found:
        return
    east = [i for i in range(n) if i not in B1]
    assert (len(east) >= 2), "Case 3 needs two East steps in B1"
    h = east[-2]
    logger.debug("Case 3 with h=%d", h)
    for f in sorted(B1 - {e}):
        w = next((i for i in range(f+1, n) if i not in B1), None)
        if w is None or w == g:
            # blocks ending at g, and the North run after g
            yield (B1 - {f}) | {g}, (B2 - {f}) | {h}
        else:
            yield (B1 - {f}) | {w}, (B2 - {f}) | {w}


def good_cycles_catalan(m, bg, b1, b2):
    """
    Good cycles of a generalized Catalan matroid with corank >= rank >= 2.

    Write B2 = B1-e+g with e < g.  If B1 and B2 share a North step
    before e, the first such step f is exchanged with every shared East
    step.  If they share an East step after g, the last such step w is
    exchanged with every shared North step.  Otherwise every North step
    f of B1 other than e gives one cycle, according to the North run
    that contains it.

    Parameters
    ----------
    m: GenCatalan
    bg: BasisGraph
        The basis graph of m.
    b1, b2: int
        Adjacent vertices with the exchanged positions e < g.

    Returns
    -------
    set
        At least rank-1 validated :class:`GoodCycle` objects.

    Raises
    ------
    InvalidExchange
        b1 and b2 are not adjacent, or e > g.
    LoopOrIsthmus
    BadParams
        m is not generalized Catalan, or corank < rank, or rank < 2.
    """
    _check_gencat(m)
    if m.corank < m.rank:
        raise BadParams("The templates need corank >= rank: %s" % m)
    if orient_edge(bg, b1, b2) != (b1, b2):
        raise InvalidExchange("Edge (%d,%d) removes the later position; use (%d,%d)" % (b1, b2, b2, b1))
    e, g = bg.exchange(b1, b2)
    B1 = bg.basis(b1)
    B2 = bg.basis(b2)
    cycles = set(good_cycle_from_bases(bg, B1, B2, B3, B4) for B4, B3 in _templates(B1, B2, e, g, m.size))
    if len(cycles) < m.rank-1:
        e = "Only %d good cycles for edge (%d,%d) of %s" % (len(cycles), b1, b2, m)
        logger.error(e)
        raise TooFewGoodCycles(e)
    return cycles


def good_cycles_gencat_min(m, bg, b1, b2, dual_graph=None):
    """
    Good cycles of a loop-free generalized Catalan matroid with rank and
    corank at least 2, through duality when the corank is smaller than
    the rank.

    The edge is oriented by :func:`orient_edge` in the primal.  When
    the dual is used, each dual cycle through the image of the edge maps
    back to a primal good cycle for the reversed orientation.  All
    returned cycles share one orientation, given by their b1 and b2.

    Parameters
    ----------
    m: GenCatalan
    bg: BasisGraph
    b1, b2: int
        Adjacent vertices, in either order.
    dual_graph: BasisGraph
        The basis graph of dualize(m), built when not supplied.

    Returns
    -------
    set
        At least min(rank, corank)-1 good cycles.
    """
    _check_gencat(m)
    b1, b2 = orient_edge(bg, b1, b2)
    if m.corank >= m.rank:
        return good_cycles_catalan(m, bg, b1, b2)
    n = m.size
    md = dualize(m)
    if dual_graph is None:
        dual_graph = build_basis_graph(md.family())
    d1 = dual_graph.index(dual_basis(bg.basis(b1), n))
    d2 = dual_graph.index(dual_basis(bg.basis(b2), n))
    B1 = bg.basis(b1)
    B2 = bg.basis(b2)
    cycles = set()
    for c in good_cycles_catalan(md, dual_graph, d1, d2):
        X3 = dual_basis(dual_graph.basis(c.b4), n)
        X4 = dual_basis(dual_graph.basis(c.b3), n)
        cycles.add(good_cycle_from_bases(bg, B2, B1, X3, X4))
    return cycles
