#
# Exact Hamiltonian-cycle enumeration in basis graphs
#
import dataclasses
import logging

from mbg.common.errors import NotAnEdge, TooSmall
from mbg.matroid import cycle_edge, cycle_from_vertices

__all__ = ['HcCount', 'enumerate_hc_through_edge', 'count_hc_through_edge', 'hc_star', 'hc_total']

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class HcCount:
    """
    A Hamiltonian-cycle count.  When capped is True, counting stopped
    at the threshold and value equals it.
    """

    value: int
    capped: bool = False
    edge: tuple = None


def _popcount(x):
    return bin(x).count('1')


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check(bg, edge):
    if len(bg) < 3:
        raise TooSmall("A basis graph with %d vertices has no Hamiltonian cycle" % len(bg))
    u, v = edge
    if not (0 <= u < len(bg) and 0 <= v < len(bg)) or not bg.has_edge(u, v):
        raise NotAnEdge("(%s, %s) is not an edge of the basis graph" % (u, v))


def _cycles_from(bg, start, first, accept=None):
    #
    # Yields the vertex orders of the Hamiltonian cycles whose first edge
    # is (start, first).  Each cycle is yielded once.
    #
    masks = bg.masks()
    full = (1 << len(bg)) - 1
    root = 1 << start

    def candidates(cur, visited):
        free = masks[cur] & ~visited
        # Warnsdorff: fewest onward moves first
        return sorted(_bits(free), key=lambda x: (_popcount(masks[x] & ~visited), x))

    def feasible(cur, visited):
        open_ = full & ~visited
        if not masks[start] & (open_ | (1 << cur)):
            return False
        usable = open_ | (1 << cur) | root
        for x in _bits(open_):
            if _popcount(masks[x] & usable) < 2:
                return False
        return True

    path = [start, first]
    visited = root | (1 << first)
    if visited == full:
        if masks[first] & root and (accept is None or accept(path)):
            yield list(path)
        return
    stack = [iter(candidates(first, visited))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        path.append(nxt)
        visited |= 1 << nxt
        if visited == full:
            if masks[nxt] & root and (accept is None or accept(path)):
                yield list(path)
        elif feasible(nxt, visited):
            stack.append(iter(candidates(nxt, visited)))
            continue
        visited &= ~(1 << path.pop())


def enumerate_hc_through_edge(bg, edge, limit=None):
    """
    Yields the Hamiltonian cycles of bg that contain the edge.

    The search is rooted at edge[0] and always leaves it through
    edge[1], so a cycle and its reversal are produced once.  Unvisited
    vertices with fewer than two usable neighbors prune the branch.

    Parameters
    ----------
    bg: BasisGraph
    edge: tuple
        A pair of adjacent vertices.
    limit: int
        Stop after this many cycles.  None means no limit.

    Yields
    ------
    frozenset
        Each cycle as a set of canonical edges.

    Raises
    ------
    TooSmall
        bg has fewer than 3 vertices.
    NotAnEdge
    """
    _check(bg, edge)
    if limit is not None and limit <= 0:
        return
    found = 0
    for order in _cycles_from(bg, edge[0], edge[1]):
        yield cycle_from_vertices(order)
        found += 1
        if limit is not None and found >= limit:
            return


def count_hc_through_edge(bg, edge, cap=None):
    """
    Count the Hamiltonian cycles of bg that contain the edge.

    Parameters
    ----------
    bg: BasisGraph
    edge: tuple
    cap: int
        Stop counting when this many cycles have been found.

    Returns
    -------
    HcCount
    """
    value = 0
    for _ in enumerate_hc_through_edge(bg, edge, limit=cap):
        value += 1
    capped = cap is not None and value >= cap
    if capped:
        logger.warning("Hamiltonian-cycle count through %s stopped at the cap %d", str(edge), cap)
    return HcCount(value, capped, cycle_edge(*edge))


def hc_star(bg, cap=None, edges=None):
    """
    Returns the minimum of :func:`count_hc_through_edge` over the edges
    of bg, or over the given representative edges.

    The result is capped only when every edge reached the cap.  The edge
    attribute names an edge that realises the minimum.
    """
    if edges is None:
        edges = list(bg.edges())
    best = None
    for edge in edges:
        count = count_hc_through_edge(bg, edge, cap=cap)
        if best is None or count.value < best.value:
            best = count
            if best.value == 0:
                break
    if best is None:
        raise TooSmall("The basis graph has no edges")
    return best


def hc_total(bg, cap=None):
    """
    Returns the number of Hamiltonian cycles of bg.

    Cycles are rooted at vertex 0 and counted in the direction whose
    second vertex is smaller than its last one.
    """
    if len(bg) < 3:
        raise TooSmall("A basis graph with %d vertices has no Hamiltonian cycle" % len(bg))
    total = 0
    for v in bg.neighbors(0):
        for _ in _cycles_from(bg, 0, v, accept=lambda path: path[1] < path[-1]):
            total += 1
            if cap is not None and total >= cap:
                return HcCount(total, True)
    return HcCount(total, False)
