#
# Closed-form witness constructions for complete and prism basis graphs
#
import itertools
import logging

from mbg.common.errors import BadParams, NotAnEdge
from mbg.matroid import cycle_edge, cycle_from_vertices

__all__ = ['witnesses_complete', 'witnesses_prism', 'prism_labels', 'detect_complete', 'detect_prism']

logger = logging.getLogger(__name__)


def witnesses_complete(n, edge, labels=None):
    """
    Hamiltonian cycles of K_n through an edge ab: a b s(3) ... s(n) for
    every ordering s of the remaining vertices.

    Parameters
    ----------
    n: int
        Number of vertices, at least 3.
    edge: tuple
        Two distinct vertices among 0..n-1.
    labels: list
        Optional vertex names; vertex i is reported as labels[i].

    Returns
    -------
    set
        (n-2)! cycles as sets of canonical edges.
    """
    if n < 3:
        raise BadParams("K_n needs n >= 3 to have a Hamiltonian cycle")
    a, b = edge
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise NotAnEdge("(%s, %s) is not an edge of K_%d" % (a, b, n))
    if labels is None:
        labels = range(n)
    rest = [v for v in range(n) if v not in (a, b)]
    cycles = set()
    for perm in itertools.permutations(rest):
        cycles.add(cycle_from_vertices([labels[v] for v in (a, b) + perm]))
    return cycles


def prism_labels(n):
    """
    The default labeling of K_2 x K_{n-1}: vertex (l, i) is l*(n-1)+i.
    """
    t = n-1
    return {(l, i): l*t+i for l in range(2) for i in range(t)}


def _copy_cycles(t, a, b):
    # Hamiltonian cycles of K_t through ab, as vertex orders
    rest = [v for v in range(t) if v not in (a, b)]
    for perm in itertools.permutations(rest):
        yield (a, b) + perm


def _order_edges(order):
    m = len(order)
    return [cycle_edge(order[i], order[(i+1) % m]) for i in range(m)]


def witnesses_prism(n, edge, labels=None):
    """
    Hamiltonian cycles of the prism K_2 x K_{n-1} through an edge.

    A cycle C1 of one copy of K_{n-1} and a cycle C2 of the other copy
    are joined along the square S on a pair of matched edges; the
    witness is the symmetric difference of C1, S and C2.  For an edge
    inside copy 0 (or copy 1), C1 runs through it and S uses any other
    edge xy of C1.  For an edge (0,i)(1,i) between the copies, S is
    (0,i)(0,j)(1,j)(1,i) for each j other than i.

    Parameters
    ----------
    n: int
        At least 3; K_2 x K_2 is the 4-cycle.
    edge: tuple
        Two adjacent vertices, each given as (copy, index).
    labels: dict
        Maps (copy, index) to the reported vertex name.  Defaults to
        :func:`prism_labels`.

    Returns
    -------
    set
        (n-2)!(n-3)! cycles as sets of canonical edges.
    """
    if n < 3:
        raise BadParams("The prism K_2 x K_{n-1} needs n >= 3")
    t = n-1
    if labels is None:
        labels = prism_labels(n)
    (la, a), (lb, b) = edge
    if not all(l in (0, 1) and 0 <= i < t for l, i in edge) or (la != lb and a != b) or (la == lb and a == b):
        raise NotAnEdge("%s is not an edge of K_2 x K_%d" % (str(edge), t))

    def name(l, i):
        return labels[(l, i)]

    def copy_edges(l, order):
        return set(cycle_edge(name(l, x), name(l, y)) for x, y in _order_edges(order))

    def square(x, y):
        return {cycle_edge(name(0, x), name(0, y)), cycle_edge(name(1, x), name(1, y)),
                cycle_edge(name(0, x), name(1, x)), cycle_edge(name(0, y), name(1, y))}

    if t == 2:
        return {frozenset(square(0, 1))}
    cycles = set()
    if la == lb:
        # Intra-copy edge; the other copy is 1-la
        for c1 in _copy_cycles(t, a, b):
            for x, y in _order_edges(c1):
                if (x, y) == cycle_edge(a, b):
                    continue
                for c2 in _copy_cycles(t, x, y):
                    cycles.add(frozenset(copy_edges(la, c1) ^ square(x, y) ^ copy_edges(1-la, c2)))
    else:
        i = a
        for j in range(t):
            if j == i:
                continue
            for c1 in _copy_cycles(t, i, j):
                for c2 in _copy_cycles(t, i, j):
                    cycles.add(frozenset(copy_edges(0, c1) ^ square(i, j) ^ copy_edges(1, c2)))
    return cycles


def detect_complete(bg):
    """Returns True if every pair of vertices of bg is adjacent"""
    n = len(bg)
    return all(bg.degree(v) == n-1 for v in range(n))


def detect_prism(bg):
    """
    Recognize a basis graph isomorphic to K_2 x K_t for t >= 2.

    Returns
    -------
    dict or None
        Maps (copy, index) to the vertices of bg, or None if bg is not a
        prism.
    """
    N = len(bg)
    if N < 4 or N % 2 == 1:
        return None
    t = N // 2
    if any(bg.degree(v) != t for v in range(N)):
        return None
    nbrs = bg.neighbors(0)
    # The neighbor of 0 in the other copy is adjacent to no other neighbor of 0
    cross = [x for x in nbrs if not any(bg.has_edge(x, y) for y in nbrs if y != x)]
    if len(cross) == 0:
        return None
    first = sorted([0] + [x for x in nbrs if x != cross[0]])
    second = sorted(v for v in range(N) if v not in first)
    copy0 = set(first)
    for side in (first, second):
        if len(side) != t or any(not bg.has_edge(u, v) for u, v in itertools.combinations(side, 2)):
            return None
    labels = {}
    for i, u in enumerate(first):
        match = [v for v in bg.neighbors(u) if v not in copy0]
        if len(match) != 1:
            return None
        labels[(0, i)] = u
        labels[(1, i)] = match[0]
    if sorted(labels[(1, i)] for i in range(t)) != second:
        return None
    return labels
