#
# Spanning trees, connectivity and the X/Y/Z structure of a tree
#
import dataclasses
import itertools
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components, maximum_flow

from mbg.common.errors import BadParams, ChordInTree, CountMismatch, Disconnected, NotTreeEdge
from mbg.matroid import BasisFamily

__all__ = ['FundamentalCycle', 'XyzPartition', 'components', 'is_connected',
           'kirchhoff_count', 'enumerate_spanning_trees', 'edge_connectivity',
           'fundamental_cycle', 'xyz_partition']

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FundamentalCycle:
    """The unique cycle of tree+chord"""
    chord: int
    cycle_edges: frozenset


@dataclasses.dataclass(frozen=True)
class XyzPartition:
    """
    For a spanning tree B1 and tree edges e != f: X is the component of
    B1-e with no end of f, Z is the component of B1-f with no end of e,
    and Y holds the remaining vertices.
    """
    x_set: frozenset
    y_set: frozenset
    z_set: frozenset


def _csgraph(n, pairs, weights=None, dtype=np.int8):
    rows = [u for u,_ in pairs]
    cols = [v for _,v in pairs]
    data = np.ones(len(pairs), dtype=dtype) if weights is None else np.asarray(weights, dtype=dtype)
    return csr_matrix((data, (rows, cols)), shape=(n, n))


def components(n, pairs):
    """
    Returns the component label of each vertex of the graph on 0..n-1
    with the given (u, v) pairs.
    """
    _, labels = connected_components(_csgraph(n, pairs), directed=False)
    return labels


def is_connected(g):
    if g.n_vertices == 1:
        return True
    labels = components(g.n_vertices, [(u, v) for _,u,v in g.edges])
    return len(set(labels)) == 1


def kirchhoff_count(g):
    """
    Returns the number of spanning trees by the matrix-tree theorem.
    """
    n = g.n_vertices
    if n == 1:
        return 1
    L = np.zeros((n, n))
    for _, u, v in g.edges:
        L[u, u] += 1
        L[v, v] += 1
        L[u, v] -= 1
        L[v, u] -= 1
    return int(round(np.linalg.det(L[1:, 1:])))


def enumerate_spanning_trees(g):
    """
    Enumerate the spanning trees of a connected multigraph.

    Parameters
    ----------
    g: Multigraph

    Returns
    -------
    BasisFamily
        The bases of the graphic matroid, as sets of edge ids, over the
        ground set of edge ids of g.

    Raises
    ------
    Disconnected
    """
    if not is_connected(g):
        raise Disconnected("Cannot enumerate spanning trees of a disconnected multigraph")
    n = g.n_vertices
    trees = []
    for subset in itertools.combinations(g.edges, n-1):
        if n == 1 or len(set(components(n, [(u, v) for _,u,v in subset]))) == 1:
            trees.append([i for i,_,_ in subset])
    expected = kirchhoff_count(g)
    if len(trees) != expected:
        e = "Enumerated %d spanning trees but the matrix-tree theorem gives %d" % (len(trees), expected)
        logger.error(e)
        raise CountMismatch(e)
    return BasisFamily(trees, ground=g.ids)


def edge_connectivity(g):
    """
    Returns the size of a minimum edge cut of g, or 0 if g is disconnected.

    The global minimum cut is the minimum over t of the maximum flow
    from vertex 0 to t, with unit capacity per parallel edge.
    """
    n = g.n_vertices
    if n < 2:
        raise BadParams("Edge connectivity needs at least two vertices")
    if not is_connected(g):
        return 0
    counts = g.multiplicities()
    pairs = []
    weights = []
    for (u, v), c in counts.items():
        pairs.extend([(u, v), (v, u)])
        weights.extend([c, c])
    capacity = _csgraph(n, pairs, weights, dtype=np.int32)
    return min(maximum_flow(capacity, 0, t).flow_value for t in range(1, n))


def _tree_pairs(g, tree, skip=None):
    return [g.ends(i) for i in tree if i != skip]


def fundamental_cycle(g, tree, chord):
    """
    Returns the unique cycle in tree+chord.

    Parameters
    ----------
    g: Multigraph
    tree: set
        Edge ids of a spanning tree of g.
    chord: int
        An edge id not in the tree.

    Raises
    ------
    ChordInTree
    """
    if chord in tree:
        raise ChordInTree("Edge %d is in the tree" % chord)
    u, v = g.ends(chord)
    by_pair = {g.ends(i):i for i in tree}
    _, pred = breadth_first_order(_csgraph(g.n_vertices, _tree_pairs(g, tree)), u,
                                  directed=False, return_predecessors=True)
    edges = {chord}
    x = v
    while x != u:
        p = int(pred[x])
        assert (p >= 0), "The tree does not span vertex %d" % x
        edges.add(by_pair[(p, x) if p < x else (x, p)])
        x = p
    return FundamentalCycle(chord, frozenset(edges))


def xyz_partition(g, b1, e, f):
    """
    Split the vertices by the tree edges e and f of the spanning tree b1.

    Raises
    ------
    NotTreeEdge
        e or f is not in b1.
    """
    for i in (e, f):
        if i not in b1:
            raise NotTreeEdge("Edge %s is not in the tree" % str(i))
    if e == f:
        raise BadParams("The X/Y/Z partition needs two different tree edges")
    n = g.n_vertices
    fu, fv = g.ends(f)
    labels = components(n, _tree_pairs(g, b1, skip=e))
    x_set = frozenset(x for x in range(n) if labels[x] != labels[fu])
    eu, ev = g.ends(e)
    labels = components(n, _tree_pairs(g, b1, skip=f))
    z_set = frozenset(x for x in range(n) if labels[x] != labels[eu])
    y_set = frozenset(range(n)) - x_set - z_set
    assert (len(y_set) > 0), "Empty Y for tree edges %d and %d" % (e, f)
    assert (len(x_set) > 0 and len(z_set) > 0), "Empty X or Z for tree edges %d and %d" % (e, f)
    return XyzPartition(x_set, y_set, z_set)
