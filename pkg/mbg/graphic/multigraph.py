#
# Loop-free multigraphs with stable edge ids
#
import logging

import networkx as nx

from mbg.common.errors import BadParams, NoSuchEdge

__all__ = ['Multigraph', 'contract_edge', 'delete_edge']

logger = logging.getLogger(__name__)


class Multigraph(object):
    """
    A loop-free multigraph whose edges carry distinct integer ids.

    Parallel edges are distinguished by their ids, and minors keep the
    ids of the surviving edges.

    Parameters
    ----------
    n: int
        The number of vertices, labeled 0..n-1.
    edges
        An iterable of (edge_id, u, v) triples.
    """

    def __init__(self, n, edges):
        if n < 1:
            raise BadParams("A multigraph needs at least one vertex")
        self.n_vertices = n
        triples = []
        ends = {}
        for i, u, v in edges:
            i, u, v = int(i), int(u), int(v)
            if i < 0:
                raise BadParams("Edge ids must be non-negative: %d" % i)
            if i in ends:
                raise BadParams("Duplicate edge id %d" % i)
            if not (0 <= u < n and 0 <= v < n):
                raise BadParams("Edge %d has an endpoint outside 0..%d" % (i, n-1))
            if u == v:
                raise BadParams("Edge %d is a loop" % i)
            if u > v:
                u, v = v, u
            ends[i] = (u, v)
            triples.append((i, u, v))
        self.edges = tuple(sorted(triples))
        self._ends = ends

    @property
    def ids(self):
        return tuple(i for i,_,_ in self.edges)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def key(self):
        return (self.n_vertices, self.edges)

    def __contains__(self, i):
        return i in self._ends

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Multigraph(n=%d, edges=%s)" % (self.n_vertices, [list(t) for t in self.edges])

    def ends(self, i):
        """
        Returns the endpoints (u, v), u < v, of edge i.

        Raises
        ------
        NoSuchEdge
        """
        try:
            return self._ends[i]
        except KeyError:
            raise NoSuchEdge("Edge %s does not exist" % str(i)) from None

    def degree(self, v):
        return sum(1 for _,a,b in self.edges if a == v or b == v)

    def edges_between(self, A, B):
        """
        Returns the ids of edges with one end in A and the other in B.
        """
        A = set(A)
        B = set(B)
        return frozenset(i for i,u,v in self.edges if (u in A and v in B) or (u in B and v in A))

    def multiplicities(self):
        """Returns a dict mapping vertex pairs (u,v), u < v, to edge counts"""
        counts = {}
        for _, u, v in self.edges:
            counts[u, v] = counts.get((u, v), 0) + 1
        return counts

    def to_networkx(self):
        """
        Returns an nx.MultiGraph on 0..n-1 whose edge keys are the edge ids.
        """
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n_vertices))
        for i, u, v in self.edges:
            G.add_edge(u, v, key=i)
        return G

    def to_json(self):
        return {'n': self.n_vertices, 'edges': [list(t) for t in self.edges]}

    @staticmethod
    def from_json(data):
        return Multigraph(data['n'], data['edges'])


def contract_edge(g, e):
    """
    Contract edge e: merge its endpoints and drop the loops this creates.

    The merged vertex keeps the smaller label, and the labels above the
    larger endpoint shift down by one.  Surviving edges keep their ids.

    Raises
    ------
    NoSuchEdge
    """
    u, v = g.ends(e)

    def relabel(x):
        if x == v:
            x = u
        return x-1 if x > v else x

    edges = []
    for i, a, b in g.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            edges.append((i, a, b))
    return Multigraph(g.n_vertices-1, edges)


def delete_edge(g, e):
    """
    Delete edge e; the vertex set is unchanged.

    Raises
    ------
    NoSuchEdge
    """
    g.ends(e)
    return Multigraph(g.n_vertices, [t for t in g.edges if t[0] != e])
