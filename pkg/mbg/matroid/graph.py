#
# Basis graphs and cycles in them
#
import logging

from mbg.common.errors import NotAnEdge

__all__ = ['BasisGraph', 'build_basis_graph', 'cycle_edge', 'cycle_from_vertices',
           'cycle_to_vertices', 'is_hamiltonian_cycle', 'induced_minor_map', 'minor_vertex_map']

logger = logging.getLogger(__name__)


def cycle_edge(u, v):
    """The canonical (low, high) form of an undirected edge"""
    return (u, v) if u < v else (v, u)


class BasisGraph(object):
    """
    The basis graph of a matroid.

    Vertex i is the i-th basis of the family; two vertices are adjacent
    when the symmetric difference of their bases has exactly two
    elements.

    Attributes
    ----------
    family: BasisFamily
        The bases that label the vertices.
    adjacency: tuple
        For each vertex, the sorted tuple of neighbor indices.
    """

    def __init__(self, family, adjacency):
        self.family = family
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._nbrsets = [frozenset(nbrs) for nbrs in self.adjacency]
        self._masks = None
        assert (len(self.adjacency) == len(family)), "Adjacency does not match the basis family"

    @property
    def vertices(self):
        return self.family.bases

    def __len__(self):
        return len(self.adjacency)

    def basis(self, v):
        return self.family.bases[v]

    def index(self, basis):
        return self.family.index(basis)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self._nbrsets[u]

    def edges(self):
        """Yields each edge once as (u, v) with u < v"""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def num_edges(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def masks(self):
        """
        Returns the adjacency of each vertex as an integer bitmask.
        """
        if self._masks is None:
            masks = []
            for nbrs in self.adjacency:
                m = 0
                for v in nbrs:
                    m |= 1 << v
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def exchange(self, u, v):
        """
        Returns (e, g) such that basis v is basis u minus e plus g.

        Raises
        ------
        NotAnEdge
        """
        if not (0 <= u < len(self) and 0 <= v < len(self)) or not self.has_edge(u, v):
            raise NotAnEdge("Vertices %s and %s are not adjacent in the basis graph" % (u, v))
        B1 = self.basis(u)
        B2 = self.basis(v)
        e, = B1 - B2
        g, = B2 - B1
        return e, g

    def side(self, e, member=True):
        """
        Returns the sorted vertices whose basis contains e (member=True)
        or avoids e (member=False).
        """
        return [i for i,B in enumerate(self.family) if (e in B) == member]

    def __repr__(self):
        return "BasisGraph(vertices=%d, edges=%d)" % (len(self), self.num_edges())


def build_basis_graph(family):
    """
    Construct the basis graph of a basis family.

    Neighbors are generated by single-element exchanges B-x+y and looked
    up in the family, so the cost is linear in the number of bases.

    Parameters
    ----------
    family: BasisFamily

    Returns
    -------
    BasisGraph
    """
    ground = family.ground
    adjacency = []
    for B in family:
        nbrs = set()
        outside = [y for y in ground if y not in B]
        for x in B:
            base = B - {x}
            for y in outside:
                C = base | {y}
                if C in family:
                    nbrs.add(family.index(C))
        adjacency.append(nbrs)
    bg = BasisGraph(family, adjacency)
    logger.debug("Built basis graph with %d vertices and %d edges", len(bg), bg.num_edges())
    return bg


def cycle_from_vertices(order):
    """
    Returns the edge set of the closed walk through the given vertex order.
    """
    n = len(order)
    return frozenset(cycle_edge(order[i], order[(i+1) % n]) for i in range(n))


def cycle_to_vertices(cycle):
    """
    Returns a vertex order of an edge-set cycle.

    The order starts at the smallest vertex and continues toward its
    smaller neighbor.
    """
    nbrs = {}
    for u, v in cycle:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs)
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


def is_hamiltonian_cycle(bg, cycle):
    """
    Returns True if the edge set is a single cycle through every vertex of bg.
    """
    n = len(bg)
    if n < 3 or len(cycle) != n:
        return False
    degree = [0]*n
    for u, v in cycle:
        if not (0 <= u < n and 0 <= v < n) or u == v or not bg.has_edge(u, v):
            return False
        degree[u] += 1
        degree[v] += 1
    if any(d != 2 for d in degree):
        return False
    return len(cycle_to_vertices(cycle)) == n


def induced_minor_map(bg, e):
    """
    Returns the vertices of bg on the two sides of a split on element e.

    The first list holds the bases containing e, which induce a copy of
    BG(M/e); the second holds the bases avoiding e, a copy of BG(M-e).
    """
    return bg.side(e, member=True), bg.side(e, member=False)


def minor_vertex_map(bg, family, emap, extra=None):
    """
    Map the bases of a minor to vertices of bg.

    Parameters
    ----------
    bg: BasisGraph
        The basis graph of the parent matroid.
    family: BasisFamily
        The bases of a minor.
    emap: dict
        Minor element -> parent element.
    extra: int
        The contracted element, added back to every basis.

    Returns
    -------
    list
        The parent vertex of each minor basis, in minor order.

    Raises
    ------
    KeyError
        Some mapped set is not a basis of the parent.
    """
    vmap = []
    for B in family:
        basis = frozenset(emap[x] for x in B)
        if extra is not None:
            basis = basis | {extra}
        vmap.append(bg.index(basis))
    return vmap
