#
# Exhaustive pools of small multigraphs, up to isomorphism
#
import functools
import itertools
import logging

from mbg.graphic.multigraph import Multigraph
from mbg.graphic.trees import edge_connectivity, is_connected

__all__ = ['canonical_form', 'multigraph_pool']

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _pairs(n):
    pairs = list(itertools.combinations(range(n), 2))
    return pairs, {p:i for i,p in enumerate(pairs)}


def canonical_form(n, counts):
    """
    Returns a canonical multiplicity vector of a multigraph on n vertices.

    counts[i] is the number of edges joining the i-th vertex pair in
    lexicographic order.  Vertices are ordered by an isomorphism
    invariant (degree, then the sorted degrees of neighbors with
    multiplicity), and the canonical form is the least relabeled vector
    over all orderings consistent with that invariant.
    """
    pairs, index = _pairs(n)
    degree = [0]*n
    for (u, v), c in zip(pairs, counts):
        degree[u] += c
        degree[v] += c
    invariant = []
    for x in range(n):
        nbr = []
        for (u, v), c in zip(pairs, counts):
            if c and (u == x or v == x):
                nbr.extend([degree[v if u == x else u]]*c)
        invariant.append((degree[x], tuple(sorted(nbr))))
    classes = {}
    for x in range(n):
        classes.setdefault(invariant[x], []).append(x)
    groups = [classes[k] for k in sorted(classes, reverse=True)]
    best = None
    for choice in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        order = [x for grp in choice for x in grp]
        label = [0]*n
        for pos, x in enumerate(order):
            label[x] = pos
        vec = [0]*len(pairs)
        for (u, v), c in zip(pairs, counts):
            if c:
                a, b = label[u], label[v]
                vec[index[(a, b) if a < b else (b, a)]] = c
        vec = tuple(vec)
        if best is None or vec < best:
            best = vec
    return best


@functools.lru_cache(maxsize=None)
def _levels(n, m_max):
    #
    # All multigraphs on n vertices up to isomorphism, grouped
    # by edge count, generated by adding one edge at a time
    #
    pairs, _ = _pairs(n)
    levels = [frozenset([tuple([0]*len(pairs))])]
    for m in range(1, m_max+1):
        nxt = set()
        for counts in levels[-1]:
            for i in range(len(pairs)):
                c = list(counts)
                c[i] += 1
                nxt.add(canonical_form(n, c))
        levels.append(frozenset(nxt))
        logger.debug("n=%d m=%d: %d multigraphs up to isomorphism", n, m, len(nxt))
    return tuple(levels)


def _to_multigraph(n, counts):
    pairs, _ = _pairs(n)
    edges = []
    for (u, v), c in zip(pairs, counts):
        for _ in range(c):
            edges.append((len(edges), u, v))
    return Multigraph(n, edges)


def multigraph_pool(n_min=2, n_max=5, m_max=8, min_connectivity=1):
    """
    Generate every connected loop-free multigraph with n_min..n_max
    vertices and at most m_max edges whose edge connectivity is at
    least min_connectivity, one per isomorphism class.

    Graphs are yielded in a fixed order: by vertex count, then edge
    count, then canonical form.

    Yields
    ------
    Multigraph
    """
    for n in range(max(n_min, 1), n_max+1):
        if n == 1:
            continue
        levels = _levels(n, m_max)
        for m in range(n-1, m_max+1):
            for counts in sorted(levels[m]):
                g = _to_multigraph(n, counts)
                if not is_connected(g):
                    continue
                if min_connectivity > 1 and edge_connectivity(g) < min_connectivity:
                    continue
                yield g
