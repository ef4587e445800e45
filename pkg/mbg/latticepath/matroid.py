#
# Lattice path matroids M[P,Q] and generalized Catalan matroids M[Q]
#
import itertools
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from mbg.common.errors import BadParams, LoopOrIsthmus, PAboveQ
from mbg.matroid import BasisFamily
from mbg.latticepath.words import check_word, reverse_word, swap_steps

__all__ = ['LatticePathMatroid', 'GenCatalan', 'standard_presentation', 'enumerate_bases_paths',
           'transversal_bases', 'catalan_matroid', 'uniform_path_matroid', 'delete_element',
           'contract_element', 'dualize', 'dual_basis', 'generalized_catalan', 'loop_free_core',
           'catalan_minor_order']

logger = logging.getLogger(__name__)


def standard_presentation(p, q):
    """
    Returns the intervals [a_i, b_i] of the standard presentation of
    M[P,Q], where a_i and b_i are the (0-based) positions of the i-th
    North step of Q and of P.

    Raises
    ------
    BadParams
        The words have different lengths or different numbers of North steps.
    PAboveQ
        Some prefix of P has more North steps than the same prefix of Q.
    """
    p = check_word(p)
    q = check_word(q)
    if len(p) != len(q) or p.count('N') != q.count('N'):
        raise BadParams("Bounding words '%s' and '%s' do not end at the same lattice point" % (p, q))
    hp = hq = 0
    for i in range(len(p)):
        hp += p[i] == 'N'
        hq += q[i] == 'N'
        if hp > hq:
            raise PAboveQ("The lower path '%s' goes above '%s' after step %d" % (p, q, i))
    a = [i for i,c in enumerate(q) if c == 'N']
    b = [i for i,c in enumerate(p) if c == 'N']
    return tuple(zip(a, b))


class LatticePathMatroid(object):
    """
    The lattice path matroid M[P,Q].

    Its ground set is the positions 0..m+r-1 of a step word, and its
    bases are the sets of North-step positions of the lattice paths
    that never go below P nor above Q.

    Parameters
    ----------
    p: str
        The lower bounding word.
    q: str
        The upper bounding word.
    """

    def __init__(self, p, q):
        self.p = check_word(p)
        self.q = check_word(q)
        self.intervals = standard_presentation(self.p, self.q)
        self._family = None

    @property
    def rank(self):
        return self.q.count('N')

    @property
    def corank(self):
        return self.q.count('E')

    @property
    def size(self):
        return len(self.q)

    @property
    def key(self):
        return ('lpm', self.p, self.q)

    def is_generalized_catalan(self):
        return self.p == 'E'*self.corank + 'N'*self.rank

    def family(self):
        if self._family is None:
            self._family = enumerate_bases_paths(self)
        return self._family

    def __eq__(self, other):
        if not isinstance(other, LatticePathMatroid):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "LatticePathMatroid(p='%s', q='%s')" % (self.p, self.q)


class GenCatalan(LatticePathMatroid):
    """
    The generalized Catalan matroid M[Q], whose lower bound is E^m N^r.

    It has no loop and no isthmus exactly when Q starts with N and ends
    with E.
    """

    def __init__(self, q):
        q = check_word(q)
        super().__init__('E'*q.count('E') + 'N'*q.count('N'), q)

    def is_loop_free(self):
        return len(self.q) > 0 and self.q[0] == 'N' and self.q[-1] == 'E'

    def __repr__(self):
        return "GenCatalan(q='%s')" % self.q


def _as_lattice_path(p, q):
    p = check_word(p)
    q = check_word(q)
    if p == 'E'*q.count('E') + 'N'*q.count('N'):
        return GenCatalan(q)
    return LatticePathMatroid(p, q)


def catalan_matroid(k):
    """The k-Catalan matroid, with Q = (NE)^k"""
    if k < 1:
        raise BadParams("The k-Catalan matroid needs k >= 1")
    return GenCatalan('NE'*k)


def uniform_path_matroid(r, n):
    """U_{r,n} as the lattice path matroid with Q = N^r E^(n-r)"""
    if not (n > r >= 1):
        raise BadParams("U_{r,n} needs n > r >= 1")
    return GenCatalan('N'*r + 'E'*(n-r))


def enumerate_bases_paths(m):
    """
    Enumerate the bases of a lattice path matroid.

    A set of positions p_1 < ... < p_r is a basis exactly when
    a_i <= p_i <= b_i for every interval of the standard presentation.

    Returns
    -------
    BasisFamily
    """
    intervals = m.intervals
    r = len(intervals)
    bases = []

    def extend(i, prev, chosen):
        if i == r:
            bases.append(tuple(chosen))
            return
        a, b = intervals[i]
        for x in range(max(a, prev+1), b+1):
            chosen.append(x)
            extend(i+1, x, chosen)
            chosen.pop()

    extend(0, -1, [])
    return BasisFamily(bases, ground=range(m.size))


def transversal_bases(intervals, n):
    """
    Returns the bases of the transversal matroid presented by the
    intervals, by testing every r-subset of 0..n-1 for a system of
    distinct representatives.
    """
    r = len(intervals)
    bases = []
    for subset in itertools.combinations(range(n), r):
        rows, cols = [], []
        for i, (a, b) in enumerate(intervals):
            for j, x in enumerate(subset):
                if a <= x <= b:
                    rows.append(i)
                    cols.append(j)
        if len(rows) == 0:
            if r == 0:
                bases.append(subset)
            continue
        graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(r, r))
        matching = maximum_bipartite_matching(graph, perm_type='column')
        if (matching >= 0).all():
            bases.append(subset)
    return BasisFamily(bases, ground=range(n))


def _check_splittable(m, e):
    family = m.family()
    if not (0 <= e < m.size):
        raise BadParams("Element %s is outside 0..%d" % (str(e), m.size-1))
    if e in family.loops():
        raise LoopOrIsthmus("Position %d is a loop of %s" % (e, m))
    if e in family.isthmuses():
        raise LoopOrIsthmus("Position %d is an isthmus of %s" % (e, m))


def _drop(word, i):
    return word[:i] + word[i+1:]


def delete_element(m, e):
    """
    Delete position e from a lattice path matroid.

    Q loses its first E step at or after e, and P loses its last E step
    at or before e.

    Returns
    -------
    tuple
        (minor, element_map) where element_map[i] is the position in m
        of position i of the minor.

    Raises
    ------
    LoopOrIsthmus
    """
    _check_splittable(m, e)
    qi = next(i for i in range(e, m.size) if m.q[i] == 'E')
    pi = next(i for i in range(e, -1, -1) if m.p[i] == 'E')
    minor = _as_lattice_path(_drop(m.p, pi), _drop(m.q, qi))
    return minor, tuple(i for i in range(m.size) if i != e)


def contract_element(m, e):
    """
    Contract position e of a lattice path matroid.

    Q loses its last N step at or before e, and P loses its first N step
    at or after e.

    Returns
    -------
    tuple
        (minor, element_map) as for :func:`delete_element`.

    Raises
    ------
    LoopOrIsthmus
    """
    _check_splittable(m, e)
    qi = next(i for i in range(e, -1, -1) if m.q[i] == 'N')
    pi = next(i for i in range(e, m.size) if m.p[i] == 'N')
    minor = _as_lattice_path(_drop(m.p, pi), _drop(m.q, qi))
    return minor, tuple(i for i in range(m.size) if i != e)


def dual_basis(basis, n):
    """
    Map a basis to the dual basis under the relabeling j -> n-1-j.
    """
    return frozenset(n-1-j for j in range(n) if j not in basis)


def dualize(m):
    """
    Returns the dual of a lattice path matroid, relabeled by j -> n-1-j.

    The dual of M[P,Q] is M[swap(reverse(P)), swap(reverse(Q))], and its
    bases are the images of the complements of the bases of m under
    :func:`dual_basis`.  A generalized Catalan matroid of rank r and
    corank m maps to one of rank m and corank r.
    """
    return _as_lattice_path(swap_steps(reverse_word(m.p)), swap_steps(reverse_word(m.q)))


def generalized_catalan(q):
    """The generalized Catalan matroid M[Q]"""
    return GenCatalan(q)


def loop_free_core(m):
    """
    Returns M[Q] with its loops deleted and its isthmuses contracted.

    The loops of a generalized Catalan matroid are the leading East
    steps of Q and its isthmuses are the trailing North steps.
    """
    assert (isinstance(m, GenCatalan)), "Expected a generalized Catalan matroid, not %s" % str(m)
    return GenCatalan(m.q.lstrip('E').rstrip('N'))


def catalan_minor_order(m):
    """
    Returns the largest k such that the k-Catalan matroid is a minor of
    the generalized Catalan matroid m, or 0 if there is none.

    Minors of a generalized Catalan matroid are generalized Catalan, so
    the search runs over the Q words reachable by single deletions and
    contractions.
    """
    start = loop_free_core(m)
    seen = {start.q}
    frontier = [start]
    best = 0
    while frontier:
        nxt = []
        for minor in frontier:
            q = minor.q
            if len(q) >= 2 and q == 'NE'*(len(q)//2):
                best = max(best, len(q)//2)
            if len(q)//2 <= best:
                continue
            for e in range(minor.size):
                for op in (delete_element, contract_element):
                    child = loop_free_core(op(minor, e)[0])
                    if child.q not in seen:
                        seen.add(child.q)
                        nxt.append(child)
        frontier = nxt
    logger.debug("%s has a %d-Catalan minor", m, best)
    return best
