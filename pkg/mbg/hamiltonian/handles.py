#
# Matroid handles: what the recursive witness generator needs to know
# about a matroid family
#
import abc
import logging

from mbg.common.errors import MBGError, TooFewGoodCycles
from mbg.matroid import build_basis_graph, split_by_element
from mbg.graphic import enumerate_spanning_trees, good_cycles_graphic, contract_edge, delete_edge
from mbg.latticepath import (GenCatalan, LatticePathMatroid, good_cycles_gencat_min, contract_element,
                             delete_element, dualize)
from mbg.uniform import UniformMatroid, good_cycles_uniform

__all__ = ['MatroidHandle', 'GraphicHandle', 'CatalanHandle', 'UniformHandle', 'FamilyHandle']

logger = logging.getLogger(__name__)


class MatroidHandle(abc.ABC):
    """
    The base class for matroid handles.

    A handle owns a matroid, its basis family and its basis graph.  It
    provides the family-specific good-cycle templates and the minors
    M/e and M-e with maps from their elements to the elements of M.
    """

    def __init__(self):
        self._family = None
        self._bg = None

    @property
    @abc.abstractmethod
    def key(self):
        """A hashable description of the matroid"""
        pass

    @abc.abstractmethod
    def _make_family(self):
        pass

    def family(self):
        if self._family is None:
            self._family = self._make_family()
        return self._family

    def basis_graph(self):
        if self._bg is None:
            self._bg = build_basis_graph(self.family())
        return self._bg

    def good_cycles(self, b1, b2):
        """
        Returns the template good cycles for the edge b1b2, or None when
        the family has no template that applies.  The cycles may be
        oriented from b2 to b1.
        """
        return None

    @abc.abstractmethod
    def minors(self, e):
        """
        Returns ((contraction, element_map), (deletion, element_map)),
        where each element_map sends the elements of the minor to the
        elements of this matroid.
        """
        pass

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, str(self.key))


class FamilyHandle(MatroidHandle):
    """
    A matroid given only by its basis family.  It has no templates.
    """

    def __init__(self, family):
        super().__init__()
        self._family = family

    @property
    def key(self):
        return ('family', self._family)

    def _make_family(self):
        return self._family

    def minors(self, e):
        contract, delete = split_by_element(self.family(), e)
        identity = {i:i for i in contract.ground}
        return (FamilyHandle(contract), identity), (FamilyHandle(delete), identity)


class GraphicHandle(MatroidHandle):
    """
    The graphic matroid of a multigraph.  Minors keep the edge ids.
    """

    def __init__(self, graph):
        super().__init__()
        self.graph = graph

    @property
    def key(self):
        return ('graphic',) + self.graph.key

    def _make_family(self):
        return enumerate_spanning_trees(self.graph)

    def good_cycles(self, b1, b2):
        try:
            return good_cycles_graphic(self.graph, self.basis_graph(), b1, b2)
        except MBGError as err:
            logger.debug("No graphic templates for (%d,%d): %s", b1, b2, str(err))
            return None

    def minors(self, e):
        split_by_element(self.family(), e)    # raises LoopOrIsthmus
        contract = contract_edge(self.graph, e)
        delete = delete_edge(self.graph, e)
        return ((GraphicHandle(contract), {i:i for i in contract.ids}),
                (GraphicHandle(delete), {i:i for i in delete.ids}))


class CatalanHandle(MatroidHandle):
    """
    A lattice path matroid.  Generalized Catalan matroids without loops
    or isthmuses use the templates of :func:`good_cycles_gencat_min`.
    """

    def __init__(self, matroid):
        super().__init__()
        assert (isinstance(matroid, LatticePathMatroid)), "Expected a lattice path matroid, not %s" % str(type(matroid))
        self.matroid = matroid
        self._dual_bg = None

    @property
    def key(self):
        return self.matroid.key

    def _make_family(self):
        return self.matroid.family()

    def good_cycles(self, b1, b2):
        m = self.matroid
        if not isinstance(m, GenCatalan) or not m.is_loop_free() or min(m.rank, m.corank) < 2:
            return None
        if m.corank < m.rank and self._dual_bg is None:
            self._dual_bg = build_basis_graph(dualize(m).family())
        try:
            return good_cycles_gencat_min(m, self.basis_graph(), b1, b2, dual_graph=self._dual_bg)
        except TooFewGoodCycles:
            raise
        except MBGError as err:
            logger.debug("No Catalan templates for (%d,%d): %s", b1, b2, str(err))
            return None

    def minors(self, e):
        contract, cmap = contract_element(self.matroid, e)
        delete, dmap = delete_element(self.matroid, e)
        return (CatalanHandle(contract), dict(enumerate(cmap))), (CatalanHandle(delete), dict(enumerate(dmap)))


class UniformHandle(MatroidHandle):
    """
    The uniform matroid U_{r,n}.  Its minors are U_{r-1,n-1} and
    U_{r,n-1}, or plain families when those leave the range n > r >= 1.
    """

    def __init__(self, r, n):
        super().__init__()
        self.matroid = UniformMatroid(r, n)

    @property
    def key(self):
        return self.matroid.key

    def _make_family(self):
        return self.matroid.family()

    def good_cycles(self, b1, b2):
        return good_cycles_uniform(self.matroid, self.basis_graph(), b1, b2)

    def minors(self, e):
        r, n = self.matroid.r, self.matroid.n
        emap = dict(enumerate(i for i in range(n) if i != e))
        result = []
        for rank in (r-1, r):
            if n-1 > rank >= 1:
                result.append((UniformHandle(rank, n-1), emap))
            else:
                contract, delete = split_by_element(self.family(), e)
                side = contract if rank == r-1 else delete
                result.append((FamilyHandle(side), {i:i for i in side.ground}))
        return tuple(result)
