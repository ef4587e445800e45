#
# Verification campaigns for the matroid families
#
import json
import logging

from munch import Munch
from pyomo.common.config import ConfigValue, NonNegativeInt, PositiveInt

from mbg.common import CampaignAPI, Campaign, make_record
from mbg.matroid import good_cycles_bruteforce
from mbg.graphic import Exceptional, edge_connectivity, multigraph_pool, parse_generator, recognize_exceptional
from mbg.latticepath import catalan_minor_order, loop_free_core, orient_edge
from mbg.hamiltonian import WitnessGenerator, count_hc_through_edge
from mbg.bounds import (bound_2conn, catalan_witness_bound, good_bound_catalan, good_bound_graphic,
                        hc_lower, uniform_good_lower, uniform_lower)
from mbg.harness.instances import handle_from_descriptor

__all__ = ['HamiltonianCampaign', 'Graphic2Campaign', 'GraphicKCampaign', 'CatalanCampaign',
           'GenCatalanCampaign', 'UniformCampaign']

logger = logging.getLogger(__name__)


class HamiltonianCampaign(CampaignAPI):
    """
    Compares brute-force good-cycle and Hamiltonian-cycle counts, and
    optionally witness sets, with the bounds of an instance.
    """

    config = CampaignAPI.config()
    config.declare('max_cap', ConfigValue(
        default=100000,
        domain=PositiveInt,
        description="Hamiltonian cycles are not counted when the basis graph is above exact_limit and the bound exceeds this value. (default is 100000)",
        ))
    config.declare('cutoff', ConfigValue(
        default=5,
        domain=NonNegativeInt,
        description="The exhaustive cutoff of the witness generator. (default is 5)",
        ))

    def __init__(self):
        super().__init__()
        self._instances = {}
        self._generator = None

    def instance(self, descriptor):
        key = json.dumps(descriptor, sort_keys=True)
        if key not in self._instances:
            inst = self._bounds(handle_from_descriptor(descriptor))
            inst.descriptor = descriptor
            self._instances[key] = inst
        return self._instances[key]

    def _bounds(self, handle):
        """
        Returns a Munch with handle, bound_good, bound_hc, witness_bound
        and edge_transitive.
        """
        raise NotImplementedError

    def _orientations(self, handle, b1, b2):
        """
        The ordered exchanges (B1, B2) of the edge that the good-cycle
        bound covers.  Both by default.
        """
        return ((b1, b2), (b2, b1))

    def verify(self, descriptor, edge, config=None):
        if config is None:
            config = self.config
        inst = self.instance(descriptor)
        handle = inst.handle
        bg = handle.basis_graph()
        b1, b2 = edge
        oracle = {}
        orientations = self._orientations(handle, b1, b2)
        for u, v in orientations:
            oracle[u, v] = good_cycles_bruteforce(bg, u, v)
        good_count = min(len(cycles) for cycles in oracle.values())
        template_count = None
        sound = True
        counts = []
        for u, v in orientations:
            templates = handle.good_cycles(u, v)
            if templates is None:
                counts = None
                break
            counts.append(len(templates))
            for c in templates:
                if (c.b1, c.b2) not in oracle:
                    oracle[c.b1, c.b2] = good_cycles_bruteforce(bg, c.b1, c.b2)
                sound = sound and c in oracle[c.b1, c.b2]
        if counts:
            template_count = min(counts)
        if not config.cap or len(bg) <= config.exact_limit:
            hc = count_hc_through_edge(bg, edge)
        elif inst.bound_hc <= config.max_cap:
            hc = count_hc_through_edge(bg, edge, cap=inst.bound_hc)
        else:
            logger.warning("Skipping the Hamiltonian-cycle count on %s: bound %d above max_cap", json.dumps(descriptor, sort_keys=True), inst.bound_hc)
            hc = None
        witness_count = witness_bound = None
        collisions = 0
        if config.witnesses:
            if self._generator is None:
                self._generator = WitnessGenerator(cutoff=config.cutoff)
            witness_bound = inst.witness_bound
            witnesses = self._generator.generate(handle, edge, limit=max(witness_bound, 1))
            witness_count = len(witnesses)
            collisions = witnesses.collisions
        return make_record(descriptor, edge, good_count, inst.bound_good,
                           None if hc is None else hc.value, False if hc is None else hc.capped, inst.bound_hc,
                           witness_count=witness_count, witness_bound=witness_bound,
                           template_count=template_count, bound_template=inst.get('bound_template'),
                           template_sound=sound, collisions=collisions)


class _GraphicPoolCampaign(HamiltonianCampaign):

    config = HamiltonianCampaign.config()
    config.declare('n_min', ConfigValue(
        default=3,
        domain=PositiveInt,
        description="The smallest graph order in the pool. (default is 3)",
        ))
    config.declare('n_max', ConfigValue(
        default=5,
        domain=PositiveInt,
        description="The largest graph order in the pool. (default is 5)",
        ))
    config.declare('m_max', ConfigValue(
        default=8,
        domain=PositiveInt,
        description="The largest number of edges in the pool. (default is 8)",
        ))
    config.declare('generators', ConfigValue(
        default=[],
        domain=list,
        description="Extra graphs given as generator expressions, e.g. 'complete(4)'. (default is [])",
        ))

    min_connectivity = 2

    def descriptors(self, config):
        for g in multigraph_pool(n_min=config.n_min, n_max=config.n_max, m_max=config.m_max,
                                 min_connectivity=self.min_connectivity):
            yield {'family': 'graphic', 'graph': g.to_json()}
        for text in config.generators:
            yield {'family': 'graphic', 'graph': parse_generator(text).to_json()}


@Campaign.register(name='graphic2', doc='2-edge-connected multigraphs: every basis-graph edge is on 2^(n-3) Hamiltonian cycles')
class Graphic2Campaign(_GraphicPoolCampaign):

    min_connectivity = 2

    def _bounds(self, handle):
        g = handle.graph
        n = g.n_vertices
        exceptional = recognize_exceptional(g) != Exceptional.neither
        bound = bound_2conn(n)
        # The fact templates carry no count guarantee below 3-edge-connectivity
        return Munch(handle=handle, bound_good=good_bound_graphic(n, 2, exceptional).value,
                     bound_template=0, bound_hc=bound, witness_bound=bound, edge_transitive=False)


@Campaign.register(name='graphicK', doc='k-edge-connected multigraphs, k >= 3: good cycles (n-2)(k-1) and the hc(n,k) bound')
class GraphicKCampaign(_GraphicPoolCampaign):

    min_connectivity = 3

    def _bounds(self, handle):
        g = handle.graph
        n = g.n_vertices
        k = edge_connectivity(g)
        return Munch(handle=handle, bound_good=good_bound_graphic(n, k).value,
                     bound_hc=hc_lower(n, k).value, witness_bound=bound_2conn(n), edge_transitive=False)


class _LatticePathCampaign(HamiltonianCampaign):

    config = HamiltonianCampaign.config()
    config.exact_limit = 14

    def _orientations(self, handle, b1, b2):
        # The templates need e < g, in the dual when the corank is smaller
        core = loop_free_core(handle.matroid)
        u, v = orient_edge(handle.basis_graph(), b1, b2)
        if core.corank < core.rank:
            return ((v, u),)
        return ((u, v),)


@Campaign.register(name='catalan', doc='k-Catalan matroids: sf(k-1) sf(k-2) Hamiltonian cycles per basis-graph edge')
class CatalanCampaign(_LatticePathCampaign):

    config = _LatticePathCampaign.config()
    config.declare('k_min', ConfigValue(
        default=2,
        domain=PositiveInt,
        description="The smallest k. (default is 2)",
        ))
    config.declare('k_max', ConfigValue(
        default=3,
        domain=PositiveInt,
        description="The largest k. (default is 3)",
        ))

    def descriptors(self, config):
        for k in range(max(config.k_min, 2), config.k_max+1):
            yield {'family': 'catalan', 'k': k}

    def _bounds(self, handle):
        k = handle.matroid.rank
        bound = catalan_witness_bound(k).value
        return Munch(handle=handle, bound_good=good_bound_catalan(k, k).value,
                     bound_hc=bound, witness_bound=bound, edge_transitive=False)


@Campaign.register(name='gencat', doc='Generalized Catalan matroids M[Q]: bounds from their largest Catalan minor')
class GenCatalanCampaign(_LatticePathCampaign):

    config = _LatticePathCampaign.config()
    config.declare('words', ConfigValue(
        default=['NNEE', 'NENE', 'NNENEE', 'NENNEE', 'NNEENE', 'NENENE'],
        domain=list,
        description="The step words Q. (default is NNEE, NENE, NNENEE, NENNEE, NNEENE, NENENE)",
        ))

    def descriptors(self, config):
        for q in config.words:
            yield {'family': 'gencat', 'q': str(q).upper()}

    def _bounds(self, handle):
        core = loop_free_core(handle.matroid)
        if min(core.rank, core.corank) >= 2:
            bound_good = good_bound_catalan(core.rank, core.corank).value
        else:
            bound_good = 0
        k = catalan_minor_order(handle.matroid)
        bound = catalan_witness_bound(k).value if k >= 2 else 1
        return Munch(handle=handle, bound_good=bound_good, bound_hc=bound, witness_bound=bound,
                     edge_transitive=False)


@Campaign.register(name='uniform', doc='Uniform matroids U_{r,n}: ((n-r-1)!(r-1)!)^min(n-r-1,r-1) Hamiltonian cycles per edge')
class UniformCampaign(HamiltonianCampaign):

    config = HamiltonianCampaign.config()
    config.exact_limit = 15
    config.declare('grid', ConfigValue(
        default=[[2, 4], [2, 5], [3, 5], [3, 6]],
        domain=list,
        description="The (r, n) pairs. (default is [[2,4],[2,5],[3,5],[3,6]])",
        ))

    def descriptors(self, config):
        for r, n in config.grid:
            yield {'family': 'uniform', 'r': int(r), 'n': int(n)}

    def _bounds(self, handle):
        r, n = handle.matroid.r, handle.matroid.n
        bound = uniform_lower(r, n).value
        return Munch(handle=handle, bound_good=uniform_good_lower(r, n).value, bound_hc=bound,
                     witness_bound=bound, edge_transitive=True)
