#
# Recursive construction of Hamiltonian cycles through a basis-graph edge
#
import logging

from pyomo.common.config import ConfigBlock, ConfigValue, NonNegativeInt, PositiveInt, add_docstring_list

from mbg.common.errors import NoGoodCycle, NotAnEdge, TooSmall
from mbg.matroid import cycle_edge, glue_hamiltonian, good_cycles_bruteforce, minor_vertex_map
from mbg.hamiltonian.count import enumerate_hc_through_edge
from mbg.hamiltonian.constructions import witnesses_complete, witnesses_prism, detect_complete, detect_prism
from mbg.hamiltonian.witness import WitnessSet, validate_witness_set

__all__ = ['WitnessGenerator', 'witnesses_recursive']

logger = logging.getLogger(__name__)


class WitnessGenerator(object):
    """
    Builds witness sets by splitting a matroid on the exchanged element
    of a good cycle.

    For an edge b1b2 and a good cycle b1 b2 b3 b4 with element e, every
    Hamiltonian cycle of BG(M/e) through b1b4 and every Hamiltonian
    cycle of BG(M-e) through b2b3 glue to a Hamiltonian cycle of BG(M)
    through b1b2.  Complete and prism basis graphs use closed-form
    constructions, and small basis graphs are enumerated exhaustively.

    Witness sets are cached per matroid, edge and configuration.
    """

    config = ConfigBlock()
    config.declare('cutoff', ConfigValue(
        default=5,
        domain=NonNegativeInt,
        description="Basis graphs with at most this many vertices are enumerated exhaustively. (default is 5)",
        ))
    config.declare('limit', ConfigValue(
        default=None,
        domain=PositiveInt,
        description="The maximum number of witnesses kept for each edge.  If None, all are kept. (default is None)",
        ))
    config.declare('validate', ConfigValue(
        default=True,
        domain=bool,
        description="If True, every glued cycle is checked to be Hamiltonian. (default is True)",
        ))
    config.declare('fallback', ConfigValue(
        default=True,
        domain=bool,
        description="If True, brute-force good cycles or exhaustive search are used when no template applies. (default is True)",
        ))

    def __init__(self, **options):
        # Create a per-instance copy of the configuration data
        self.config = self.config()
        self._update_config(options)
        self._memo = {}
        self._handles = {}

    def _update_config(self, config_options, config=None, validate_options=True):
        if config is None:
            config = self.config
        keys = set(config_options.keys())
        for k,v in config_options.items():
            if k in config:
                config[k] = v
                keys.remove(k)
        if validate_options:
            assert (len(keys) == 0), "Unexpected options to generate() have been specified: %s" % " ".join(sorted(k for k in keys))
        return {key:config_options[key] for key in keys}

    def generate(self, handle, edge, **options):
        """
        Generate Hamiltonian cycles of BG(M) through an edge.

        Parameters
        ----------
        handle: MatroidHandle
            The matroid M.
        edge: tuple
            Two adjacent vertices of BG(M).
        options
            Keyword options that override the configuration for this call.

        {}
        Returns
        -------
        WitnessSet
            Distinct Hamiltonian cycles through the edge.

        Raises
        ------
        TooSmall
            BG(M) has fewer than 3 vertices.
        NotAnEdge
        NoGoodCycle
            The fallback is disabled and an edge with no good cycle was met.
        """
        config = self.config()
        self._update_config(options, config=config)
        handle = self._cached(handle)
        bg = handle.basis_graph()
        b1, b2 = edge
        if len(bg) < 3:
            raise TooSmall("BG has %d vertices and no Hamiltonian cycle" % len(bg))
        if not (0 <= b1 < len(bg) and 0 <= b2 < len(bg)) or not bg.has_edge(b1, b2):
            raise NotAnEdge("(%s, %s) is not an edge of the basis graph" % (b1, b2))
        cycles, collisions = self._witnesses(handle, (b1, b2), config)
        witnesses = WitnessSet((b1, b2), cycles, collisions)
        if config.validate:
            validate_witness_set(bg, witnesses)
        logger.debug("%s edge (%d,%d): %d witnesses", str(handle.key), b1, b2, len(witnesses))
        return witnesses

    __generate_doc__ = generate.__doc__

    @staticmethod
    def _generate_docstring(cls):
        cls.generate.__doc__ = WitnessGenerator.__generate_doc__.format( add_docstring_list("", cls.config, 8) )

    def _cached(self, handle):
        return self._handles.setdefault(handle.key, handle)

    def _witnesses(self, handle, edge, config):
        key = (handle.key, cycle_edge(*edge), config.limit, config.cutoff, config.fallback)
        if key not in self._memo:
            self._memo[key] = self._construct(handle, edge, config)
        return self._memo[key]

    def _construct(self, handle, edge, config):
        bg = handle.basis_graph()
        limit = config.limit
        if detect_complete(bg):
            return _first(witnesses_complete(len(bg), edge), limit), 0
        labels = detect_prism(bg)
        if labels is not None:
            inverse = {v:k for k,v in labels.items()}
            cycles = witnesses_prism(len(bg)//2+1, (inverse[edge[0]], inverse[edge[1]]), labels=labels)
            return _first(cycles, limit), 0
        if len(bg) <= config.cutoff:
            return tuple(enumerate_hc_through_edge(bg, edge, limit=limit)), 0
        goods = self._good_cycles(handle, bg, edge, config)
        if len(goods) == 0:
            logger.warning("No good cycle for edge %s of %s; using exhaustive search", str(edge), str(handle.key))
            return tuple(enumerate_hc_through_edge(bg, edge, limit=limit)), 0

        found = []
        seen = set()
        collisions = 0
        for good in sorted(goods, key=lambda c: c.sort_key()):
            (contract, cmap), (delete, dmap) = handle.minors(good.e)
            contract = self._cached(contract)
            delete = self._cached(delete)
            xs = self._side(bg, contract, cmap, good.e, (good.b1, good.b4), config)
            ys = self._side(bg, delete, dmap, None, (good.b2, good.b3), config)
            logger.debug("Good cycle %s: %d x %d side cycles", str(good.vertices()), len(xs), len(ys))
            for hx in xs:
                for hy in ys:
                    cycle = glue_hamiltonian(bg, hx, good, hy, validate=config.validate)
                    if cycle in seen:
                        collisions += 1
                        logger.warning("Gluing collision for edge %s of %s", str(edge), str(handle.key))
                        continue
                    seen.add(cycle)
                    found.append(cycle)
                    if limit is not None and len(found) >= limit:
                        return tuple(found), collisions
        return tuple(found), collisions

    def _good_cycles(self, handle, bg, edge, config):
        goods = handle.good_cycles(*edge)
        if goods:
            return goods
        if not config.fallback:
            raise NoGoodCycle("No template good cycle for edge %s of %s" % (str(edge), str(handle.key)))
        forward = good_cycles_bruteforce(bg, edge[0], edge[1])
        backward = good_cycles_bruteforce(bg, edge[1], edge[0])
        return forward if len(forward) >= len(backward) else backward

    def _side(self, bg, minor, emap, extra, edge, config):
        #
        # Witnesses of one side of the split, in the vertex indices of bg
        #
        vmap = minor_vertex_map(bg, minor.family(), emap, extra)
        if len(vmap) == 2:
            return (None,)
        inverse = {v:i for i,v in enumerate(vmap)}
        cycles, _ = self._witnesses(minor, (inverse[edge[0]], inverse[edge[1]]), config)
        return tuple(frozenset(cycle_edge(vmap[a], vmap[b]) for a,b in c) for c in cycles)

WitnessGenerator._generate_docstring(WitnessGenerator)


def _first(cycles, limit):
    # A deterministic subset of a closed-form construction
    ordered = sorted(cycles, key=sorted)
    if limit is not None:
        ordered = ordered[:limit]
    return tuple(ordered)


def witnesses_recursive(handle, edge, **options):
    """
    Returns the :class:`WitnessSet` built by a new :class:`WitnessGenerator`.
    """
    return WitnessGenerator(**options).generate(handle, edge)
