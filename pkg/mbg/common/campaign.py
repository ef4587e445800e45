#
# Classes used to define verification campaigns
#
import abc
import enum
import json
import logging
import textwrap
import concurrent.futures

import numpy as np
from munch import Munch
from pyomo.common.config import (ConfigValue, ConfigBlock, NonNegativeInt, PositiveInt,
                                 add_docstring_list)

from mbg.common.errors import ScaleExceeded

__all__ = ['Status', 'CampaignAPI', 'CampaignResults', 'Campaign', 'make_record', 'REPORT_SCHEMA']

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 1


class Status(enum.Enum):
    """
    The outcome of a verification record or campaign.
    """

    PASS = 0
    """Every exact quantity is at least its bound"""

    CAPPED_PASS = 1
    """A capped count reached its bound and nothing failed"""

    FAIL = 2
    """Some exact quantity is below its bound"""

    @property
    def label(self):
        return self.name.replace('_', '-')

    @staticmethod
    def from_label(label):
        return Status[label.replace('-', '_')]


def make_record(instance, edge, good_cycle_count, bound_good, hc_count, hc_capped, bound_hc,
                witness_count=None, witness_bound=None, template_count=None, bound_template=None,
                template_sound=True, collisions=0):
    """
    Build a verification record and decide its status.

    The record fails when the exact good-cycle count, the template
    count, an uncapped Hamiltonian-cycle count or the witness count is
    below its bound, or when a template produced a cycle the brute-force
    oracle rejects.  The template bound defaults to bound_good.  A count
    of None was not computed.  The record is CAPPED-PASS when the
    Hamiltonian-cycle count stopped at its cap and nothing failed.

    Returns
    -------
    Munch
    """
    if bound_template is None:
        bound_template = bound_good
    fail = good_cycle_count < bound_good or not template_sound
    if template_count is not None and template_count < bound_template:
        fail = True
    if hc_count is not None and not hc_capped and hc_count < bound_hc:
        fail = True
    if witness_count is not None and witness_count < witness_bound:
        fail = True
    if fail:
        status = Status.FAIL
    elif hc_capped:
        status = Status.CAPPED_PASS
    else:
        status = Status.PASS
    return Munch(instance=instance, edge=list(edge), good_cycle_count=good_cycle_count,
                 bound_good=bound_good, template_count=template_count, bound_template=bound_template,
                 template_sound=template_sound,
                 hc_count=hc_count, hc_capped=hc_capped, bound_hc=bound_hc,
                 witness_count=witness_count, witness_bound=witness_bound, collisions=collisions,
                 status=status.label)


class CampaignResults(object):
    """
    The records of a campaign run, in deterministic order.

    Attributes
    ----------
    campaign: str
        The registered name of the campaign.
    config: dict
        The configuration values used for the run.
    records: list
        One Munch per verified (instance, edge).
    """

    def __init__(self, campaign, config, records=None):
        self.campaign = campaign
        self.config = config
        self.records = [] if records is None else records

    @property
    def status(self):
        labels = set(r.status for r in self.records)
        if Status.FAIL.label in labels:
            return Status.FAIL
        if Status.CAPPED_PASS.label in labels:
            return Status.CAPPED_PASS
        return Status.PASS

    def failures(self):
        return [r for r in self.records if r.status == Status.FAIL.label]

    def to_json(self):
        return {'schema': REPORT_SCHEMA,
                'campaign': self.campaign,
                'config': self.config,
                'records': [dict(r) for r in self.records],
                'status': self.status.label}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def __str__(self):
        counts = {}
        for r in self.records:
            counts[r.status] = counts.get(r.status, 0) + 1
        summary = ", ".join("%s=%d" % (k, counts[k]) for k in sorted(counts))
        return "Campaign: %s\n  records: %d\n  %s\n  status: %s" % (self.campaign, len(self.records), summary, self.status.label)


def _verify_task(args):
    name, values, descriptor, edge = args
    campaign = Campaign(name, **values)
    return campaign.verify(descriptor, edge)


class CampaignAPI(abc.ABC):
    """
    The base class for verification campaigns.

    A campaign enumerates instance descriptors from its parameter grid,
    turns each into an instance with its bounds, and verifies the
    selected basis-graph edges of every instance.
    """

    name = None

    config = ConfigBlock()
    config.declare('cap', ConfigValue(
        default=True,
        domain=bool,
        description="If True, Hamiltonian-cycle counts on basis graphs above exact_limit stop at the bound. (default is True)",
        ))
    config.declare('exact_limit', ConfigValue(
        default=60,
        domain=NonNegativeInt,
        description="Basis graphs with at most this many vertices are always counted exactly. (default is 60)",
        ))
    config.declare('max_bases', ConfigValue(
        default=2000,
        domain=PositiveInt,
        description="Instances with more bases raise ScaleExceeded. (default is 2000)",
        ))
    config.declare('skip_large', ConfigValue(
        default=False,
        domain=bool,
        description="If True, instances above max_bases are skipped with a warning. (default is False)",
        ))
    config.declare('seed', ConfigValue(
        default=0,
        domain=NonNegativeInt,
        description="Seed for the sampled subsets of edges. (default is 0)",
        ))
    config.declare('sample', ConfigValue(
        default=None,
        domain=PositiveInt,
        description="The maximum number of edges verified per instance.  If None, all edges are verified. (default is None)",
        ))
    config.declare('orbit', ConfigValue(
        default=False,
        domain=bool,
        description="If True, edge-transitive basis graphs are verified on one edge. (default is False)",
        ))
    config.declare('witnesses', ConfigValue(
        default=False,
        domain=bool,
        description="If True, witness sets are generated and checked against the bound. (default is False)",
        ))
    config.declare('workers', ConfigValue(
        default=1,
        domain=PositiveInt,
        description="The number of worker processes. (default is 1)",
        ))

    def __init__(self):
        # Create a per-instance copy of the configuration data
        self.config = self.config()

    @abc.abstractmethod
    def descriptors(self, config):
        """
        Yields the JSON-compatible instance descriptors of the grid.
        """
        pass

    @abc.abstractmethod
    def instance(self, descriptor):
        """
        Returns a Munch with the handle and the bounds of an instance.
        """
        pass

    @abc.abstractmethod
    def verify(self, descriptor, edge, config=None):
        """
        Verify one edge of an instance and return its record.
        """
        pass

    def select_edges(self, instance, config):
        edges = list(instance.handle.basis_graph().edges())
        if config.orbit and instance.get('edge_transitive', False):
            return edges[:1]
        if config.sample is not None and config.sample < len(edges):
            rng = np.random.default_rng(config.seed)
            chosen = rng.choice(len(edges), size=config.sample, replace=False)
            return [edges[i] for i in sorted(chosen)]
        return edges

    def run(self, **options):
        """
        Executes the campaign.

        Parameters
        ----------
        options
            Keyword options that are used to configure the campaign.

        {}
        Returns
        -------
        CampaignResults
            One record per verified edge.

        Raises
        ------
        ScaleExceeded
            An instance has more than max_bases bases and skip_large is False.
        """
        config = self.config()
        self._update_config(options, config=config)
        tasks = []
        for descriptor in self.descriptors(config):
            inst = self.instance(descriptor)
            size = len(inst.handle.family())
            if size > config.max_bases:
                e = "Instance %s has %d bases, above max_bases=%d" % (json.dumps(descriptor, sort_keys=True), size, config.max_bases)
                if config.skip_large:
                    logger.warning(e)
                    continue
                logger.error(e)
                raise ScaleExceeded(e, instance=descriptor)
            if size < 3:
                logger.info("Skipping %s: its basis graph has %d vertices", json.dumps(descriptor, sort_keys=True), size)
                continue
            edges = self.select_edges(inst, config)
            logger.info("Instance %s: %d bases, %d edges to verify", json.dumps(descriptor, sort_keys=True), size, len(edges))
            tasks.extend((descriptor, edge) for edge in edges)
        values = config.value()
        results = CampaignResults(self.name, values)
        if config.workers == 1 or len(tasks) < 2:
            results.records = [self.verify(d, edge, config=config) for d, edge in tasks]
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=config.workers) as pool:
                args = [(self.name, values, d, edge) for d, edge in tasks]
                results.records = list(pool.map(_verify_task, args))
        return results

    __run_doc__ = run.__doc__

    @staticmethod
    def _generate_run_docstring(cls):
        """
        Generate the docstring for cls.run, including the description
        of the keyword arguments defined by a pyomo configuration object.
        """
        cls.run.__doc__ = CampaignAPI.__run_doc__.format( add_docstring_list("", cls.config, 8) )

    def _update_config(self, config_options, config=None, validate_options=True):
        if config is None:
            config = self.config
        keys = set(config_options.keys())
        for k,v in config_options.items():
            if k in config:
                config[k] = v
                keys.remove(k)
        if validate_options:
            assert (len(keys) == 0), "Unexpected options to run() have been specified: %s" % " ".join(sorted(k for k in keys))
        return {key:config_options[key] for key in keys}

    def __bool__(self):
        raise RuntimeError("Casting a campaign to bool() is not allowed.")

CampaignAPI._generate_run_docstring(CampaignAPI)


class CampaignFactory(object):
    """
    A class that manages a registry of verification campaigns.
    """

    _registry = {}
    _doc = {}

    def register(self, cls=None, *, name=None, doc=None):
        """
        Register a campaign with the specified name.

        Parameters
        ----------
        cls
            Class type for the campaign
        name: str
            Unique name of the campaign
        doc: str
            Short description of the campaign

        Returns
        -------
        decorator
            If the **cls** parameter is None, then a class
            decorator function is returned that can be used to
            register a campaign.
        """
        def decorator(cls):
            assert (name is not None), "Must register a campaign with a name"
            CampaignFactory._registry[name] = cls
            CampaignFactory._doc[name] = doc
            cls.name = name
            return cls
        if cls is None:
            return decorator
        return decorator(cls)

    def __iter__(self):
        for name in sorted(CampaignFactory._doc.keys()):
            yield name

    def __contains__(self, name):
        return name in CampaignFactory._registry

    def summary(self):
        """
        Print a summary of all campaigns.
        """
        for name in self:
            print(name)
            print(textwrap.indent("\n".join(textwrap.wrap(self.description(name))), "    "))
            print("")

    def description(self, name):
        assert (name in CampaignFactory._registry), "Unknown campaign '%s' specified" % name
        return CampaignFactory._doc[name]

    def __call__(self, name, **options):
        """
        Constructs the specified campaign and applies the options to
        its configuration.
        """
        assert (name in CampaignFactory._registry), "Unknown campaign '%s' specified" % name
        campaign = CampaignFactory._registry[name]()
        campaign._update_config(options)
        return campaign


Campaign = CampaignFactory()
"""
Campaign is a global instance of the :class:`CampaignFactory`.
This object provides the registry of verification campaigns.
"""
