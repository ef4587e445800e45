#
# Resolve family names and parameters into matroid handles
#
import json
import logging
import os.path

from mbg.common.errors import BadParams
from mbg.matroid import family_from_json
from mbg.graphic import Multigraph, parse_generator
from mbg.latticepath import catalan_matroid, generalized_catalan
from mbg.hamiltonian import GraphicHandle, CatalanHandle, UniformHandle, FamilyHandle

__all__ = ['FAMILIES', 'parse_ints', 'descriptor_from_params', 'handle_from_descriptor', 'resolve']

logger = logging.getLogger(__name__)

FAMILIES = ('graphic', 'catalan', 'gencat', 'uniform', 'json')


def parse_ints(text, count=None):
    """
    Parse '2,4' into (2, 4).

    Raises
    ------
    BadParams
    """
    try:
        values = tuple(int(x) for x in str(text).split(',') if x.strip())
    except ValueError:
        raise BadParams("Expected comma-separated integers, not '%s'" % text) from None
    if count is not None and len(values) != count:
        raise BadParams("Expected %d comma-separated integers, not '%s'" % (count, text))
    return values


def _load_json(path):
    if not os.path.exists(path):
        raise BadParams("File '%s' does not exist" % path)
    with open(path, 'r') as INPUT:
        return json.load(INPUT)


def descriptor_from_params(family, params):
    """
    Returns the JSON-compatible descriptor for a family and its --params text.

    Families
    --------
    graphic
        A generator expression such as 'theta(1,2,2)', or a JSON file
        with the keys n and edges.
    catalan
        k, for the k-Catalan matroid.
    gencat
        A step word Q over N and E.
    uniform
        r,n
    json
        A JSON file with a basis family.
    """
    if family == 'graphic':
        if params.endswith('.json'):
            graph = Multigraph.from_json(_load_json(params))
        else:
            graph = parse_generator(params)
        return {'family': 'graphic', 'graph': graph.to_json()}
    if family == 'catalan':
        k, = parse_ints(params, 1)
        return {'family': 'catalan', 'k': k}
    if family == 'gencat':
        return {'family': 'gencat', 'q': generalized_catalan(params).q}
    if family == 'uniform':
        r, n = parse_ints(params, 2)
        return {'family': 'uniform', 'r': r, 'n': n}
    if family == 'json':
        return {'family': 'json', 'bases': _load_json(params)}
    raise BadParams("Unknown family '%s'.  Expected one of: %s" % (family, ", ".join(FAMILIES)))


def handle_from_descriptor(descriptor):
    """
    Returns the :class:`MatroidHandle` described by a descriptor.
    """
    family = descriptor.get('family')
    if family == 'graphic':
        return GraphicHandle(Multigraph.from_json(descriptor['graph']))
    if family == 'catalan':
        return CatalanHandle(catalan_matroid(descriptor['k']))
    if family == 'gencat':
        return CatalanHandle(generalized_catalan(descriptor['q']))
    if family == 'uniform':
        return UniformHandle(descriptor['r'], descriptor['n'])
    if family == 'json':
        return FamilyHandle(family_from_json(descriptor['bases']))
    raise BadParams("Unknown family '%s' in an instance descriptor" % str(family))


def resolve(family, params):
    """Returns (descriptor, handle)"""
    descriptor = descriptor_from_params(family, params)
    return descriptor, handle_from_descriptor(descriptor)
