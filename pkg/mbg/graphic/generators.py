#
# Named multigraph generators
#
import re

from mbg.common.errors import BadParams
from mbg.graphic.multigraph import Multigraph

__all__ = ['cycle', 'k2_sum_cycle', 'complete', 'theta', 'prism', 'parse_generator', 'GENERATORS']


def _numbered(pairs):
    return [(i, u, v) for i,(u,v) in enumerate(pairs)]


def cycle(n):
    """
    The cycle C_n.  C_2 is a pair of parallel edges.
    """
    if n < 2:
        raise BadParams("cycle(n) requires n >= 2")
    return Multigraph(n, _numbered((i, (i+1) % n) for i in range(n)))


def k2_sum_cycle(n):
    """
    The 1-sum of C_2 and C_{n-1}: a cycle on vertices 0..n-2 and a
    vertex n-1 joined to vertex 0 by two parallel edges.

    The cycle edges have ids 0..n-2 and the parallel pair has ids n-1, n.
    """
    if n < 3:
        raise BadParams("k2_sum_cycle(n) requires n >= 3")
    pairs = [(i, (i+1) % (n-1)) for i in range(n-1)]
    pairs += [(0, n-1), (0, n-1)]
    return Multigraph(n, _numbered(pairs))


def complete(n):
    """The complete graph K_n"""
    if n < 1:
        raise BadParams("complete(n) requires n >= 1")
    return Multigraph(n, _numbered((u, v) for u in range(n) for v in range(u+1, n)))


def theta(a, b, c):
    """
    Three internally disjoint paths of lengths a, b and c between the
    vertices 0 and 1.
    """
    if min(a, b, c) < 1:
        raise BadParams("theta(a,b,c) requires paths of length at least one")
    pairs = []
    n = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length-1):
            pairs.append((prev, n))
            prev = n
            n += 1
        pairs.append((prev, 1))
    return Multigraph(n, _numbered(pairs))


def prism(n):
    """
    The circular ladder C_n x K_2: an outer cycle 0..n-1, an inner
    cycle n..2n-1, and the rungs i -- n+i.
    """
    if n < 3:
        raise BadParams("prism(n) requires n >= 3")
    pairs = [(i, (i+1) % n) for i in range(n)]
    pairs += [(n+i, n+(i+1) % n) for i in range(n)]
    pairs += [(i, n+i) for i in range(n)]
    return Multigraph(2*n, _numbered(pairs))


GENERATORS = {
    'cycle': cycle,
    'k2_sum_cycle': k2_sum_cycle,
    'complete': complete,
    'theta': theta,
    'prism': prism,
    }

_call = re.compile(r'^\s*([a-z0-9_]+)\s*\(\s*([0-9,\s]*)\)\s*$')


def parse_generator(text):
    """
    Build a multigraph from an expression such as 'theta(1,2,2)'.

    Raises
    ------
    BadParams
    """
    match = _call.match(text)
    if match is None or match.group(1) not in GENERATORS:
        raise BadParams("Unknown graph generator '%s'.  Expected one of: %s" % (text, ", ".join("%s(...)" % k for k in sorted(GENERATORS))))
    args = [int(a) for a in match.group(2).split(',') if a.strip()]
    try:
        return GENERATORS[match.group(1)](*args)
    except TypeError:
        raise BadParams("Wrong number of arguments in '%s'" % text) from None
