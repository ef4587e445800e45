#
# Exact lower bounds on Hamiltonian cycles and good cycles in basis graphs
#
# All arithmetic is on Python integers; the closed form for hc(n,k) is
# evaluated with Fraction and checked to be integral.
#
import dataclasses
import enum
import functools
import logging
import math
from fractions import Fraction

from munch import Munch

from mbg.common.errors import BadParams

__all__ = ['FormulaTag', 'BoundValue', 'superfactorial', 'binomial', 'bound_2conn', 'bound_complete',
           'bound_prism', 'hc_lower', 'hc_closed_form', 'hc_recurrence', 'hc_lower_corollary',
           'catalan_lower', 'hcl_recurrence', 'catalan_step_holds', 'catalan_witness_bound',
           'uniform_lower', 'uniform_good_lower', 'good_bound_graphic', 'good_bound_catalan',
           'bound_table']

logger = logging.getLogger(__name__)


class FormulaTag(enum.Enum):
    """
    The provenance of a bound value.
    """

    two_conn = 1
    """2^(n-3) for 2-edge-connected graphs of order n"""

    complete = 2
    """(n-2)! for the complete basis graph K_n"""

    prism = 3
    """(n-2)!(n-3)! for the prism K_2 x K_{n-1}"""

    hc_three_k = 4
    """sf(k-1) for k-edge-connected graphs of order 3"""

    hc_n_three = 5
    """(n-2)! 2^C(n-1,2) for 3-edge-connected graphs of order n"""

    hc_closed_form = 6
    """The closed-form product for k-edge-connected graphs of order n, with n, k >= 4"""

    hc_corollary = 7
    """The superfactorial product that weakens the closed form, for n > k >= 5"""

    catalan = 8
    """sf(k-1) sf(k-2) for generalized Catalan matroids with a k-Catalan minor"""

    catalan_recurrence = 9
    """(k-1) hcl(k-1)^2 unrolled from hcl(2) = 1"""

    uniform = 10
    """((n-r-1)!(r-1)!)^min(n-r-1, r-1) for U_{r,n}"""

    good_graphic = 11
    """Good cycles per edge for graphic matroids"""

    good_catalan = 12
    """min(r-1, m-1) good cycles per edge for generalized Catalan matroids"""

    good_uniform = 13
    """3(n-r-1)(r-1) good cycles per edge for U_{r,n}"""


@dataclasses.dataclass(frozen=True)
class BoundValue:
    """
    An exact lower bound with its provenance.
    """

    value: int
    formula_tag: FormulaTag
    params: tuple = ()

    def __int__(self):
        return self.value

    def to_json(self):
        return {'params': list(self.params), 'formula_tag': self.formula_tag.name, 'value': self.value}


def _check_int(name, x, low):
    if not isinstance(x, int) or isinstance(x, bool) or x < low:
        raise BadParams("%s must be an integer >= %d, not %s" % (name, low, str(x)))


@functools.lru_cache(maxsize=None)
def superfactorial(x):
    """
    Returns x! (x-1)! ... 0!
    """
    _check_int('x', x, 0)
    if x == 0:
        return 1
    return math.factorial(x) * superfactorial(x-1)


def binomial(a, b):
    """C(a,b), or 0 when b < 0, a < 0 or b > a"""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def bound_2conn(n):
    _check_int('n', n, 3)
    return 2**(n-3)


def bound_complete(n):
    _check_int('n', n, 3)
    return math.factorial(n-2)


def bound_prism(n):
    _check_int('n', n, 3)
    return math.factorial(n-2) * math.factorial(n-3)


def _hc_n_three(n):
    return math.factorial(n-2) * 2**binomial(n-1, 2)


def hc_closed_form(n, k):
    """
    The closed-form lower bound on hc(n,k) for n, k >= 4.
    """
    _check_int('n', n, 4)
    _check_int('k', k, 4)
    value = Fraction(2**binomial(n+k-4, n-3) * 3**binomial(n+k-7, k-3), (n-1)*k)
    for r in range(4, k+1):
        value *= (r*superfactorial(r-1))**binomial(n+k-4-r, n-4)
    for s in range(4, n+1):
        value *= math.factorial(s-1)**binomial(n+k-4-s, k-4)
    assert (value.denominator == 1), "The closed form for hc(%d,%d) is not an integer: %s" % (n, k, value)
    return value.numerator


@functools.lru_cache(maxsize=None)
def hc_recurrence(n, k):
    """
    Unrolls hc(n,k) >= (n-2)(k-1) hc(n-1,k) hc(n,k-1) from the rows
    hc(3,k) = sf(k-1) and hc(n,3) = (n-2)! 2^C(n-1,2).
    """
    _check_int('n', n, 3)
    _check_int('k', k, 3)
    if n == 3:
        return superfactorial(k-1)
    if k == 3:
        return _hc_n_three(n)
    return (n-2)*(k-1)*hc_recurrence(n-1, k)*hc_recurrence(n, k-1)


def hc_lower(n, k):
    """
    A lower bound on HC*(M_G) for every k-edge-connected graph G of
    order n.

    Parameters
    ----------
    n: int
        At least 3.
    k: int
        At least 2.  For k = 2 the bound is 2^(n-3).

    Returns
    -------
    BoundValue

    Raises
    ------
    BadParams
    """
    _check_int('n', n, 3)
    _check_int('k', k, 2)
    if k == 2:
        return BoundValue(bound_2conn(n), FormulaTag.two_conn, (n, k))
    if n == 3:
        return BoundValue(superfactorial(k-1), FormulaTag.hc_three_k, (n, k))
    if k == 3:
        return BoundValue(_hc_n_three(n), FormulaTag.hc_n_three, (n, k))
    value = hc_closed_form(n, k)
    step = (n-2)*(k-1)*hc_lower(n-1, k).value*hc_lower(n, k-1).value
    assert (value <= step), "hc(%d,%d): closed form %d exceeds one recurrence step %d" % (n, k, value, step)
    return BoundValue(value, FormulaTag.hc_closed_form, (n, k))


def hc_lower_corollary(n, k):
    """
    The superfactorial product that the closed form for hc(n,k)
    strictly exceeds, for n > k >= 5.

    Raises
    ------
    BadParams
        Unless n > k >= 5.
    """
    _check_int('k', k, 5)
    _check_int('n', n, k+1)
    value = 1
    for r in range(3, n+1):
        exponent = binomial(n+k-5-r, n-6) + binomial(n+k-4-r, n-4) + binomial(n+k-5-r, k-5)
        value *= superfactorial(r-1)**exponent
    closed = hc_closed_form(n, k)
    assert (value < closed), "Corollary value for (%d,%d) is not below the closed form" % (n, k)
    return BoundValue(value, FormulaTag.hc_corollary, (n, k))


def catalan_lower(k):
    """
    sf(k-1) sf(k-2), the bound on hcl(k) for k >= 2.
    """
    _check_int('k', k, 2)
    return BoundValue(superfactorial(k-1)*superfactorial(k-2), FormulaTag.catalan, (k,))


@functools.lru_cache(maxsize=None)
def hcl_recurrence(k):
    """hcl(2) = 1 and hcl(k) = (k-1) hcl(k-1)^2"""
    _check_int('k', k, 2)
    if k == 2:
        return 1
    return (k-1)*hcl_recurrence(k-1)**2


def catalan_step_holds(k):
    """
    Returns True if (k-1)(sf(k-2) sf(k-3))^2 >= sf(k-1) sf(k-2), the
    induction step from k-1 to k.  The step fails for k = 4 and k = 5,
    and a warning is logged when it does.
    """
    _check_int('k', k, 3)
    left = (k-1)*(superfactorial(k-2)*superfactorial(k-3))**2
    right = superfactorial(k-1)*superfactorial(k-2)
    if left < right:
        logger.warning("Catalan induction step fails at k=%d: %d < %d", k, left, right)
        return False
    return True


def catalan_witness_bound(k):
    """
    The smaller of sf(k-1) sf(k-2) and the unrolled recurrence.
    """
    closed = catalan_lower(k)
    recurrence = hcl_recurrence(k)
    if recurrence < closed.value:
        return BoundValue(recurrence, FormulaTag.catalan_recurrence, (k,))
    return closed


def uniform_lower(r, n):
    """
    ((n-r-1)!(r-1)!)^min(n-r-1, r-1), for n > r >= 1.
    """
    _check_int('r', r, 1)
    _check_int('n', n, r+1)
    base = math.factorial(n-r-1)*math.factorial(r-1)
    return BoundValue(base**min(n-r-1, r-1), FormulaTag.uniform, (r, n))


def uniform_good_lower(r, n):
    _check_int('r', r, 1)
    _check_int('n', n, r+1)
    return BoundValue(3*(n-r-1)*(r-1), FormulaTag.good_uniform, (r, n))


def good_bound_graphic(n, k, exceptional=False):
    """
    Good cycles guaranteed on every basis-graph edge of a k-edge-connected
    graph of order n: (n-2)(k-1) when k >= 3, and 2 when k = 2, n >= 4
    and the graph is neither C_n nor the 1-sum of C_2 and C_{n-1}.
    Otherwise nothing is guaranteed.
    """
    _check_int('n', n, 1)
    _check_int('k', k, 0)
    if k >= 3 and n >= 3:
        value = (n-2)*(k-1)
    elif k == 2 and n >= 4 and not exceptional:
        value = 2
    else:
        value = 0
    return BoundValue(value, FormulaTag.good_graphic, (n, k))


def good_bound_catalan(r, m):
    _check_int('r', r, 2)
    _check_int('m', m, 2)
    return BoundValue(min(r-1, m-1), FormulaTag.good_catalan, (r, m))


def bound_table(family, grid):
    """
    Evaluate the Hamiltonian-cycle bound of a family over a parameter grid.

    Parameters
    ----------
    family: str
        One of 'graphic2', 'graphicK', 'complete', 'prism', 'catalan',
        'uniform' and 'corollary'.
    grid: list
        Parameter tuples, or single integers for one-parameter families.

    Returns
    -------
    list
        Munch rows with the keys params, formula_tag and value.
    """
    rows = []
    for params in grid:
        if not isinstance(params, (tuple, list)):
            params = (params,)
        params = tuple(params)
        if family == 'graphic2':
            bound = hc_lower(params[0], 2)
        elif family == 'graphicK':
            bound = hc_lower(*params)
        elif family == 'complete':
            bound = BoundValue(bound_complete(*params), FormulaTag.complete, params)
        elif family == 'prism':
            bound = BoundValue(bound_prism(*params), FormulaTag.prism, params)
        elif family == 'catalan':
            bound = catalan_lower(*params)
        elif family == 'uniform':
            bound = uniform_lower(*params)
        elif family == 'corollary':
            bound = hc_lower_corollary(*params)
        else:
            raise BadParams("Unknown bound family '%s'" % family)
        rows.append(Munch(params=list(params), formula_tag=bound.formula_tag.name, value=bound.value))
    return rows
