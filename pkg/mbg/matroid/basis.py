#
# Basis families of finite matroids
#
import logging

from mbg.common.errors import InvalidBasisFamily, LoopOrIsthmus

__all__ = ['BasisFamily', 'basis_axiom_violation', 'check_basis_axiom',
           'split_by_element', 'family_to_json', 'family_from_json']

logger = logging.getLogger(__name__)


def _sort_key(basis):
    return tuple(sorted(basis))


class BasisFamily(object):
    """
    The bases of a matroid, in canonical order.

    Each basis is stored as a frozenset of element ids.  Bases are
    ordered lexicographically by their sorted element lists, so the
    position of a basis in this family is a reproducible vertex index
    of the basis graph.

    Parameters
    ----------
    bases
        An iterable of iterables of non-negative integers.
    ground
        The element ids of the ground set.  By default this is
        ``0..max_id``.  Graphic minors keep the edge ids of their
        parent graph, so their ground sets need not be contiguous.

    Raises
    ------
    InvalidBasisFamily
        The family is empty, repeats a basis, mixes cardinalities, or
        uses an element outside the ground set.
    """

    def __init__(self, bases, ground=None):
        bases = [frozenset(B) for B in bases]
        if len(bases) == 0:
            raise InvalidBasisFamily("A basis family cannot be empty")
        ranks = set(len(B) for B in bases)
        if len(ranks) != 1:
            raise InvalidBasisFamily("Bases have different cardinalities: %s" % sorted(ranks))
        unique = set(bases)
        if len(unique) != len(bases):
            raise InvalidBasisFamily("The basis family contains repeated bases")
        used = frozenset().union(*unique)
        if ground is None:
            ground = range(max(used)+1) if used else range(0)
        self.ground = tuple(sorted(set(ground)))
        if not used <= set(self.ground):
            raise InvalidBasisFamily("Bases use elements outside the ground set: %s" % sorted(used - set(self.ground)))
        if any(i < 0 for i in self.ground):
            raise InvalidBasisFamily("Element ids must be non-negative")
        self.rank = ranks.pop()
        self.bases = tuple(sorted(unique, key=_sort_key))
        self._index = {B:i for i,B in enumerate(self.bases)}

    @property
    def ground_size(self):
        return len(self.ground)

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __getitem__(self, i):
        return self.bases[i]

    def __contains__(self, basis):
        return frozenset(basis) in self._index

    def __eq__(self, other):
        if not isinstance(other, BasisFamily):
            return NotImplemented
        return self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        return hash((self.ground, self.bases))

    def __repr__(self):
        return "BasisFamily(ground_size=%d, rank=%d, bases=%d)" % (self.ground_size, self.rank, len(self))

    def index(self, basis):
        """
        Returns the position of a basis in this family.

        Raises
        ------
        KeyError
            The set is not a basis.
        """
        return self._index[frozenset(basis)]

    def loops(self):
        """Elements that lie in no basis"""
        used = frozenset().union(*self.bases)
        return frozenset(self.ground) - used

    def isthmuses(self):
        """Elements that lie in every basis"""
        return frozenset.intersection(*self.bases)

    def relabel(self, mapping, ground=None):
        """
        Returns the family obtained by renaming every element i as mapping[i].
        """
        return BasisFamily((frozenset(mapping[i] for i in B) for B in self.bases),
                           ground=ground if ground is not None else [mapping[i] for i in self.ground])


def basis_axiom_violation(family):
    """
    Search for a violation of the basis exchange axiom.

    Returns
    -------
    tuple or None
        The first triple (B1, B2, e) with e in B1-B2 such that no
        g in B2-B1 makes B1-e+g a basis, or None when the axiom holds.
    """
    for B1 in family:
        for B2 in family:
            if B1 is B2:
                continue
            for e in sorted(B1 - B2):
                base = B1 - {e}
                if not any((base | {g}) in family for g in B2 - B1):
                    return (B1, B2, e)
    return None


def check_basis_axiom(family):
    """
    Returns True if the family satisfies the basis exchange axiom.

    The first violating triple is logged as a warning.
    """
    violation = basis_axiom_violation(family)
    if violation is None:
        return True
    B1, B2, e = violation
    logger.warning("Basis exchange fails for B1=%s B2=%s e=%d", sorted(B1), sorted(B2), e)
    return False


def split_by_element(family, e):
    """
    Split a basis family on the membership of element e.

    Parameters
    ----------
    family: BasisFamily
        The bases of a matroid M.
    e: int
        An element that is neither a loop nor an isthmus.

    Returns
    -------
    tuple
        (contract_side, delete_side) where contract_side holds B-e for
        the bases containing e (the bases of M/e) and delete_side holds
        the bases avoiding e (the bases of M minus e).  Both families
        keep the original element ids.

    Raises
    ------
    LoopOrIsthmus
    """
    contract = [B - {e} for B in family if e in B]
    delete = [B for B in family if e not in B]
    if len(contract) == 0 or len(delete) == 0:
        kind = "loop" if len(contract) == 0 else "isthmus"
        raise LoopOrIsthmus("Element %s is a %s and cannot be split on" % (e, kind))
    ground = [i for i in family.ground if i != e]
    return BasisFamily(contract, ground=ground), BasisFamily(delete, ground=ground)


def family_to_json(family):
    """
    Returns a JSON-compatible dictionary describing the family.

    The 'ground' key is only emitted when the ground set is not 0..n-1.
    """
    data = {'ground_size': family.ground_size,
            'rank': family.rank,
            'bases': [sorted(B) for B in family]}
    if family.ground != tuple(range(family.ground_size)):
        data['ground'] = list(family.ground)
    return data


def family_from_json(data):
    ground = data.get('ground', range(data['ground_size']))
    family = BasisFamily(data['bases'], ground=ground)
    if family.rank != data['rank']:
        raise InvalidBasisFamily("Declared rank %d differs from basis size %d" % (data['rank'], family.rank))
    return family
