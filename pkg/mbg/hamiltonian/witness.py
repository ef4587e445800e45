#
# Witness sets of Hamiltonian cycles through a basis-graph edge
#
import dataclasses
import logging

from mbg.common.errors import MBGError
from mbg.matroid import cycle_edge, cycle_from_vertices, cycle_to_vertices, is_hamiltonian_cycle

__all__ = ['WitnessSet', 'validate_witness_set', 'witness_set_to_json', 'witness_set_from_json']

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class WitnessSet:
    """
    Distinct Hamiltonian cycles of a basis graph that contain one edge.

    Attributes
    ----------
    edge: tuple
        The edge (b1, b2) in canonical form.
    cycles: frozenset
        Each cycle is a frozenset of canonical edges.
    collisions: int
        The number of constructions that produced a cycle that was
        already in the set.
    """

    edge: tuple
    cycles: frozenset
    collisions: int = 0

    def __post_init__(self):
        self.edge = cycle_edge(*self.edge)
        self.cycles = frozenset(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def sorted_cycles(self):
        """The cycles as vertex orders, in lexicographic order"""
        return sorted(cycle_to_vertices(c) for c in self.cycles)


def validate_witness_set(bg, witnesses):
    """
    Check that every cycle is Hamiltonian in bg and contains the edge.

    Raises
    ------
    MBGError
        Some cycle fails the check.
    """
    for cycle in witnesses.cycles:
        if witnesses.edge not in cycle or not is_hamiltonian_cycle(bg, cycle):
            e = "Witness %s is not a Hamiltonian cycle through %s" % (cycle_to_vertices(cycle), str(witnesses.edge))
            logger.error(e)
            raise MBGError(e)
    return True


def witness_set_to_json(witnesses):
    return {'edge': list(witnesses.edge),
            'cycles': witnesses.sorted_cycles(),
            'collisions': witnesses.collisions}


def witness_set_from_json(data, bg):
    """
    Rebuild a witness set from :func:`witness_set_to_json` output and
    re-validate it against bg.
    """
    cycles = [cycle_from_vertices(order) for order in data['cycles']]
    witnesses = WitnessSet(tuple(data['edge']), cycles, data.get('collisions', 0))
    if len(witnesses) != len(cycles):
        e = "Witness data repeats a cycle"
        logger.error(e)
        raise MBGError(e)
    validate_witness_set(bg, witnesses)
    return witnesses
