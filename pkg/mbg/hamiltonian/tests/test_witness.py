import json
import pyomo.common.unittest as unittest

from mbg.common.errors import MBGError
from mbg.matroid import build_basis_graph, cycle_from_vertices
from mbg.uniform import uniform_bases
from mbg.hamiltonian import *


class Test_WitnessSet(unittest.TestCase):

    def setUp(self):
        self.bg = build_basis_graph(uniform_bases((2, 4)))
        self.a = cycle_from_vertices([0, 1, 2, 5, 3, 4])
        self.b = cycle_from_vertices([0, 1, 3, 5, 2, 4])

    def test_canonical(self):
        ws = WitnessSet((1, 0), [self.a, self.a])
        self.assertEqual(ws.edge, (0, 1))
        self.assertEqual(len(ws), 1)
        self.assertEqual(ws.sorted_cycles(), [[0, 1, 2, 5, 3, 4]])

    def test_validate(self):
        ws = WitnessSet((0, 1), [self.a])
        self.assertTrue(validate_witness_set(self.bg, ws))
        # The cycle avoids the edge (2,3)
        with self.assertRaises(MBGError):
            validate_witness_set(self.bg, WitnessSet((2, 3), [self.a]))
        with self.assertRaises(MBGError):
            validate_witness_set(self.bg, WitnessSet((0, 1), [cycle_from_vertices([0, 1, 2])]))

    def test_json(self):
        ws = WitnessSet((0, 1), [self.a, self.b], collisions=2)
        data = json.loads(json.dumps(witness_set_to_json(ws)))
        self.assertEqual(data, {'edge': [0, 1], 'cycles': ws.sorted_cycles(), 'collisions': 2})
        again = witness_set_from_json(data, self.bg)
        self.assertEqual(again, ws)

    def test_json_rejects(self):
        data = {'edge': [0, 1], 'cycles': [[0, 1, 2, 5, 3, 4], [4, 3, 5, 2, 1, 0]]}
        with self.assertRaises(MBGError):
            witness_set_from_json(data, self.bg)
        data = {'edge': [0, 1], 'cycles': [[0, 5, 1, 2, 3, 4]]}
        with self.assertRaises(MBGError):
            witness_set_from_json(data, self.bg)


if __name__ == "__main__":
    unittest.main()
