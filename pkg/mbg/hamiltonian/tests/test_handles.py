import pyomo.common.unittest as unittest
from parameterized import parameterized

from mbg.common.errors import LoopOrIsthmus
from mbg.matroid import split_by_element
from mbg.graphic import parse_generator
from mbg.latticepath import catalan_matroid, generalized_catalan
from mbg.uniform import uniform_bases
from mbg.hamiltonian import *


def check_minors(test, handle):
    F = handle.family()
    for e in F.ground:
        if e in F.loops() or e in F.isthmuses():
            continue
        contract, delete = split_by_element(F, e)
        (hc, cmap), (hd, dmap) = handle.minors(e)
        test.assertEqual(set(frozenset(cmap[x] for x in B) for B in hc.family()), set(contract))
        test.assertEqual(set(frozenset(dmap[x] for x in B) for B in hd.family()), set(delete))


class Test_Handles(unittest.TestCase):

    @parameterized.expand([("complete(4)",), ("theta(1,2,2)",), ("k2_sum_cycle(4)",), ("cycle(2)",)])
    def test_graphic_minors(self, text):
        check_minors(self, GraphicHandle(parse_generator(text)))

    @parameterized.expand([("NENE",), ("NENENE",), ("NNEENE",), ("ENNEN",)])
    def test_catalan_minors(self, q):
        check_minors(self, CatalanHandle(generalized_catalan(q)))

    @parameterized.expand([(2, 4), (1, 3), (3, 4), (3, 6)])
    def test_uniform_minors(self, r, n):
        check_minors(self, UniformHandle(r, n))

    def test_family_minors(self):
        check_minors(self, FamilyHandle(uniform_bases((2, 5))))

    def test_isthmus(self):
        h = GraphicHandle(parse_generator("k2_sum_cycle(4)"))
        # Contracting one edge of the parallel pair turns the other into a loop
        (contract, cmap), (delete, dmap) = h.minors(3)
        self.assertNotIn(4, contract.graph)
        self.assertNotIn(4, cmap)
        self.assertIn(4, delete.graph)
        _, (path, _) = GraphicHandle(parse_generator("cycle(3)")).minors(0)
        with self.assertRaises(LoopOrIsthmus):
            path.minors(1)

    def test_keys(self):
        self.assertEqual(UniformHandle(2, 4).key, ('uniform', 2, 4))
        self.assertEqual(CatalanHandle(catalan_matroid(2)).key, ('lpm', 'EENN', 'NENE'))
        g = parse_generator("cycle(3)")
        self.assertEqual(GraphicHandle(g).key, ('graphic',) + g.key)
        self.assertEqual(len(set([UniformHandle(2, 4).key, UniformHandle(2, 4).key])), 1)

    def test_templates(self):
        self.assertEqual(len(UniformHandle(2, 4).good_cycles(0, 1)), 3)
        self.assertIsNone(FamilyHandle(uniform_bases((2, 4))).good_cycles(0, 1))
        # A loop rules out the Catalan templates
        self.assertIsNone(CatalanHandle(generalized_catalan('ENNEE')).good_cycles(0, 1))
        h = CatalanHandle(generalized_catalan('NNNEE'))
        bg = h.basis_graph()
        u, v = next(bg.edges())
        self.assertGreaterEqual(len(h.good_cycles(u, v)), 1)

    def test_cached(self):
        h = UniformHandle(2, 4)
        self.assertIs(h.basis_graph(), h.basis_graph())
        self.assertIs(h.family(), h.basis_graph().family)


if __name__ == "__main__":
    unittest.main()
