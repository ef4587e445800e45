from unittest import mock

import pyomo.common.unittest as unittest
from parameterized import parameterized

from mbg.common.errors import BadParams, InvalidExchange, LoopOrIsthmus, TooFewGoodCycles
from mbg.matroid import build_basis_graph, good_cycles_bruteforce
from mbg.latticepath import *
from mbg.hamiltonian import CatalanHandle

# Loop-free words with corank >= rank >= 2
wide = ['NENE', 'NNEE', 'NENENE', 'NNENEE', 'NENNEE', 'NNEENE', 'NNEEE', 'NENEE', 'NENEEE', 'NNENEEE']
# ... and with rank > corank >= 2
tall = ['NNENE', 'NNNEE', 'NNENNEE', 'NENNNEE']


def setup(q):
    m = generalized_catalan(q)
    return m, build_basis_graph(m.family())


class Test_Orientation(unittest.TestCase):

    def test_orient(self):
        m, bg = setup('NENE')
        b1 = bg.index({0,2})
        b2 = bg.index({1,2})
        self.assertEqual(orient_edge(bg, b1, b2), (b1, b2))
        self.assertEqual(orient_edge(bg, b2, b1), (b1, b2))

    def test_not_adjacent(self):
        m, bg = setup('NENE')
        with self.assertRaises(InvalidExchange):
            orient_edge(bg, bg.index({0,2}), bg.index({1,3}))

    def test_wrong_orientation(self):
        m, bg = setup('NENE')
        with self.assertRaises(InvalidExchange):
            good_cycles_catalan(m, bg, bg.index({1,2}), bg.index({0,2}))


class Test_Templates(unittest.TestCase):

    @parameterized.expand([(q,) for q in wide])
    def test_wide(self, q):
        m, bg = setup(q)
        for u, v in bg.edges():
            b1, b2 = orient_edge(bg, u, v)
            cycles = good_cycles_catalan(m, bg, b1, b2)
            self.assertGreaterEqual(len(cycles), m.rank-1)
            self.assertTrue(cycles <= good_cycles_bruteforce(bg, b1, b2))

    @parameterized.expand([(q,) for q in wide + tall])
    def test_min(self, q):
        m, bg = setup(q)
        low = min(m.rank, m.corank)
        for u, v in bg.edges():
            cycles = good_cycles_gencat_min(m, bg, u, v)
            self.assertGreaterEqual(len(cycles), low-1)
            b1, b2 = next(iter(cycles)).vertices()[:2]
            self.assertEqual({b1, b2}, {u, v})
            for c in cycles:
                self.assertEqual((c.b1, c.b2), (b1, b2))
            self.assertTrue(cycles <= good_cycles_bruteforce(bg, b1, b2))

    def test_tall_orientation(self):
        # The dual templates come back with e > g in the primal
        m, bg = setup('NNNEE')
        for u, v in bg.edges():
            for c in good_cycles_gencat_min(m, bg, u, v):
                self.assertGreater(c.e, c.g)

    def test_tall_needs_dual(self):
        m, bg = setup('NNNEE')
        u, v = next(bg.edges())
        b1, b2 = orient_edge(bg, u, v)
        with self.assertRaises(BadParams):
            good_cycles_catalan(m, bg, b1, b2)

    def test_too_few(self):
        m, bg = setup('NENENE')
        u, v = next(bg.edges())
        b1, b2 = orient_edge(bg, u, v)
        with mock.patch('mbg.latticepath.goodcycles._templates', return_value=iter(())):
            with self.assertRaises(TooFewGoodCycles):
                good_cycles_catalan(m, bg, b1, b2)
            # Not mistaken for a matroid without templates
            with self.assertRaises(TooFewGoodCycles):
                CatalanHandle(m).good_cycles(b1, b2)

    def test_shared_dual_graph(self):
        m, bg = setup('NNENE')
        dual = build_basis_graph(dualize(m).family())
        for u, v in bg.edges():
            self.assertEqual(good_cycles_gencat_min(m, bg, u, v, dual_graph=dual),
                             good_cycles_gencat_min(m, bg, u, v))


class Test_Hypotheses(unittest.TestCase):

    def test_loop(self):
        m, bg = setup('ENNEE')
        u, v = next(bg.edges())
        with self.assertRaises(LoopOrIsthmus):
            good_cycles_gencat_min(m, bg, u, v)

    def test_rank_one(self):
        m, bg = setup('NEE')
        with self.assertRaises(BadParams):
            good_cycles_gencat_min(m, bg, 0, 1)

    def test_not_gencat(self):
        m = LatticePathMatroid('ENEN', 'NENE')
        bg = build_basis_graph(m.family())
        with self.assertRaises(BadParams):
            good_cycles_gencat_min(m, bg, 0, 1)


if __name__ == "__main__":
    unittest.main()
