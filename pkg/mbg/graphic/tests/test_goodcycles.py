import os
import pyomo.common.unittest as unittest
from parameterized import parameterized

from mbg.common.errors import InvalidExchange
from mbg.matroid import build_basis_graph, good_cycles_bruteforce
from mbg.graphic import *

exhaustive = os.environ.get('MBG_EXHAUSTIVE', '') not in ('', '0')


def setup(g):
    return g, build_basis_graph(enumerate_spanning_trees(g))


def oriented_edges(bg):
    for u, v in bg.edges():
        yield u, v
        yield v, u


def pool(n_max, m_max, k=2):
    return list(multigraph_pool(n_min=3, n_max=n_max, m_max=m_max, min_connectivity=k))


class Test_Templates(unittest.TestCase):

    @parameterized.expand([
        ("complete(4)",),
        ("theta(1,2,2)",),
        ("theta(2,2,2)",),
        ("prism(3)",),
        ])
    def test_sound(self, text):
        g, bg = setup(parse_generator(text))
        for b1, b2 in oriented_edges(bg):
            templates = good_cycles_graphic(g, bg, b1, b2)
            oracle = good_cycles_bruteforce(bg, b1, b2)
            self.assertTrue(templates <= oracle)
            missed = set(c for c in oracle if fact_shape(g, bg, c) == 'outside')
            self.assertEqual(templates, oracle - missed)

    def test_sound_pool(self):
        n_max, m_max = (5, 8) if exhaustive else (4, 6)
        for g in pool(n_max, m_max):
            g, bg = setup(g)
            for b1, b2 in oriented_edges(bg):
                templates = good_cycles_graphic(g, bg, b1, b2)
                oracle = good_cycles_bruteforce(bg, b1, b2)
                self.assertTrue(templates <= oracle, msg=repr(g))

    @parameterized.expand([
        ("complete(4)", 4, 3),
        ("complete(5)", 5, 4),
        ("prism(3)", 6, 3),
        ])
    def test_connectivity_bound(self, text, n, k):
        g, bg = setup(parse_generator(text))
        self.assertEqual(edge_connectivity(g), k)
        for b1, b2 in oriented_edges(bg):
            self.assertGreaterEqual(len(good_cycles_graphic(g, bg, b1, b2)), (n-2)*(k-1))

    def test_connectivity_bound_pool(self):
        n_max, m_max = (5, 8) if exhaustive else (4, 7)
        for g in pool(n_max, m_max, k=3):
            n = g.n_vertices
            k = edge_connectivity(g)
            g, bg = setup(g)
            for b1, b2 in oriented_edges(bg):
                self.assertGreaterEqual(len(good_cycles_graphic(g, bg, b1, b2)), (n-2)*(k-1), msg=repr(g))

    def test_at(self):
        g, bg = setup(complete(4))
        b1 = bg.index({0,3,5})
        b2 = bg.index({2,3,5})
        # f = 5 is on C(g,B1) = {0,2,3,5}
        cycles = good_cycles_at(g, bg, b1, b2, 5)
        self.assertTrue(len(cycles) > 0)
        for c in cycles:
            self.assertEqual((c.e, c.g, c.f), (0, 2, 5))
        with self.assertRaises(InvalidExchange):
            good_cycles_at(g, bg, b1, b2, 0)
        with self.assertRaises(InvalidExchange):
            good_cycles_at(g, bg, b1, b2, 4)

    def test_not_adjacent(self):
        g, bg = setup(complete(4))
        b1 = bg.index({0,1,2})
        # The trees differ in two edges
        b2 = bg.index({0,3,5})
        with self.assertRaises(InvalidExchange):
            good_cycles_at(g, bg, b1, b2, 1)


class Test_Exceptional(unittest.TestCase):

    @parameterized.expand([
        ("cycle(3)", Exceptional.cycle),
        ("cycle(5)", Exceptional.cycle),
        ("k2_sum_cycle(4)", Exceptional.two_sum),
        ("k2_sum_cycle(6)", Exceptional.two_sum),
        ("complete(4)", Exceptional.neither),
        ("theta(1,2,2)", Exceptional.neither),
        ("theta(2,2,2)", Exceptional.neither),
        ("theta(1,1,2)", Exceptional.neither),
        ("k2_sum_cycle(3)", Exceptional.two_sum),
        ])
    def test_recognize(self, text, kind):
        self.assertEqual(recognize_exceptional(parse_generator(text)), kind)

    def test_relabeled(self):
        # k2_sum_cycle(4) with the doubled edge at vertex 2
        g = Multigraph(4, [(0,0,1), (1,1,2), (2,0,2), (3,2,3), (4,2,3)])
        self.assertEqual(recognize_exceptional(g), Exceptional.two_sum)

    def test_notwogoods(self):
        from mbg.examples import notwogoods
        M = notwogoods.create()
        b1, b2 = notwogoods.edge(M)
        cycles = good_cycles_bruteforce(M.basis_graph(), b1, b2)
        self.assertEqual(len(cycles), 1)
        c, = cycles
        self.assertEqual((c.e, c.g, c.f, c.w), (0, 2, 3, 4))

    def test_cycle_has_none(self):
        g, bg = setup(cycle(5))
        for b1, b2 in oriented_edges(bg):
            self.assertEqual(good_cycles_bruteforce(bg, b1, b2), set())

    def test_two_good_cycles(self):
        # On four or more vertices, only the exceptional graphs have an
        # edge of the basis graph on fewer than two good cycles
        n_max, m_max = (5, 8) if exhaustive else (4, 6)
        for g in multigraph_pool(n_min=4, n_max=n_max, m_max=m_max, min_connectivity=2):
            bg = build_basis_graph(enumerate_spanning_trees(g))
            fewest = min(len(good_cycles_bruteforce(bg, b1, b2)) for b1, b2 in oriented_edges(bg))
            exceptional = recognize_exceptional(g) != Exceptional.neither
            self.assertEqual(fewest < 2, exceptional, msg=repr(g))


if __name__ == "__main__":
    unittest.main()
