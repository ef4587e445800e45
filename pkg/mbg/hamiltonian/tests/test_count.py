import os

import pyomo.common.unittest as unittest
from parameterized import parameterized

from mbg.common.errors import NotAnEdge, TooSmall
from mbg.matroid import build_basis_graph, is_hamiltonian_cycle
from mbg.graphic import (contract_edge, delete_edge, enumerate_spanning_trees, k2_sum_cycle,
                         multigraph_pool)
from mbg.uniform import uniform_bases
from mbg.hamiltonian import *


exhaustive = os.environ.get('MBG_EXHAUSTIVE', '') not in ('', '0')


def uniform_bg(r, n):
    return build_basis_graph(uniform_bases((r, n)))


def prism_bg(t):
    # K_2 x K_t
    return build_basis_graph(enumerate_spanning_trees(k2_sum_cycle(t+1)))


class Test_CountThroughEdge(unittest.TestCase):

    @parameterized.expand([(3, 1), (4, 2), (5, 6), (6, 24)])
    def test_complete(self, n, count):
        bg = uniform_bg(1, n)
        for edge in bg.edges():
            self.assertEqual(count_hc_through_edge(bg, edge), HcCount(count, False, edge))

    def test_triangular_prism(self):
        bg = prism_bg(3)
        self.assertEqual(len(bg), 6)
        for edge in bg.edges():
            self.assertEqual(count_hc_through_edge(bg, edge).value, 2)

    def test_octahedron(self):
        bg = uniform_bg(2, 4)
        for edge in bg.edges():
            self.assertEqual(count_hc_through_edge(bg, edge).value, 8)

    def test_reversal(self):
        bg = prism_bg(4)
        for u, v in bg.edges():
            self.assertEqual(count_hc_through_edge(bg, (u, v)).value, count_hc_through_edge(bg, (v, u)).value)

    def test_cap(self):
        bg = uniform_bg(1, 5)
        self.assertEqual(count_hc_through_edge(bg, (0, 1), cap=5), HcCount(5, True, (0, 1)))
        self.assertEqual(count_hc_through_edge(bg, (0, 1), cap=6), HcCount(6, True, (0, 1)))
        self.assertEqual(count_hc_through_edge(bg, (0, 1), cap=7), HcCount(6, False, (0, 1)))

    def test_edge_order(self):
        bg = uniform_bg(1, 4)
        self.assertEqual(count_hc_through_edge(bg, (3, 1)).edge, (1, 3))

    def test_errors(self):
        with self.assertRaises(TooSmall):
            count_hc_through_edge(uniform_bg(1, 2), (0, 1))
        with self.assertRaises(NotAnEdge):
            count_hc_through_edge(uniform_bg(2, 4), (0, 5))
        with self.assertRaises(NotAnEdge):
            count_hc_through_edge(uniform_bg(2, 4), (0, 9))


class Test_Enumerate(unittest.TestCase):

    def test_cycles(self):
        bg = uniform_bg(2, 4)
        cycles = list(enumerate_hc_through_edge(bg, (0, 1)))
        self.assertEqual(len(cycles), 8)
        self.assertEqual(len(set(cycles)), 8)
        for c in cycles:
            self.assertIn((0, 1), c)
            self.assertTrue(is_hamiltonian_cycle(bg, c))

    def test_limit(self):
        bg = uniform_bg(2, 4)
        self.assertEqual(len(list(enumerate_hc_through_edge(bg, (0, 1), limit=3))), 3)
        self.assertEqual(list(enumerate_hc_through_edge(bg, (0, 1), limit=0)), [])

    def test_square(self):
        bg = prism_bg(2)
        self.assertEqual(len(bg), 4)
        cycles = list(enumerate_hc_through_edge(bg, next(bg.edges())))
        self.assertEqual(len(cycles), 1)


class Test_Totals(unittest.TestCase):

    @parameterized.expand([
        ("K_4", uniform_bg(1, 4), 3),
        ("K_5", uniform_bg(1, 5), 12),
        ("prism", prism_bg(3), 3),
        ("octahedron", uniform_bg(2, 4), 16),
        ])
    def test_total(self, name, bg, total):
        self.assertEqual(hc_total(bg), HcCount(total, False))

    def test_per_edge_sum(self):
        # Every cycle has |V| edges
        bg = prism_bg(4)
        per_edge = sum(count_hc_through_edge(bg, e).value for e in bg.edges())
        self.assertEqual(per_edge, len(bg)*hc_total(bg).value)

    def test_capped_total(self):
        self.assertEqual(hc_total(uniform_bg(2, 4), cap=10), HcCount(10, True))


class Test_HcStar(unittest.TestCase):

    def test_uniform(self):
        bg = uniform_bg(2, 4)
        star = hc_star(bg)
        self.assertEqual(star.value, 8)
        self.assertTrue(bg.has_edge(*star.edge))

    def test_edges(self):
        bg = uniform_bg(1, 5)
        self.assertEqual(hc_star(bg, edges=[(2, 3)]).edge, (2, 3))

    def test_capped(self):
        star = hc_star(uniform_bg(2, 4), cap=4)
        self.assertEqual((star.value, star.capped), (4, True))

    def test_monotone(self):
        # Adding elements to U_{2,n} only adds Hamiltonian cycles through an edge
        small = hc_star(uniform_bg(2, 4))
        large = hc_star(uniform_bg(2, 5), cap=small.value+1)
        self.assertGreater(large.value, small.value)


def graphic_bg(g):
    return build_basis_graph(enumerate_spanning_trees(g))


class Test_MinorMonotone(unittest.TestCase):
    # 3-edge-connected graphs have HC* at least that of each single-edge minor

    cap = 50

    def check(self, g):
        # Capped at the same value, so a capped count on g dominates any count on a minor
        star = hc_star(graphic_bg(g), cap=self.cap).value
        for e in g.ids:
            for minor in (contract_edge(g, e), delete_edge(g, e)):
                bg = graphic_bg(minor)
                if len(bg) < 3:
                    continue
                self.assertGreaterEqual(star, hc_star(bg, cap=self.cap).value, msg="%r, edge %d" % (g, e))

    def test_pool(self):
        n_max, m_max = (5, 8) if exhaustive else (4, 6)
        graphs = list(multigraph_pool(n_min=3, n_max=n_max, m_max=m_max, min_connectivity=3))
        self.assertTrue(len(graphs) > 0)
        for g in graphs:
            self.check(g)


if __name__ == "__main__":
    unittest.main()
