import math
import pyomo.common.unittest as unittest
from parameterized import parameterized

from mbg.common.errors import BadParams, NotAnEdge
from mbg.matroid import build_basis_graph, is_hamiltonian_cycle, cycle_edge
from mbg.graphic import enumerate_spanning_trees, k2_sum_cycle
from mbg.uniform import uniform_bases
from mbg.hamiltonian import *


def prism_bg(t):
    return build_basis_graph(enumerate_spanning_trees(k2_sum_cycle(t+1)))


class Test_Complete(unittest.TestCase):

    @parameterized.expand([(3,), (4,), (5,), (6,)])
    def test_size(self, n):
        bg = build_basis_graph(uniform_bases((1, n)))
        cycles = witnesses_complete(n, (0, 1))
        self.assertEqual(len(cycles), math.factorial(n-2))
        self.assertEqual(cycles, set(enumerate_hc_through_edge(bg, (0, 1))))

    def test_labels(self):
        cycles = witnesses_complete(3, (0, 2), labels=[10, 11, 12])
        self.assertEqual(cycles, {frozenset([(10, 11), (11, 12), (10, 12)])})

    def test_errors(self):
        with self.assertRaises(BadParams):
            witnesses_complete(2, (0, 1))
        with self.assertRaises(NotAnEdge):
            witnesses_complete(4, (1, 1))
        with self.assertRaises(NotAnEdge):
            witnesses_complete(4, (1, 4))


class Test_Prism(unittest.TestCase):

    @parameterized.expand([(3, 1), (4, 2), (5, 12), (6, 144)])
    def test_size(self, n, count):
        self.assertEqual(len(witnesses_prism(n, ((0, 0), (0, 1)))), count)
        self.assertEqual(len(witnesses_prism(n, ((0, 0), (1, 0)))), count)
        self.assertEqual(count, bound_prism_value(n))

    @parameterized.expand([(3,), (4,), (5,)])
    def test_valid(self, t):
        bg = prism_bg(t)
        labels = detect_prism(bg)
        self.assertIsNotNone(labels)
        inverse = {v:k for k,v in labels.items()}
        for u, v in bg.edges():
            cycles = witnesses_prism(t+1, (inverse[u], inverse[v]), labels=labels)
            self.assertEqual(len(cycles), bound_prism_value(t+1))
            for c in cycles:
                self.assertIn(cycle_edge(u, v), c)
                self.assertTrue(is_hamiltonian_cycle(bg, c))
            if t == 3:
                self.assertEqual(cycles, set(enumerate_hc_through_edge(bg, (u, v))))

    def test_default_labels(self):
        self.assertEqual(prism_labels(4), {(0,0): 0, (0,1): 1, (0,2): 2, (1,0): 3, (1,1): 4, (1,2): 5})

    @parameterized.expand([
        ("diagonal", ((0, 0), (1, 1))),
        ("loop", ((0, 1), (0, 1))),
        ("range", ((0, 0), (0, 3))),
        ("copy", ((0, 0), (2, 0))),
        ])
    def test_not_an_edge(self, name, edge):
        with self.assertRaises(NotAnEdge):
            witnesses_prism(4, edge)


class Test_Detect(unittest.TestCase):

    def test_complete(self):
        self.assertTrue(detect_complete(build_basis_graph(uniform_bases((1, 5)))))
        self.assertTrue(detect_complete(build_basis_graph(uniform_bases((4, 5)))))
        self.assertFalse(detect_complete(build_basis_graph(uniform_bases((2, 4)))))

    @parameterized.expand([(2,), (3,), (4,), (5,)])
    def test_prism(self, t):
        bg = prism_bg(t)
        labels = detect_prism(bg)
        self.assertEqual(sorted(labels.values()), list(range(2*t)))
        for i in range(t):
            self.assertTrue(bg.has_edge(labels[(0, i)], labels[(1, i)]))
            for j in range(i+1, t):
                self.assertTrue(bg.has_edge(labels[(0, i)], labels[(0, j)]))
                self.assertTrue(bg.has_edge(labels[(1, i)], labels[(1, j)]))
                self.assertFalse(bg.has_edge(labels[(0, i)], labels[(1, j)]))

    def test_not_prism(self):
        self.assertIsNone(detect_prism(build_basis_graph(uniform_bases((2, 4)))))
        self.assertIsNone(detect_prism(build_basis_graph(uniform_bases((1, 4)))))
        self.assertIsNone(detect_prism(build_basis_graph(uniform_bases((1, 3)))))


def bound_prism_value(n):
    return math.factorial(n-2)*math.factorial(n-3)


if __name__ == "__main__":
    unittest.main()
