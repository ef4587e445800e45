import itertools
import pyomo.common.unittest as unittest

from mbg.common.errors import EdgeNotOnCycle, GlueNotHamiltonian, InvalidGoodCycle, NotAnEdge
from mbg.matroid import *


def octahedron():
    return build_basis_graph(BasisFamily(itertools.combinations(range(4), 2)))


class Test_GoodCycle(unittest.TestCase):

    def test_make(self):
        bg = octahedron()
        c = make_good_cycle(bg, 0, 1, 5, 3)
        self.assertEqual((c.e, c.g), (1, 2))
        self.assertEqual((c.f, c.w), (0, 2))
        self.assertEqual(c.vertices(), (0, 1, 5, 3))
        self.assertEqual(c.edges(), frozenset([(0,1), (1,5), (3,5), (0,3)]))

    def test_from_bases(self):
        bg = octahedron()
        c = good_cycle_from_bases(bg, {0,1}, {0,2}, {2,3}, {1,2})
        self.assertEqual(c, make_good_cycle(bg, 0, 1, 5, 3))

    def test_not_a_basis(self):
        bg = octahedron()
        with self.assertRaises(InvalidGoodCycle):
            good_cycle_from_bases(bg, {0,1}, {0,2}, {2,3}, {1})

    def test_not_adjacent(self):
        bg = octahedron()
        with self.assertRaises(InvalidGoodCycle):
            make_good_cycle(bg, 0, 1, 2, 3)

    def test_repeated(self):
        bg = octahedron()
        with self.assertRaises(InvalidGoodCycle):
            make_good_cycle(bg, 0, 1, 0, 3)

    def test_wrong_pattern(self):
        bg = octahedron()
        # b3 = {1,2} contains e = 1
        with self.assertRaises(InvalidGoodCycle):
            make_good_cycle(bg, 0, 1, 3, 4)

    def test_identity(self):
        # Same vertex set and distinguished edge
        a = GoodCycle(0, 1, 5, 3, 1, 2, 0, 2)
        b = GoodCycle(0, 1, 5, 3, 1, 2, 0, 2)
        c = GoodCycle(0, 1, 2, 4, 1, 2, 0, 3)
        self.assertEqual(a, b)
        self.assertEqual(len({a, b, c}), 2)


class Test_Bruteforce(unittest.TestCase):

    def test_octahedron(self):
        bg = octahedron()
        cycles = good_cycles_bruteforce(bg, 0, 1)
        self.assertEqual(sorted(c.vertices() for c in cycles), [(0,1,2,4), (0,1,5,3), (0,1,5,4)])
        for c in cycles:
            self.assertEqual(make_good_cycle(bg, *c.vertices()), c)

    def test_every_edge(self):
        bg = octahedron()
        for u, v in bg.edges():
            self.assertEqual(len(good_cycles_bruteforce(bg, u, v)), 3)
            self.assertEqual(len(good_cycles_bruteforce(bg, v, u)), 3)

    def test_triangle(self):
        bg = build_basis_graph(BasisFamily(itertools.combinations(range(3), 2)))
        self.assertEqual(good_cycles_bruteforce(bg, 0, 1), set())

    def test_not_an_edge(self):
        with self.assertRaises(NotAnEdge):
            good_cycles_bruteforce(octahedron(), 0, 5)


class Test_Glue(unittest.TestCase):

    def setUp(self):
        self.bg = octahedron()
        self.good = make_good_cycle(self.bg, 0, 1, 5, 3)
        self.hx = cycle_from_vertices([0, 3, 4])
        self.hy = cycle_from_vertices([1, 2, 5])

    def test_glue(self):
        cycle = glue_hamiltonian(self.bg, self.hx, self.good, self.hy)
        self.assertTrue(is_hamiltonian_cycle(self.bg, cycle))
        self.assertIn((0,1), cycle)
        self.assertEqual(cycle, cycle_from_vertices([0,1,2,5,3,4]))

    def test_missing_edge(self):
        with self.assertRaises(EdgeNotOnCycle):
            glue_hamiltonian(self.bg, cycle_from_vertices([0, 4, 3]) - {(0,3)}, self.good, self.hy)
        with self.assertRaises(EdgeNotOnCycle):
            glue_hamiltonian(self.bg, self.hx, self.good, frozenset([(1,2), (2,5)]))

    def test_none_needs_edge_side(self):
        # Both sides are triangles, not single edges
        with self.assertRaises(EdgeNotOnCycle):
            glue_hamiltonian(self.bg, None, self.good, self.hy)
        with self.assertRaises(EdgeNotOnCycle):
            glue_hamiltonian(self.bg, self.hx, self.good, None)

    def test_not_hamiltonian(self):
        # Through b1b4, but not on the bases containing e
        bad = frozenset([(0,3), (3,5), (2,5), (0,2)])
        with self.assertRaises(GlueNotHamiltonian):
            glue_hamiltonian(self.bg, bad, self.good, self.hy)

    def test_square(self):
        # BG(U_{1,2} + U_{1,2}) is a 4-cycle; each side is a single edge
        bg = build_basis_graph(BasisFamily([[0,2], [0,3], [1,2], [1,3]]))
        good = make_good_cycle(bg, 0, 2, 3, 1)
        cycle = glue_hamiltonian(bg, None, good, None)
        self.assertEqual(cycle, good.edges())
        self.assertTrue(is_hamiltonian_cycle(bg, cycle))


if __name__ == "__main__":
    unittest.main()
