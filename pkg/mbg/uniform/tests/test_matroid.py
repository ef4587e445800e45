import math
import pyomo.common.unittest as unittest
from parameterized import parameterized
from hypothesis import given, settings, strategies as st

from mbg.common.errors import BadParams, InvalidExchange
from mbg.matroid import build_basis_graph, good_cycles_bruteforce, check_basis_axiom
from mbg.uniform import *


class Test_UniformMatroid(unittest.TestCase):

    @parameterized.expand([(1,2), (2,4), (2,5), (3,6), (4,7)])
    def test_bases(self, r, n):
        U = UniformMatroid(r, n)
        self.assertEqual(len(U.family()), math.comb(n, r))
        self.assertEqual(U.key, ('uniform', r, n))
        self.assertEqual(uniform_bases((r, n)), U.family())

    def test_small(self):
        self.assertTrue(check_basis_axiom(UniformMatroid(2, 5).family()))
        bg = build_basis_graph(UniformMatroid(2, 5).family())
        self.assertEqual(len(bg), 10)
        self.assertEqual(bg.num_edges(), 30)

    @parameterized.expand([(3,3), (0,2), (4,2), ('2',4), (2.0,4)])
    def test_bad(self, r, n):
        with self.assertRaises(BadParams):
            UniformMatroid(r, n)

    def test_equality(self):
        self.assertEqual(UniformMatroid(2, 4), UniformMatroid(2, 4))
        self.assertNotEqual(UniformMatroid(2, 4), UniformMatroid(2, 5))
        self.assertEqual(len({UniformMatroid(2, 4), UniformMatroid(2, 4)}), 1)


class Test_GoodCycles(unittest.TestCase):

    @parameterized.expand([(2,4), (2,5), (3,5), (3,6), (2,6), (4,6)])
    def test_count(self, r, n):
        U = UniformMatroid(r, n)
        bg = build_basis_graph(U.family())
        for u, v in bg.edges():
            for b1, b2 in ((u, v), (v, u)):
                cycles = good_cycles_uniform(U, bg, b1, b2)
                self.assertEqual(len(cycles), 3*(n-r-1)*(r-1))
                self.assertEqual(cycles, good_cycles_bruteforce(bg, b1, b2))

    def test_octahedron(self):
        U = UniformMatroid(2, 4)
        bg = build_basis_graph(U.family())
        cycles = good_cycles_uniform(U, bg, 0, 1)
        self.assertEqual(sorted(c.vertices() for c in cycles), [(0,1,2,4), (0,1,5,3), (0,1,5,4)])

    def test_bases_from_tuple(self):
        bg = build_basis_graph(uniform_bases((2, 4)))
        self.assertEqual(len(good_cycles_uniform(UniformMatroid(2, 4), bg, 0, 1)), 3)

    def test_rank_one(self):
        # K_n has no good cycles
        U = UniformMatroid(1, 4)
        bg = build_basis_graph(U.family())
        self.assertEqual(good_cycles_uniform(U, bg, 0, 1), set())

    def test_not_adjacent(self):
        U = UniformMatroid(2, 4)
        bg = build_basis_graph(U.family())
        with self.assertRaises(InvalidExchange):
            good_cycles_uniform(U, bg, 0, 5)


@st.composite
def ranks(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    r = draw(st.integers(min_value=1, max_value=n-1))
    return r, n


class Test_JohnsonGraph(unittest.TestCase):

    @settings(max_examples=30, deadline=None)
    @given(ranks())
    def test_regular(self, params):
        r, n = params
        bg = build_basis_graph(uniform_bases(params))
        self.assertTrue(all(bg.degree(v) == r*(n-r) for v in range(len(bg))))
        self.assertEqual(bg.num_edges(), math.comb(n, r)*r*(n-r)//2)

    @settings(max_examples=30, deadline=None)
    @given(ranks())
    def test_complements(self, params):
        # B -> complement of B is an isomorphism onto BG(U_{n-r,n})
        r, n = params
        bg = build_basis_graph(uniform_bases((r, n)))
        co = build_basis_graph(uniform_bases((n-r, n)))
        ground = frozenset(range(n))
        image = [co.index(ground - bg.basis(v)) for v in range(len(bg))]
        self.assertEqual(sorted(tuple(sorted((image[u], image[v]))) for u, v in bg.edges()), sorted(co.edges()))


if __name__ == "__main__":
    unittest.main()
