#
# A graphic matroid with an edge of its basis graph that lies on only
# one good cycle.
#
# The graph is a triangle with a doubled pendant edge.  For the bases
# B1 = {0,1,3} and B2 = {1,2,3} the only good cycle swaps the parallel
# edges 3 and 4.
#
from mbg.graphic import k2_sum_cycle
from mbg.hamiltonian import GraphicHandle

B1 = frozenset((0, 1, 3))
B2 = frozenset((1, 2, 3))


def create():
    return GraphicHandle(k2_sum_cycle(4))


def edge(handle):
    bg = handle.basis_graph()
    return bg.index(B1), bg.index(B2)


if __name__ == "__main__":          #pragma: no cover
    from mbg.matroid import good_cycles_bruteforce
    M = create()
    b1, b2 = edge(M)
    for c in sorted(good_cycles_bruteforce(M.basis_graph(), b1, b2), key=lambda c: c.sort_key()):
        print(c)
