#
# The 1-sum of a doubled edge and a 4-cycle.  Its basis graph is the
# prism K_4 x K_2.
#
from mbg.graphic import k2_sum_cycle
from mbg.hamiltonian import GraphicHandle


def create(n=5):
    return GraphicHandle(k2_sum_cycle(n))


if __name__ == "__main__":          #pragma: no cover
    from mbg.hamiltonian import detect_prism, witnesses_recursive
    M = create()
    bg = M.basis_graph()
    print(bg)
    print("prism labels: %s" % str(detect_prism(bg)))
    edge = next(iter(bg.edges()))
    print("witnesses through %s: %d" % (str(edge), len(witnesses_recursive(M, edge))))
