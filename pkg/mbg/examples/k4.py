#
# The graphic matroid of K_4: 16 spanning trees, and a 3-edge-connected
# graph on 4 vertices.
#
from mbg.graphic import complete
from mbg.hamiltonian import GraphicHandle


def create():
    return GraphicHandle(complete(4))


if __name__ == "__main__":          #pragma: no cover
    from mbg.bounds import hc_lower
    from mbg.hamiltonian import witnesses_recursive
    M = create()
    bg = M.basis_graph()
    edge = next(iter(bg.edges()))
    ws = witnesses_recursive(M, edge, limit=hc_lower(4, 3).value)
    print("%d witnesses, bound %d" % (len(ws), hc_lower(4, 3).value))
