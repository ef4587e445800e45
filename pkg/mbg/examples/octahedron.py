#
# The uniform matroid U_{2,4}.  Its basis graph is the octahedron
# J(4,2), and every edge lies on exactly three good cycles.
#
from mbg.hamiltonian import UniformHandle


def create():
    return UniformHandle(2, 4)


if __name__ == "__main__":          #pragma: no cover
    from mbg.hamiltonian import hc_total
    M = create()
    print(M.basis_graph())
    print("Hamiltonian cycles: %d" % hc_total(M.basis_graph()).value)
