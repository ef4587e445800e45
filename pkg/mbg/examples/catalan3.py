#
# The 3-Catalan matroid M[NENENE], with 14 bases.
#
from mbg.latticepath import catalan_matroid
from mbg.hamiltonian import CatalanHandle


def create():
    return CatalanHandle(catalan_matroid(3))


if __name__ == "__main__":          #pragma: no cover
    from mbg.hamiltonian import hc_star
    M = create()
    print(M.basis_graph())
    print(hc_star(M.basis_graph()))
