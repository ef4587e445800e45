"""
Graphic matroids: multigraphs, spanning trees and the good-cycle
templates for basis graphs of spanning-tree matroids.
"""
from .multigraph import Multigraph, contract_edge, delete_edge
from .generators import cycle, k2_sum_cycle, complete, theta, prism, parse_generator, GENERATORS
from .trees import (FundamentalCycle, XyzPartition, is_connected, kirchhoff_count,
                    enumerate_spanning_trees, edge_connectivity, fundamental_cycle, xyz_partition)
from .goodcycles import Exceptional, good_cycles_at, good_cycles_graphic, recognize_exceptional, fact_shape
from .pool import canonical_form, multigraph_pool
