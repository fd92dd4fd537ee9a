"""Generators for the G_n family and for random o-graphs."""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from spinekit.models.schemas import Crossing, EndRef, OEdge, OGraph

logger = logging.getLogger(__name__)

ColorPair = Tuple[int, int]

# (top, bottom) colors of the double edges in each block of G_n = A.B^s.C.D^s.E
BLOCK_A: List[ColorPair] = [(0, 1)]
BLOCK_B: List[ColorPair] = [(1, 1), (0, 1)]
BLOCK_C: List[ColorPair] = [(1, 1), (0, 0)]
BLOCK_D: List[ColorPair] = [(0, 1), (1, 0)]
BLOCK_E: List[ColorPair] = [(0, 1)]

LOOP_COLOR = 1

# Double-edge colors of G_9 exactly as drawn; see fixtures/README.md
DRAWN_G9_PAIRS: List[ColorPair] = [
    (0, 1), (1, 1), (0, 1), (1, 0), (0, 1), (0, 1), (1, 0), (0, 1)
]


class OGraphBuilder:
    """Builds o-graphs: the G_n chain and seeded random instances."""

    @staticmethod
    def gn_color_pairs(s: int) -> List[ColorPair]:
        """Double-edge colors of G_{5+4s}, left to right."""
        if s < 0:
            raise ValueError(f"s must be nonnegative, got {s}")
        return BLOCK_A + BLOCK_B * s + BLOCK_C + BLOCK_D * s + BLOCK_E

    @staticmethod
    def chain(pairs: Sequence[ColorPair], loop_colors: Tuple[int, int] = (LOOP_COLOR, LOOP_COLOR)) -> OGraph:
        """
        A row of len(pairs)+1 vertices joined by double edges, a loop at each end.

        Slots run counterclockwise from the upper-left end. Middle vertices
        use 0 = left top, 1 = left bottom, 2 = right bottom, 3 = right top;
        the left loop occupies 0 and 1 of vertex 0, the right loop 2 and 3
        of the last vertex. The horizontal strands pass over at every vertex.

        Args:
            pairs: (top, bottom) color of each double edge
            loop_colors: Colors of the left and right loops

        Returns:
            Canonical OGraph
        """
        n = len(pairs) + 1
        edges = [
            OEdge(end_a=EndRef(vertex=0, slot=0), end_b=EndRef(vertex=0, slot=1), color=loop_colors[0]),
            OEdge(end_a=EndRef(vertex=n - 1, slot=2), end_b=EndRef(vertex=n - 1, slot=3), color=loop_colors[1]),
        ]
        for i, (top, bottom) in enumerate(pairs):
            edges.append(OEdge(end_a=EndRef(vertex=i, slot=3), end_b=EndRef(vertex=i + 1, slot=0), color=top))
            edges.append(OEdge(end_a=EndRef(vertex=i, slot=2), end_b=EndRef(vertex=i + 1, slot=1), color=bottom))
        vertices = [Crossing(index=i, over="13") for i in range(n)]
        return OGraph(vertices=vertices, edges=edges).canonical()

    def generate_Gn(self, s: int) -> OGraph:
        """The decorated graph G_n, n = 5 + 4s."""
        graph = self.chain(self.gn_color_pairs(s))
        logger.info(f"Generated G_{graph.n_vertices} (s={s})")
        return graph

    @staticmethod
    def random_ograph(n: int, seed: int) -> OGraph:
        """
        Uniformly random o-graph on n vertices.

        The 4n ends are paired by a random permutation; colors and
        over-strand diagonals are uniform. Deterministic for a given seed.
        """
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        rng = np.random.default_rng(seed)
        order = rng.permutation(4 * n)
        colors = rng.integers(0, 3, size=2 * n)
        diagonals = rng.integers(0, 2, size=n)

        edges = []
        for i in range(2 * n):
            a, b = int(order[2 * i]), int(order[2 * i + 1])
            edges.append(OEdge(
                end_a=EndRef(vertex=a // 4, slot=a % 4),
                end_b=EndRef(vertex=b // 4, slot=b % 4),
                color=int(colors[i])
            ))
        vertices = [
            Crossing(index=i, over="02" if diagonals[i] == 0 else "13") for i in range(n)
        ]
        return OGraph(vertices=vertices, edges=edges).canonical()


# Global builder instance
ograph_builder = OGraphBuilder()
