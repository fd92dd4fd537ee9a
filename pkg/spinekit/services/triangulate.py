"""Ideal triangulations dual to o-graph spines: construction, edge classes, boundary."""
import logging
import re
from collections import deque
from typing import Dict, List, Optional, Tuple, Union

from spinekit.errors import OrientationError, PairingError, TriangulationSyntaxError
from spinekit.models.schemas import (
    BoundaryReport,
    EdgeClassification,
    GluingConvention,
    Gluing,
    IdealTriangulation,
    OGraph,
    SpineStrata,
)
from spinekit.services.convention import FROZEN_CONVENTION, face_of_slot, gluing_perm, invert
from spinekit.utils.union_find import UnionFind

logger = logging.getLogger(__name__)

# Edge slot 6*tet + i is the tetrahedron edge EDGES[i]
EDGES: List[Tuple[int, int]] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
EDGE_INDEX: Dict[Tuple[int, int], int] = {
    **{(a, b): i for i, (a, b) in enumerate(EDGES)},
    **{(b, a): i for i, (a, b) in enumerate(EDGES)},
}

# Edges lying in each face (both ends different from the face label)
FACE_EDGES: Dict[int, List[int]] = {
    f: [i for i, (a, b) in enumerate(EDGES) if f not in (a, b)] for f in range(4)
}

TRI_HEADER = "tri v1"
_TETS_RE = re.compile(r"^tets\s+(\d+)$")
_GLUE_RE = re.compile(r"^glue\s+(\d+)\.(\d+)\s+(\d+)\.(\d+)\s+perm\s+(\d{3})$")


class Triangulator:
    """Builds and inspects ideal triangulations."""

    def from_ograph(
        self,
        graph: OGraph,
        convention: GluingConvention = FROZEN_CONVENTION
    ) -> IdealTriangulation:
        """
        Dual ideal triangulation of the special spine encoded by an o-graph.

        One tetrahedron per vertex; every edge glues the two faces dual to
        its ends.

        Args:
            graph: Valid o-graph
            convention: Slot/color rule (defaults to the frozen one)

        Returns:
            IdealTriangulation with 4n face pairings
        """
        crossings = {v.index: v for v in graph.vertices}
        pairings: Dict[Tuple[int, int], Gluing] = {}
        for edge in graph.edges:
            u, w = edge.end_a.vertex, edge.end_b.vertex
            p = face_of_slot(crossings[u], edge.end_a.slot, convention)
            q = face_of_slot(crossings[w], edge.end_b.slot, convention)
            perm = gluing_perm(p, q, edge.color, convention)
            pairings[(u, p)] = Gluing(tet=u, face=p, partner_tet=w, partner_face=q, perm=perm)
            pairings[(w, q)] = Gluing(tet=w, face=q, partner_tet=u, partner_face=p, perm=invert(perm))

        n = graph.n_vertices
        triangulation = IdealTriangulation(
            n_tets=n,
            gluings=[pairings[(t, f)] for t in range(n) for f in range(4)]
        )
        logger.info(f"Built triangulation with {n} tetrahedra ({convention.label})")
        return triangulation

    @staticmethod
    def assemble(n_tets: int, glues: List[Gluing]) -> IdealTriangulation:
        """
        Complete one-sided gluings with their inverses and check the matching.

        Raises:
            PairingError: Self-glued, doubly glued or unglued face
        """
        pairings: Dict[Tuple[int, int], Gluing] = {}
        for g in glues:
            if (g.tet, g.face) == (g.partner_tet, g.partner_face):
                raise PairingError(f"face {g.tet}.{g.face} glued to itself")
            inverse = Gluing(
                tet=g.partner_tet, face=g.partner_face,
                partner_tet=g.tet, partner_face=g.face, perm=invert(g.perm)
            )
            for side in (g, inverse):
                key = (side.tet, side.face)
                if key in pairings:
                    raise PairingError(f"face {side.tet}.{side.face} glued twice")
                pairings[key] = side

        for t in range(n_tets):
            for f in range(4):
                if (t, f) not in pairings:
                    raise PairingError(f"face {t}.{f} is not glued")
        return IdealTriangulation(
            n_tets=n_tets,
            gluings=[pairings[(t, f)] for t in range(n_tets) for f in range(4)]
        )

    def parse_triangulation(self, text: Union[bytes, str]) -> IdealTriangulation:
        """
        Parse the ``tri v1`` format.

        Raises:
            TriangulationSyntaxError: Malformed line or permutation
            PairingError: Faces not perfectly matched
        """
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise TriangulationSyntaxError(f"not UTF-8 text ({exc.reason})")

        header_seen = False
        n: Optional[int] = None
        glues: List[Gluing] = []
        for number, raw in enumerate(text.split("\n"), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if not header_seen:
                if line != TRI_HEADER:
                    raise TriangulationSyntaxError(f"expected '{TRI_HEADER}', got '{line}'", number)
                header_seen = True
                continue
            match = _TETS_RE.match(line)
            if match:
                if n is not None:
                    raise TriangulationSyntaxError("duplicate 'tets' line", number)
                n = int(match.group(1))
                if n == 0:
                    raise TriangulationSyntaxError("no tetrahedra", number)
                continue
            match = _GLUE_RE.match(line)
            if match:
                if n is None:
                    raise TriangulationSyntaxError("'glue' before 'tets'", number)
                t, f, u, g = (int(x) for x in match.groups()[:4])
                digits = [int(c) for c in match.group(5)]
                if t >= n or u >= n or f > 3 or g > 3:
                    raise TriangulationSyntaxError(f"face {t}.{f} or {u}.{g} out of range", number)
                if sorted(digits) != [x for x in range(4) if x != g]:
                    raise TriangulationSyntaxError(
                        f"perm {match.group(5)} must map face {f} onto the labels of face {g}", number
                    )
                perm = [0, 0, 0, 0]
                perm[f] = g
                for v, image in zip([x for x in range(4) if x != f], digits):
                    perm[v] = image
                glues.append(Gluing(tet=t, face=f, partner_tet=u, partner_face=g, perm=tuple(perm)))
                continue
            raise TriangulationSyntaxError(f"unrecognized line '{line}'", number)

        if not header_seen:
            raise TriangulationSyntaxError(f"missing '{TRI_HEADER}' header")
        if n is None:
            raise TriangulationSyntaxError("missing 'tets' line")
        return self.assemble(n, glues)

    @staticmethod
    def serialize_triangulation(triangulation: IdealTriangulation) -> bytes:
        """Canonical ``tri v1`` text, each gluing once from its smaller face."""
        lines = [TRI_HEADER, f"tets {triangulation.n_tets}"]
        for g in triangulation.face_pairs():
            image = "".join(str(x) for x in g.face_image())
            lines.append(f"glue {g.tet}.{g.face} {g.partner_tet}.{g.partner_face} perm {image}")
        return ("\n".join(lines) + "\n").encode("utf-8")

    @staticmethod
    def edge_classes(triangulation: IdealTriangulation) -> EdgeClassification:
        """Union-find closure of edge slots under all face gluings."""
        uf = UnionFind(6 * triangulation.n_tets)
        for g in triangulation.face_pairs():
            for a, b in EDGES:
                if g.face in (a, b):
                    continue
                uf.union(
                    6 * g.tet + EDGE_INDEX[(a, b)],
                    6 * g.partner_tet + EDGE_INDEX[(g.perm[a], g.perm[b])]
                )
        return EdgeClassification(slot_class=uf.labels(), classes=uf.groups())

    @staticmethod
    def vertex_classes(triangulation: IdealTriangulation) -> List[int]:
        """Ideal-vertex class of each vertex slot 4*tet + v."""
        uf = UnionFind(4 * triangulation.n_tets)
        for g in triangulation.face_pairs():
            for v in range(4):
                if v != g.face:
                    uf.union(4 * g.tet + v, 4 * g.partner_tet + g.perm[v])
        return uf.labels()

    def vertex_link_count(self, triangulation: IdealTriangulation) -> int:
        """Number of ideal vertices, one per boundary component."""
        labels = self.vertex_classes(triangulation)
        return max(labels) + 1

    def strata_summary(self, triangulation: IdealTriangulation) -> SpineStrata:
        n = triangulation.n_tets
        k = self.edge_classes(triangulation).k
        return SpineStrata(
            true_vertices=n,
            triple_edges=2 * n,
            components2=k,
            euler=k - n
        )

    @staticmethod
    def _cycle_direction(v: int, a: int, b: int) -> int:
        """+1 if a -> b follows the ascending corner cycle of triangle v, else -1."""
        corners = [w for w in range(4) if w != v]
        step = (corners.index(b) - corners.index(a)) % 3
        return 1 if step == 1 else -1

    def boundary_surface(self, triangulation: IdealTriangulation) -> BoundaryReport:
        """
        Boundary surface glued from the 4n truncation triangles.

        Triangle (T, v) has corners w != v; a gluing (T, f) -> (T', g)
        sends side f of (T, v) to side g of (T', perm[v]). Components are
        oriented by breadth-first search.

        Returns:
            BoundaryReport with components ordered by smallest triangle

        Raises:
            OrientationError: A component cannot be oriented
        """
        n = triangulation.n_tets
        triangles = UnionFind(4 * n)
        corners = UnionFind(12 * n)
        adjacency: List[List[Tuple[int, int, int, Tuple[int, int, int, int]]]] = [[] for _ in range(4 * n)]

        def corner(t: int, v: int, w: int) -> int:
            return 12 * t + 3 * v + (w if w < v else w - 1)

        for g in triangulation.gluings:
            for v in range(4):
                if v == g.face:
                    continue
                image = g.perm[v]
                triangles.union(4 * g.tet + v, 4 * g.partner_tet + image)
                side = [w for w in range(4) if w not in (v, g.face)]
                for w in side:
                    corners.union(corner(g.tet, v, w), corner(g.partner_tet, image, g.perm[w]))
                adjacency[4 * g.tet + v].append((4 * g.partner_tet + image, side[0], side[1], g.perm))

        orientation: Dict[int, int] = {}
        for start in range(4 * n):
            if start in orientation:
                continue
            orientation[start] = 1
            queue = deque([start])
            while queue:
                x = queue.popleft()
                v = x % 4
                for y, a, b, perm in adjacency[x]:
                    d1 = self._cycle_direction(v, a, b)
                    d2 = self._cycle_direction(y % 4, perm[a], perm[b])
                    expected = -orientation[x] * d1 * d2
                    if y not in orientation:
                        orientation[y] = expected
                        queue.append(y)
                    elif orientation[y] != expected:
                        raise OrientationError(
                            f"boundary component through triangle {x // 4}.{x % 4} is not orientable"
                        )

        genera: List[int] = []
        euler_total = 0
        for members in triangles.groups():
            vertices = {
                corners.find(corner(x // 4, x % 4, w))
                for x in members for w in range(4) if w != x % 4
            }
            euler = len(vertices) - len(members) // 2
            if euler % 2:
                raise OrientationError(f"boundary component with odd Euler characteristic {euler}")
            genera.append((2 - euler) // 2)
            euler_total += euler

        report = BoundaryReport(
            component_count=len(genera),
            genus_per_component=genera,
            euler_boundary=euler_total
        )
        logger.info(f"Boundary: {report.component_count} component(s), genera {genera}")
        return report


# Global triangulator instance
triangulator = Triangulator()
