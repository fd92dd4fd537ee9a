"""Simple subpolyhedra of a special spine and the poorness test.

A subpolyhedron is a union of closed 2-components, so it is a bitmask over
edge classes. The link of a true vertex is K4 (vertices = faces of the
tetrahedron, edges = its edges); a selection is simple exactly when every
face meets 0, 2 or 3 selected edge slots, which makes each vertex link a
circle, theta or K4 and each triple edge carry 0, 2 or 3 wings.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from spinekit.config import settings
from spinekit.errors import NotSimpleError, SpineKitError, TooManyComponentsError
from spinekit.models.schemas import EdgeClassification, IdealTriangulation, Selection, SubpolyFamily
from spinekit.services.triangulate import EDGES, FACE_EDGES, triangulator

logger = logging.getLogger(__name__)

FaceTriple = Tuple[int, int, int]


def _face_triples(triangulation: IdealTriangulation, classification: EdgeClassification) -> List[FaceTriple]:
    """Edge classes of the three edges of every face, indexed 4*tet + face."""
    slot_class = classification.slot_class
    return [
        tuple(slot_class[6 * t + i] for i in FACE_EDGES[f])
        for t in range(triangulation.n_tets) for f in range(4)
    ]


def _is_simple_mask(triples: Sequence[FaceTriple], mask: int) -> bool:
    for a, b, c in triples:
        if (mask >> a & 1) + (mask >> b & 1) + (mask >> c & 1) == 1:
            return False
    return True


def _scan_range(triples: Sequence[FaceTriple], start: int, stop: int) -> List[int]:
    """Simple masks in [start, stop); module level so worker processes can run it."""
    return [mask for mask in range(start, stop) if _is_simple_mask(triples, mask)]


def _admissible_links() -> List[nx.MultiGraph]:
    circle = nx.MultiGraph()
    circle.add_edge(0, 0)
    theta = nx.MultiGraph()
    theta.add_edges_from([(0, 1), (0, 1), (0, 1)])
    return [circle, theta, nx.MultiGraph(nx.complete_graph(4))]


ADMISSIBLE_LINKS = _admissible_links()


def _smoothed(graph: nx.MultiGraph) -> nx.MultiGraph:
    """Topological reduction: drop isolated nodes, splice out degree-2 nodes."""
    g = nx.MultiGraph(graph)
    g.remove_nodes_from(list(nx.isolates(g)))
    changed = True
    while changed:
        changed = False
        for node in list(g.nodes):
            if g.degree(node) != 2 or g.number_of_edges(node, node):
                continue
            ends = [v for _, v in g.edges(node)]
            g.remove_node(node)
            g.add_edge(ends[0], ends[1])
            changed = True
            break
    return g


def is_admissible_link(graph: nx.MultiGraph) -> bool:
    """True when the graph is homeomorphic to a circle, a theta or K4."""
    reduced = _smoothed(graph)
    return any(nx.is_isomorphic(reduced, model) for model in ADMISSIBLE_LINKS)


class SubpolyService:
    """Enumerates simple subpolyhedra and decides poorness."""

    @staticmethod
    def _classify(
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification]
    ) -> EdgeClassification:
        if classification is None:
            classification = triangulator.edge_classes(triangulation)
        return classification

    @staticmethod
    def _check_selection(selection: Selection, classification: EdgeClassification) -> None:
        if selection.k != classification.k:
            raise SpineKitError(
                f"selection covers {selection.k} components, spine has {classification.k}"
            )

    def is_simple(
        self,
        triangulation: IdealTriangulation,
        selection: Selection,
        classification: Optional[EdgeClassification] = None
    ) -> bool:
        """Face-degree test: every face meets 0, 2 or 3 selected edge slots."""
        classification = self._classify(triangulation, classification)
        self._check_selection(selection, classification)
        return _is_simple_mask(_face_triples(triangulation, classification), selection.mask)

    def enumerate_simple(
        self,
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification] = None
    ) -> SubpolyFamily:
        """
        All simple subpolyhedra, ascending by bitmask.

        Large searches are split into contiguous mask ranges across worker
        processes; the merged result does not depend on the worker count.

        Args:
            triangulation: Valid triangulation
            classification: Precomputed edge classes, if at hand

        Returns:
            SubpolyFamily containing at least the empty selection

        Raises:
            TooManyComponentsError: k above the configured bitmask ceiling
        """
        classification = self._classify(triangulation, classification)
        k = classification.k
        if k > settings.max_components:
            raise TooManyComponentsError(k, settings.max_components)

        triples = _face_triples(triangulation, classification)
        total = 1 << k
        workers = settings.worker_count()
        if total >= settings.parallel_min_subsets and workers > 1:
            chunk = -(-total // (4 * workers))
            bounds = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
            logger.info(f"Scanning {total} selections in {len(bounds)} chunks on {workers} workers")
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = pool.map(
                    _scan_range,
                    [triples] * len(bounds),
                    [b[0] for b in bounds],
                    [b[1] for b in bounds]
                )
                masks = [mask for part in parts for mask in part]
        else:
            masks = _scan_range(triples, 0, total)

        logger.debug(f"{len(masks)} of {total} selections are simple")
        return SubpolyFamily(k=k, selections=[Selection(k=k, mask=m) for m in masks])

    def is_poor(
        self,
        triangulation: IdealTriangulation,
        classification: Optional[EdgeClassification] = None
    ) -> bool:
        """True iff the only simple subpolyhedra are the empty one and the whole spine."""
        family = self.enumerate_simple(triangulation, classification)
        return family.is_poor

    def sub_invariants(
        self,
        triangulation: IdealTriangulation,
        selection: Selection,
        classification: Optional[EdgeClassification] = None
    ) -> Tuple[int, int]:
        """
        True-vertex count and Euler characteristic of a simple subpolyhedron.

        Returns:
            (V, chi) with chi = vertices - triple edges + 2-components of the closure

        Raises:
            NotSimpleError: The selection is not simple
        """
        classification = self._classify(triangulation, classification)
        if not self.is_simple(triangulation, selection, classification):
            raise NotSimpleError(f"selection {selection.mask:#b} is not a simple subpolyhedron")

        mask = selection.mask
        slot_class = classification.slot_class
        true_vertices = 0
        touched = 0
        for t in range(triangulation.n_tets):
            hits = sum(mask >> slot_class[6 * t + i] & 1 for i in range(6))
            if hits:
                touched += 1
            if hits == 6:
                true_vertices += 1

        triple_edges = 0
        for g in triangulation.face_pairs():
            if any(mask >> slot_class[6 * g.tet + i] & 1 for i in FACE_EDGES[g.face]):
                triple_edges += 1

        return true_vertices, touched - triple_edges + bin(mask).count("1")

    def link_oracle_is_simple(
        self,
        triangulation: IdealTriangulation,
        selection: Selection,
        classification: Optional[EdgeClassification] = None
    ) -> bool:
        """
        Independent simplicity check through explicit link graphs.

        Builds the link of every true vertex and every triple edge touched by
        the selection and tests it against circle, theta and K4 up to
        homeomorphism.
        """
        classification = self._classify(triangulation, classification)
        self._check_selection(selection, classification)
        mask = selection.mask
        slot_class = classification.slot_class

        for t in range(triangulation.n_tets):
            link = nx.MultiGraph()
            link.add_nodes_from(range(4))
            for i, (a, b) in enumerate(EDGES):
                if mask >> slot_class[6 * t + i] & 1:
                    c, d = (f for f in range(4) if f not in (a, b))
                    link.add_edge(c, d)
            if link.number_of_edges() and not is_admissible_link(link):
                return False

        for g in triangulation.face_pairs():
            wings = sum(mask >> slot_class[6 * g.tet + i] & 1 for i in FACE_EDGES[g.face])
            if not wings:
                continue
            link = nx.MultiGraph()
            link.add_edges_from([("above", "below")] * wings)
            if not is_admissible_link(link):
                return False
        return True

    def separating_selection(
        self,
        triangulation: IdealTriangulation,
        vertex_class: int,
        classification: Optional[EdgeClassification] = None
    ) -> Selection:
        """
        2-components separating one boundary component's region from the rest.

        Selects the edge classes with exactly one endpoint at the given ideal
        vertex. Every face meets 0 or 2 such edges, so the result is always
        simple; with two or more boundary components it is a proper,
        nonempty subpolyhedron of a connected spine.
        """
        classification = self._classify(triangulation, classification)
        labels = triangulator.vertex_classes(triangulation)
        mask = 0
        for t in range(triangulation.n_tets):
            for i, (a, b) in enumerate(EDGES):
                inside = (labels[4 * t + a] == vertex_class) + (labels[4 * t + b] == vertex_class)
                if inside == 1:
                    mask |= 1 << classification.slot_class[6 * t + i]
        return Selection(k=classification.k, mask=mask)


# Global subpolyhedron service instance
subpoly_service = SubpolyService()
