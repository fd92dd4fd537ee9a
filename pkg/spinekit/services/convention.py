"""The frozen rule turning o-graph edges into tetrahedron face gluings.

Slots of a crossing are first counted from the over-strand: slot k becomes
r = (k - o) mod 4, with o = 0 when the over-strand is on slots {0,2} and
o = 1 when it is on {1,3}. Slot r goes to face ``slot_map[r]``; the frozen
map is the identity, so the over-strand lands on faces {0,2}. Seen from
outside face e, its three vertex labels read counterclockwise from the
apex e+2 as ``CCW_LABELS[e]``; ``CW_LABELS[e]`` reads them clockwise. An
edge of color c glues face p to face q by sending the i-th counterclockwise
label of p to the (i + shift(c))-th clockwise label of q (counterclockwise
when ``ccw_target`` is set). docs/CONVENTIONS.md has the derivation and
the calibration table.
"""
from typing import Dict, Tuple

from spinekit.models.schemas import Crossing, GluingConvention

Perm = Tuple[int, int, int, int]

CCW_LABELS: Dict[int, Tuple[int, int, int]] = {
    0: (2, 1, 3),
    1: (3, 0, 2),
    2: (0, 3, 1),
    3: (1, 2, 0),
}
CW_LABELS: Dict[int, Tuple[int, int, int]] = {
    face: (labels[0], labels[2], labels[1]) for face, labels in CCW_LABELS.items()
}

FROZEN_CONVENTION = GluingConvention(slot_map=(0, 1, 2, 3), color_shift=(0, 1, 2), ccw_target=False)


def face_of_slot(crossing: Crossing, slot: int, convention: GluingConvention = FROZEN_CONVENTION) -> int:
    """Tetrahedron face dual to an edge-end at the given slot."""
    offset = 0 if crossing.over == "02" else 1
    return convention.slot_map[(slot - offset) % 4]


def gluing_perm(p: int, q: int, color: int, convention: GluingConvention = FROZEN_CONVENTION) -> Perm:
    """Vertex map of the gluing face p -> face q for an edge of the given color."""
    shift = convention.color_shift[color]
    target = CCW_LABELS[q] if convention.ccw_target else CW_LABELS[q]
    image = [0, 0, 0, 0]
    image[p] = q
    for i, label in enumerate(CCW_LABELS[p]):
        image[label] = target[(i + shift) % 3]
    return tuple(image)


def invert(perm: Perm) -> Perm:
    inverse = [0, 0, 0, 0]
    for v, w in enumerate(perm):
        inverse[w] = v
    return tuple(inverse)


def is_odd(perm: Perm) -> bool:
    inversions = sum(
        1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
    )
    return inversions % 2 == 1
