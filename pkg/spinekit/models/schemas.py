"""Pydantic schemas for every domain object the toolkit passes around."""
import math
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator


def _as_golden(other: object) -> Optional["GoldenInt"]:
    if isinstance(other, GoldenInt):
        return other
    if isinstance(other, int) and not isinstance(other, bool):
        return GoldenInt(a=other, b=0)
    return None


class GoldenInt(BaseModel):
    """Exact element a + b*eps of Z[eps], eps^2 = eps + 1."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(default=0, description="Coefficient of 1")
    b: int = Field(default=0, description="Coefficient of eps")

    @classmethod
    def of(cls, a: int, b: int = 0) -> "GoldenInt":
        return cls(a=a, b=b)

    def __add__(self, other: Union[int, "GoldenInt"]) -> "GoldenInt":
        rhs = _as_golden(other)
        if rhs is None:
            return NotImplemented
        return GoldenInt(a=self.a + rhs.a, b=self.b + rhs.b)

    def __radd__(self, other: Union[int, "GoldenInt"]) -> "GoldenInt":
        return self + other

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(a=-self.a, b=-self.b)

    def __sub__(self, other: Union[int, "GoldenInt"]) -> "GoldenInt":
        rhs = _as_golden(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __mul__(self, other: Union[int, "GoldenInt"]) -> "GoldenInt":
        rhs = _as_golden(other)
        if rhs is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, rhs.a, rhs.b
        return GoldenInt(a=a * c + b * d, b=a * d + b * c + b * d)

    def __rmul__(self, other: Union[int, "GoldenInt"]) -> "GoldenInt":
        return self * other

    def __str__(self) -> str:
        if self.b < 0:
            return f"{self.a} - {-self.b}*eps"
        return f"{self.a} + {self.b}*eps"


class EndRef(BaseModel):
    """One edge-end: a vertex index and a slot 0..3 at that vertex."""
    model_config = ConfigDict(frozen=True)

    vertex: int = Field(..., ge=0, description="Vertex index")
    slot: int = Field(..., ge=0, le=3, description="Counterclockwise slot at the vertex")

    @property
    def key(self) -> Tuple[int, int]:
        return (self.vertex, self.slot)

    def __str__(self) -> str:
        return f"{self.vertex}.{self.slot}"


class Crossing(BaseModel):
    """Crossing data of one o-graph vertex."""
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0, description="Vertex index")
    over: Literal["02", "13"] = Field(..., description="Slot diagonal carrying the over-passing strand")

    @property
    def ends(self) -> List[EndRef]:
        """The four ends in counterclockwise slot order."""
        return [EndRef(vertex=self.index, slot=slot) for slot in range(4)]

    @property
    def over_slots(self) -> Tuple[int, int]:
        return (0, 2) if self.over == "02" else (1, 3)


class OEdge(BaseModel):
    """Edge of an o-graph with its Z_3 color."""
    model_config = ConfigDict(frozen=True)

    end_a: EndRef
    end_b: EndRef
    color: int = Field(..., ge=0, le=2, description="Element of Z_3")

    @property
    def is_loop(self) -> bool:
        return self.end_a.vertex == self.end_b.vertex

    def canonical(self) -> "OEdge":
        if self.end_b.key < self.end_a.key:
            return OEdge(end_a=self.end_b, end_b=self.end_a, color=self.color)
        return self


class OGraph(BaseModel):
    """Decorated 4-regular graph: crossings at vertices, colors on edges."""
    model_config = ConfigDict(frozen=True)

    vertices: List[Crossing]
    edges: List[OEdge]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def canonical(self) -> "OGraph":
        """Ends ordered inside each edge, edges sorted by (min end, max end)."""
        edges = sorted(
            (edge.canonical() for edge in self.edges),
            key=lambda e: (e.end_a.key, e.end_b.key)
        )
        vertices = sorted(self.vertices, key=lambda v: v.index)
        return OGraph(vertices=vertices, edges=edges)

    def loops(self) -> List[OEdge]:
        return [edge for edge in self.edges if edge.is_loop]


class Gluing(BaseModel):
    """Face (tet, face) glued to (partner_tet, partner_face).

    ``perm`` is the full vertex map of the tetrahedron, with
    ``perm[face] == partner_face``.
    """
    model_config = ConfigDict(frozen=True)

    tet: int = Field(..., ge=0)
    face: int = Field(..., ge=0, le=3)
    partner_tet: int = Field(..., ge=0)
    partner_face: int = Field(..., ge=0, le=3)
    perm: Tuple[int, int, int, int]

    def face_image(self) -> Tuple[int, int, int]:
        """Images of the face's three vertex labels in ascending order."""
        return tuple(self.perm[v] for v in range(4) if v != self.face)


class IdealTriangulation(BaseModel):
    """n tetrahedra with face pairings; ``gluings[4*tet + face]`` is that face's pairing."""
    model_config = ConfigDict(frozen=True)

    n_tets: int = Field(..., ge=1, description="Tetrahedra (true vertices of the dual spine)")
    gluings: List[Gluing]

    def pairing(self, tet: int, face: int) -> Gluing:
        return self.gluings[4 * tet + face]

    def face_pairs(self) -> List[Gluing]:
        """Each glued pair of faces listed once, from its smaller side."""
        return [
            g for g in self.gluings
            if (g.tet, g.face) < (g.partner_tet, g.partner_face)
        ]


class EdgeClassification(BaseModel):
    """Partition of the 6n tetrahedron-edge slots into edge classes."""
    slot_class: List[int] = Field(..., description="Class id of each slot 6*tet + edge")
    classes: List[List[int]] = Field(..., description="Slots of each class, numbered by smallest slot")

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> List[int]:
        return [len(members) for members in self.classes]


class SpineStrata(BaseModel):
    """Strata counts of the dual special spine."""
    true_vertices: int
    triple_edges: int
    components2: int
    euler: int


class BoundaryReport(BaseModel):
    """Boundary surface assembled from truncation triangles."""
    component_count: int
    genus_per_component: List[int]
    euler_boundary: int


class Selection(BaseModel):
    """Subset of 2-components as a bitmask over the k edge classes."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0)
    mask: int = Field(..., ge=0)

    @field_validator("mask")
    @classmethod
    def mask_fits(cls, v: int, info: ValidationInfo) -> int:
        k = info.data.get("k")
        if k is not None and v >> k:
            raise ValueError(f"mask {v} exceeds {k} components")
        return v

    @classmethod
    def full(cls, k: int) -> "Selection":
        return cls(k=k, mask=(1 << k) - 1)

    @classmethod
    def empty(cls, k: int) -> "Selection":
        return cls(k=k, mask=0)

    @property
    def classes(self) -> List[int]:
        return [c for c in range(self.k) if self.mask >> c & 1]

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.k) - 1


class SubpolyFamily(BaseModel):
    """All simple subpolyhedra, ascending by bitmask."""
    k: int
    selections: List[Selection]

    @property
    def masks(self) -> List[int]:
        return [s.mask for s in self.selections]

    @property
    def is_poor(self) -> bool:
        """Only the empty and the full selection are simple."""
        return self.masks == [0, (1 << self.k) - 1]


class EpsilonTerm(BaseModel):
    """One simple subpolyhedron and its weight."""
    selection: Selection
    vertices: int
    euler: int
    weight: GoldenInt


class EpsilonInvariant(BaseModel):
    """Exact value of t(M) with its term table."""
    value: GoldenInt
    terms: List[EpsilonTerm]


class Angle(BaseModel):
    """Dihedral angle of a regular truncated tetrahedron."""
    model_config = ConfigDict(frozen=True)

    theta: float = Field(..., ge=0.0, lt=math.pi / 3, description="Radians")


class VolumeResult(BaseModel):
    """Volume evaluated with both formulas."""
    theta: float
    via_integral: float
    via_lobachevsky: float
    discrepancy: float
    agreed: bool
    scale: int = Field(default=1, description="Number of tetrahedra the single-tetrahedron volume is multiplied by")

    @property
    def value(self) -> float:
        return self.via_lobachevsky


class GluingConvention(BaseModel):
    """Slot/color rule turning o-graph edges into face gluings."""
    model_config = ConfigDict(frozen=True)

    slot_map: Tuple[int, int, int, int] = Field(
        default=(0, 1, 2, 3),
        description="Face receiving each slot, slots counted from the over-strand"
    )
    color_shift: Tuple[int, int, int] = Field(default=(0, 1, 2), description="Rotation applied for colors 0, 1, 2")
    ccw_target: bool = Field(default=False, description="Read the target face counterclockwise instead of clockwise")

    @field_validator("slot_map")
    @classmethod
    def slots_permute(cls, v: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        if sorted(v) != [0, 1, 2, 3]:
            raise ValueError(f"slot_map must permute 0..3, got {v}")
        return v

    @field_validator("color_shift")
    @classmethod
    def is_permutation(cls, v: Tuple[int, int, int]) -> Tuple[int, int, int]:
        if sorted(v) != [0, 1, 2]:
            raise ValueError(f"color_shift must permute 0,1,2, got {v}")
        return v

    @property
    def label(self) -> str:
        slots = "".join(str(f) for f in self.slot_map)
        shift = "".join(str(c) for c in self.color_shift)
        return f"slots={slots} shift={shift} read={'ccw' if self.ccw_target else 'cw'}"


class CalibrationResult(BaseModel):
    """Outcome of checking one convention against the G_5/G_9 facts."""
    convention: GluingConvention
    passed: bool
    frozen: bool
    detail: str
    reproduces_drawn_g9: bool = Field(
        default=False,
        description="Whether the as-drawn G_9 colors meet the same facts under this convention"
    )


class SpineReport(BaseModel):
    """Full analysis of one input file."""
    source: str
    n_tets: Optional[int] = None
    edge_class_sizes: List[int] = Field(default_factory=list)
    triple_edges: Optional[int] = None
    components2: Optional[int] = None
    euler: Optional[int] = None
    boundary_components: Optional[int] = None
    boundary_genera: List[int] = Field(default_factory=list)
    poor: Optional[bool] = None
    simple_subpolyhedra: Optional[int] = None
    epsilon: Optional[GoldenInt] = None
    epsilon_float: Optional[float] = None
    regular_angle: Optional[float] = None
    volume: Optional[VolumeResult] = None
    geodesic_class: Optional[str] = None
    complexity_if_hyperbolic: Optional[int] = None
    error: Optional[str] = None


class CriterionResult(BaseModel):
    """One acceptance check."""
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


class VerificationSummary(BaseModel):
    """Totals over all acceptance checks."""
    total: int
    passed: int
    failed: int


class VerificationReport(BaseModel):
    """Acceptance run output."""
    results: List[CriterionResult]
    summary: VerificationSummary
    conventions: Dict[str, bool] = Field(default_factory=dict)
