"""Type definitions for the dissociation-spectral toolkit."""

from __future__ import annotations

import math
import re
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FamilyType(str, Enum):
    """The two attachment families: P7 spine (G) and W5 base (H)."""
    G_TYPE = "G"
    H_TYPE = "H"


class SmithKind(str, Enum):
    """Connected graphs with spectral radius at most 2."""
    W = "W"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    W_TILDE = "W~"
    E6_TILDE = "E6~"
    E7_TILDE = "E7~"
    E8_TILDE = "E8~"


class Ordering(str, Enum):
    """Ordering of two real numbers."""
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"  # nothing to check at this size


_SPEC_PATTERN = re.compile(
    r"^\s*([GH])\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$"
)


class FamilySpec(BaseModel):
    """Parameters (a,b,c;p,q,r) of a G-type or H-type family graph.

    a, b, c count pendant leaves and p, q, r count pendant 2-paths at the
    first, second and third anchor.
    """
    model_config = ConfigDict(frozen=True)

    family: FamilyType = FamilyType.G_TYPE
    a: int = Field(ge=0, description="Leaves at the first anchor")
    b: int = Field(ge=0, description="Leaves at the second anchor")
    c: int = Field(ge=0, description="Leaves at the third anchor")
    p: int = Field(ge=0, description="Pendant 2-paths at the first anchor")
    q: int = Field(ge=0, description="Pendant 2-paths at the second anchor")
    r: int = Field(ge=0, description="Pendant 2-paths at the third anchor")

    @classmethod
    def g(cls, a: int, b: int, c: int, p: int, q: int, r: int) -> "FamilySpec":
        return cls(family=FamilyType.G_TYPE, a=a, b=b, c=c, p=p, q=q, r=r)

    @classmethod
    def h(cls, a: int, b: int, c: int, p: int, q: int, r: int) -> "FamilySpec":
        return cls(family=FamilyType.H_TYPE, a=a, b=b, c=c, p=p, q=q, r=r)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the label form, e.g. ``G(1,0,0;6,5,6)``."""
        match = _SPEC_PATTERN.match(text)
        if not match:
            raise ValueError(f"not a family spec: {text!r}")
        family, *values = match.groups()
        return cls(family=FamilyType(family), **dict(zip("abcpqr", map(int, values))))

    @property
    def base_order(self) -> int:
        return 7 if self.family == FamilyType.G_TYPE else 5

    @property
    def n(self) -> int:
        return self.base_order + self.a + self.b + self.c + 2 * (self.p + self.q + self.r)

    @property
    def leaves(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def two_paths(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def anchor_degrees(self) -> Tuple[int, int, int]:
        if self.family == FamilyType.G_TYPE:
            return (1 + self.a + self.p, 2 + self.b + self.q, 1 + self.c + self.r)
        return (1 + self.a + self.p, 1 + self.b + self.q, 1 + self.c + self.r)

    @property
    def max_degree(self) -> int:
        base = 2 if self.family == FamilyType.G_TYPE else 3
        return max(base, *self.anchor_degrees)

    def mirrored(self) -> "FamilySpec":
        """Reverse the spine; only meaningful for G-type specs."""
        return self.model_copy(update={"a": self.c, "c": self.a, "p": self.r, "r": self.p})

    @property
    def label(self) -> str:
        return f"{self.family.value}({self.a},{self.b},{self.c};{self.p},{self.q},{self.r})"

    def sort_key(self) -> Tuple[str, int, int, int, int, int, int]:
        return (self.family.value, self.a, self.b, self.c, self.p, self.q, self.r)

    def __str__(self) -> str:
        return self.label


class Spectrum(BaseModel):
    """Spectral radius of a connected graph with its Perron vector."""
    rho: float = Field(ge=0.0)
    perron: List[float]
    residual: float = Field(ge=0.0, description="Infinity norm of A x - rho x")
    iterations: int = Field(ge=0)

    @model_validator(mode="after")
    def _unit_positive(self) -> "Spectrum":
        if self.perron:
            norm = math.sqrt(math.fsum(x * x for x in self.perron))
            if abs(norm - 1.0) > 1e-12:
                raise ValueError(f"Perron vector norm {norm!r} is not 1")
            if min(self.perron) <= 0.0:
                raise ValueError("Perron vector must be positive")
        return self


class DissociationCertificate(BaseModel):
    """A vertex set inducing maximum degree at most one."""
    model_config = ConfigDict(populate_by_name=True)

    vertices: List[int] = Field(alias="set")
    size: int = Field(ge=0)
    max_induced_degree: int = Field(ge=0, le=1)

    @model_validator(mode="after")
    def _size_matches(self) -> "DissociationCertificate":
        if self.size != len(self.vertices):
            raise ValueError("size must equal the number of vertices")
        return self


class Hypergraph(BaseModel):
    """Hypergraph on V minus D; ``kinds[i]`` is 1, 2 or 3 for edge i."""
    vertices: List[int]
    edges: List[Tuple[int, ...]] = Field(default_factory=list)
    kinds: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _edges_inside(self) -> "Hypergraph":
        present = set(self.vertices)
        if len(self.kinds) != len(self.edges):
            raise ValueError("every hyperedge needs a kind")
        for edge, kind in zip(self.edges, self.kinds):
            if len(edge) < 2 or not set(edge) <= present:
                raise ValueError(f"bad hyperedge {edge}")
            if kind == 1 and len(edge) != 2:
                raise ValueError(f"graph edge {edge} must have two vertices")
        return self


LaurentPoly = Dict[int, int]


class CasePolyEntry(BaseModel):
    """One determinant display of the case analysis.

    ``closed_form`` holds the coefficients of lambda^3, lambda^2, lambda and 1,
    each a Laurent polynomial in t stored as {power: integer coefficient}.
    """
    model_config = ConfigDict(frozen=True)

    case_id: int = Field(ge=1, le=6, description="Case k covers n = 6m + k - 1")
    label: str
    params: Tuple[int, int, int, int, int, int] = Field(description="(a, b, c, m1, m2, m3)")
    closed_form: Tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]
    winner: bool = False

    @property
    def residue(self) -> int:
        return self.case_id - 1

    def coefficients(self, t):
        """Coefficients at t (scalar or numpy array), highest degree first."""
        return tuple(
            sum(coef * t ** power for power, coef in poly.items()) if poly else 0 * t
            for poly in self.closed_form
        )

    def evaluate(self, lam, t):
        c3, c2, c1, c0 = self.coefficients(t)
        return ((c3 * lam + c2) * lam + c1) * lam + c0

    def candidate_spec(self, m: int) -> FamilySpec:
        a, b, c, m1, m2, m3 = self.params
        return FamilySpec.g(a, b, c, m + m1, m + m2, m + m3)


class PerronExtension(BaseModel):
    """Perron vector of a family graph assembled from its anchor values."""
    family: FamilyType
    rho: float = Field(gt=1.0)
    x: Tuple[float, float, float]
    y: Tuple[float, float, float]
    z: Tuple[float, float, float]
    w: Tuple[float, float, float]
    spine: Dict[str, float]
    vector: List[float]

    @model_validator(mode="after")
    def _positive(self) -> "PerronExtension":
        if min(self.vector, default=1.0) <= 0.0:
            raise ValueError("Perron extension must be positive")
        return self
