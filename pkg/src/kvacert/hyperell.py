"""The rank-2 numerical lattice of a bielliptic (hyperelliptic) surface.

Divisor classes modulo numerical equivalence form a rank-2 lattice with an
isotropic basis.  In the normalized basis (A/mu, (mu/gamma)B) the pairing of
the two generators is A*B/gamma = 1, so every one of the seven surface types
shares the intersection matrix [[0, 1], [1, 0]]; the type only contributes
the (mu, gamma) metadata and the basis label.  The canonical class is
numerically trivial on these surfaces, so it never appears explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SurfaceType:
    """One of the seven Bagnera-de Franchis classes of bielliptic surfaces.

    ``mu`` is the lcm of the singular-fibre multiplicities, ``gamma`` the
    order of the acting group; the basis of the numerical lattice is
    A/mu, (mu/gamma)B.
    """

    id: int
    group_name: str
    fiber_multiplicities: tuple[int, ...]
    mu: int
    gamma: int
    basis_label: str


_SURFACES = (
    SurfaceType(1, "Z2", (2, 2, 2, 2), 2, 2, "A/2, B"),
    SurfaceType(2, "Z2xZ2", (2, 2, 2, 2), 2, 4, "A/2, B/2"),
    SurfaceType(3, "Z4", (2, 4, 4), 4, 4, "A/4, B"),
    SurfaceType(4, "Z4xZ2", (2, 4, 4), 4, 8, "A/4, B/2"),
    SurfaceType(5, "Z3", (3, 3, 3), 3, 3, "A/3, B"),
    SurfaceType(6, "Z3xZ3", (3, 3, 3), 3, 9, "A/3, B/3"),
    SurfaceType(7, "Z6", (2, 3, 6), 6, 6, "A/6, B"),
)


def surface_table() -> list[SurfaceType]:
    """All seven surface types, in id order."""
    return list(_SURFACES)


def surface_by_id(type_id: int) -> SurfaceType:
    for s in _SURFACES:
        if s.id == type_id:
            return s
    raise ValueError(f"unknown surface type id: {type_id} (valid: 1..7)")


@dataclass(frozen=True)
class DivisorClass:
    """Numerical class a*(A/mu) + b*(mu/gamma)*B, integer coordinates.

    ``surface_id`` is optional metadata; when two tagged classes from
    different surface types meet in a pairing, the operation is rejected.
    """

    a: int
    b: int
    surface_id: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("divisor coordinates must be integers")
        if self.surface_id is not None:
            surface_by_id(self.surface_id)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_surface(self, other)
        return DivisorClass(self.a + other.a, self.b + other.b, _merged_id(self, other))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_surface(self, other)
        return DivisorClass(self.a - other.a, self.b - other.b, _merged_id(self, other))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b, self.surface_id)


def _check_same_surface(d1: DivisorClass, d2: DivisorClass) -> None:
    if (
        d1.surface_id is not None
        and d2.surface_id is not None
        and d1.surface_id != d2.surface_id
    ):
        raise ValueError(
            f"mixed surface types: {d1.surface_id} vs {d2.surface_id}"
        )


def _merged_id(d1: DivisorClass, d2: DivisorClass) -> int | None:
    return d1.surface_id if d1.surface_id is not None else d2.surface_id


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number a1*b2 + a2*b1 (the hyperbolic form [[0,1],[1,0]])."""
    _check_same_surface(d1, d2)
    return d1.a * d2.b + d2.a * d1.b


def self_intersection(d: DivisorClass) -> int:
    """Self-intersection 2ab."""
    return 2 * d.a * d.b


def is_ample(d: DivisorClass) -> bool:
    """Ampleness criterion on these surfaces: both coordinates positive."""
    return d.a > 0 and d.b > 0


def is_nonzero_effective_cone(d: DivisorClass) -> bool:
    """Nonzero class with nonnegative coordinates.

    This is the numerical-effectivity cone over which obstruction
    candidates are enumerated; no section computation is involved.
    """
    return d.a >= 0 and d.b >= 0 and (d.a, d.b) != (0, 0)


def kva_sufficient(d: DivisorClass, k: int) -> bool:
    """Sufficient numerical condition for k-very ampleness on the base surface.

    A class with a >= k+2 and b >= k+2 is k-very ample (Mella-Palleschi).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return d.a >= k + 2 and d.b >= k + 2
