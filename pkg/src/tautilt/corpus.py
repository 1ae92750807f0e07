"""Small algebras used throughout the tests and demos."""
from __future__ import annotations

from .algebra import AlgebraSpec, PathBasisAlgebra, Quiver, RelationSpec, build_algebra
from .field import Field


def linear_a(n: int, field: Field | None = None, rad_square_zero: bool = False) -> PathBasisAlgebra:
    """Equioriented A_n: 0 -> 1 -> ... -> n-1, optionally with all length-2 paths zero."""
    arrows = tuple((i, i, i + 1) for i in range(n - 1))
    rels = ()
    if rad_square_zero:
        rels = tuple(RelationSpec(((1, (i, i + 1)),)) for i in range(n - 2))
    return build_algebra(AlgebraSpec(Quiver(n, arrows), rels, max(n, 2), field or Field()))


def dual_numbers(field: Field | None = None) -> PathBasisAlgebra:
    """k[x]/(x^2) as one loop with the relation x^2."""
    spec = AlgebraSpec(Quiver(1, ((0, 0, 0),)), (RelationSpec(((1, (0, 0)),)),), 3, field or Field())
    return build_algebra(spec)


def semisimple(n: int, field: Field | None = None) -> PathBasisAlgebra:
    return build_algebra(AlgebraSpec(Quiver(n, ()), (), 1, field or Field()))


def corpus(field: Field | None = None) -> dict[str, PathBasisAlgebra]:
    return {
        "A1": linear_a(1, field),
        "A2": linear_a(2, field),
        "A3": linear_a(3, field),
        "k[x]/x^2": dual_numbers(field),
        "A3/rad^2": linear_a(3, field, rad_square_zero=True),
    }
