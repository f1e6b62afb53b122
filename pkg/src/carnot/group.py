"""Group structure of 2-step algebras in exponential coordinates.

For nilpotency degree at most 2 the Baker-Campbell-Hausdorff series stops
after the first bracket, so the product of exp(x) and exp(y) is
exp(x + y + [x, y]/2) exactly and group elements can share the algebra's
coordinates.  The scalable-lattice construction completes the halved
brackets of first-layer basis vectors to a second-layer basis and checks
the resulting integer span is closed under products and under the
dilation by 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import CheckResult, Dilation, GradedLieAlgebra, InputError, Subspace
from .linalg import Matrix, Vector, ZERO

HALF = Fraction(1, 2)


def _require_two_step(algebra: GradedLieAlgebra) -> None:
    if algebra.declared_degree > 2:
        raise InputError(
            "group coordinates need nilpotency degree <= 2, got %d layers"
            % algebra.declared_degree
        )


class GroupElement:
    """Element of the simply connected group, in exponential coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: GradedLieAlgebra, coords: Sequence) -> None:
        _require_two_step(algebra)
        self.algebra = algebra
        self.coords: Vector = linalg.vector(coords)
        if len(self.coords) != algebra.dimension:
            raise InputError("coordinate length does not match the algebra")

    @classmethod
    def identity(cls, algebra: GradedLieAlgebra) -> "GroupElement":
        return cls(algebra, linalg.zero_vector(algebra.dimension))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.algebra is not self.algebra:
            raise InputError("elements live in different groups")
        bracket = self.algebra.bracket(self.coords, other.coords)
        coords = tuple(
            a + b + HALF * c
            for a, b, c in zip(self.coords, other.coords, bracket)
        )
        return GroupElement(self.algebra, coords)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.algebra, tuple(-c for c in self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return "GroupElement(%s)" % self.algebra.describe(self.coords)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    return x * y


def group_scaling(t, g: GroupElement) -> GroupElement:
    """Dilation as a group automorphism in exponential coordinates."""
    d = Dilation(g.algebra, t)
    return GroupElement(g.algebra, d(g.coords))


@dataclass(frozen=True)
class LatticeSpec:
    """Generating set whose integer span should be a scaled-in lattice."""

    algebra: GradedLieAlgebra
    generators: Matrix

    def __post_init__(self) -> None:
        _require_two_step(self.algebra)
        if linalg.rank(self.generators) != self.algebra.dimension:
            raise InputError("lattice generators must span the algebra")

    def membership(self, v: Sequence) -> Vector | None:
        """Integer coordinates of ``v`` in the generators, or None."""
        coeffs = linalg.solve_columns(self.generators, v)
        if coeffs is None:
            return None
        if any(c.denominator != 1 for c in coeffs):
            return None
        return coeffs


def build_scalable_lattice(algebra: GradedLieAlgebra) -> LatticeSpec:
    """Generators: first-layer basis plus a completion of halved brackets.

    Candidate second-layer generators are the vectors [a, b]/2 over
    first-layer basis pairs in lexicographic order, each normalised to a
    positive leading coefficient, keeping those that grow the span; any
    second-layer direction still missing is padded with half the catalog
    basis vector.  The result is deterministic.
    """
    _require_two_step(algebra)
    v1 = algebra.layers[0]
    v2 = algebra.layers[1] if algebra.declared_degree == 2 else ()
    generators: list[Vector] = [algebra.basis_vector(i) for i in v1]
    second: list[Vector] = []
    for a_pos in range(len(v1)):
        for b_pos in range(a_pos + 1, len(v1)):
            candidate = algebra.bracket(
                algebra.basis_vector(v1[a_pos]), algebra.basis_vector(v1[b_pos])
            )
            candidate = tuple(HALF * c for c in candidate)
            if all(c == 0 for c in candidate):
                continue
            lead = next(c for c in candidate if c != 0)
            if lead < 0:
                candidate = tuple(-c for c in candidate)
            if linalg.rank(second + [candidate]) > len(second):
                second.append(candidate)
            if len(second) == len(v2):
                break
        else:
            continue
        break
    covered = linalg.rref(second)
    for i in v2:
        basis_vec = algebra.basis_vector(i)
        if not linalg.in_row_span(covered, basis_vec):
            second.append(tuple(HALF * c for c in basis_vec))
            covered = linalg.rref(second)
    return LatticeSpec(algebra, tuple(generators + second))


def check_group_closure(spec: LatticeSpec) -> CheckResult:
    """Every product of generator exponentials stays in the integer span."""
    algebra = spec.algebra
    elements = [GroupElement(algebra, g) for g in spec.generators]
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            product = x * y
            if spec.membership(product.coords) is None:
                return CheckResult(
                    False,
                    "product of generators %d and %d leaves the integer span: %s"
                    % (i, j, algebra.describe(product.coords)),
                )
    return CheckResult(True)


def check_scaling_closure(spec: LatticeSpec) -> CheckResult:
    """The dilation by 2 maps every generator into the integer span."""
    algebra = spec.algebra
    double = Dilation(algebra, 2)
    for i, g in enumerate(spec.generators):
        image = double(g)
        if spec.membership(image) is None:
            return CheckResult(
                False,
                "dilation by 2 of generator %d leaves the integer span: %s"
                % (i, algebra.describe(image)),
            )
    return CheckResult(True)
