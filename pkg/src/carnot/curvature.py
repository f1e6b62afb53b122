"""Sectional curvature of the left-invariant metric making the basis
orthonormal.

The general formula takes the structure constants alpha_uvw (coefficient
of e_w in [e_u, e_v]) of an orthonormal basis and returns exact plane
curvatures.  For 2-step algebras the three layer cases collapse to short
closed forms, kept separately as an independent route to the same values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import GradedLieAlgebra, InputError, Subspace
from .linalg import ZERO

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)
THREE_QUARTERS = Fraction(3, 4)


def _alpha(algebra: GradedLieAlgebra, u: int, v: int, w: int) -> Fraction:
    return algebra.bracket_basis(u, v).get(w, ZERO)


def sectional_curvature(algebra: GradedLieAlgebra, u, v) -> Fraction:
    """Curvature of the plane spanned by two distinct basis vectors.

    Arguments may be labels or indices.  The basis is treated as
    orthonormal; the value is a sum over all basis directions of quadratic
    expressions in the structure constants.
    """
    i = u if isinstance(u, int) else algebra.index(u)
    j = v if isinstance(v, int) else algebra.index(v)
    if i == j:
        raise InputError("need two distinct directions")
    total = ZERO
    for k in range(algebra.dimension):
        a_ijk = _alpha(algebra, i, j, k)
        a_jki = _alpha(algebra, j, k, i)
        a_kij = _alpha(algebra, k, i, j)
        a_kii = _alpha(algebra, k, i, i)
        a_kjj = _alpha(algebra, k, j, j)
        total += (
            HALF * a_ijk * (-a_ijk + a_jki + a_kij)
            - QUARTER * (a_ijk - a_jki + a_kij) * (a_ijk + a_jki - a_kij)
            - a_kii * a_kjj
        )
    return total


def two_step_closed_forms(algebra: GradedLieAlgebra, u, v) -> Fraction:
    """Layer-case formulas valid when the algebra is 2-step.

    Both horizontal: -3/4 times the squared bracket length.  One vector per
    layer: +1/4 times the squared column of structure constants.  Both in
    the second layer: zero.
    """
    if algebra.declared_degree > 2:
        raise InputError("closed forms hold for 2-step algebras only")
    i = u if isinstance(u, int) else algebra.index(u)
    j = v if isinstance(v, int) else algebra.index(v)
    if i == j:
        raise InputError("need two distinct directions")
    first = set(algebra.layers[0])
    in1_i, in1_j = i in first, j in first
    if in1_i and in1_j:
        bracket = algebra.bracket_basis(i, j)
        return -THREE_QUARTERS * sum(
            (c * c for w, c in bracket.items() if w not in first), start=ZERO
        )
    if not in1_i and not in1_j:
        return ZERO
    if not in1_i:
        i, j = j, i
    # i horizontal, j in the second layer
    return QUARTER * sum(
        (_alpha(algebra, k, i, j) ** 2 for k in first), start=ZERO
    )


@dataclass(frozen=True)
class TrichotomyItem:
    holds: bool | None
    detail: str
    witnesses: tuple[tuple[str, str, Fraction], ...] = ()


@dataclass(frozen=True)
class CurvatureReport:
    ordered_basis: tuple[str, ...]
    planes: tuple[tuple[str, str, Fraction], ...]
    flat_inside: TrichotomyItem
    negative_toward_horizontal: TrichotomyItem
    positive_toward_vertical: TrichotomyItem


def trichotomy_report(
    algebra: GradedLieAlgebra, s: Subspace, maximal_asserted: bool = False
) -> CurvatureReport:
    """Three sign statements for planes meeting a certified subspace.

    With the basis reordered so that ``s`` comes first: planes inside ``s``
    are flat; every remaining horizontal direction spans a negatively
    curved plane with some vector of ``s`` (this needs ``s`` maximal, which
    the caller asserts via ``maximal_asserted``; without the assertion the
    item is reported as not evaluated); every second-layer direction spans
    a positively curved plane with some vector of ``s``.
    """
    if algebra.declared_degree > 2:
        raise InputError("trichotomy applies to 2-step algebras")
    labels = s.coordinate_labels()
    if labels is None:
        raise InputError("trichotomy needs a span of basis vectors")
    if not s.is_horizontal():
        raise InputError("subspace is not horizontal")
    chosen = [algebra.index(l) for l in labels]
    first = [i for i in algebra.layers[0] if i not in set(chosen)]
    rest = [i for i in range(algebra.dimension) if algebra.layer_of(i) > 1]
    order = chosen + first + rest
    names = tuple(algebra.basis[i] for i in order)

    planes = tuple(
        (algebra.basis[a], algebra.basis[b], sectional_curvature(algebra, a, b))
        for a, b in itertools.combinations(order, 2)
    )

    flat_bad = []
    for a, b in itertools.combinations(chosen, 2):
        value = sectional_curvature(algebra, a, b)
        if value != 0:
            flat_bad.append((algebra.basis[a], algebra.basis[b], value))
    flat = TrichotomyItem(
        not flat_bad,
        "planes inside the subspace are flat"
        if not flat_bad
        else "nonzero curvature inside the subspace",
        tuple(flat_bad),
    )

    def witness_search(targets, want_negative):
        witnesses = []
        missing = []
        for j in targets:
            found = None
            for a in chosen:
                value = sectional_curvature(algebra, a, j)
                if (value < 0) if want_negative else (value > 0):
                    found = (algebra.basis[a], algebra.basis[j], value)
                    break
            if found is None:
                missing.append(algebra.basis[j])
            else:
                witnesses.append(found)
        return witnesses, missing

    neg_witnesses, neg_missing = witness_search(first, want_negative=True)
    if not maximal_asserted:
        negative = TrichotomyItem(
            None,
            "not evaluated: needs the subspace asserted maximal among "
            "certified ones",
            tuple(neg_witnesses),
        )
    else:
        negative = TrichotomyItem(
            not neg_missing,
            "each horizontal direction outside the subspace pairs negatively"
            if not neg_missing
            else "no negatively curved partner for: %s" % ", ".join(neg_missing),
            tuple(neg_witnesses),
        )

    pos_witnesses, pos_missing = witness_search(rest, want_negative=False)
    positive = TrichotomyItem(
        not pos_missing,
        "each second-layer direction pairs positively"
        if not pos_missing
        else "no positively curved partner for: %s" % ", ".join(pos_missing),
        tuple(pos_witnesses),
    )

    return CurvatureReport(names, planes, flat, negative, positive)
