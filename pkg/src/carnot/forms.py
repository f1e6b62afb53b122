"""Left-invariant alternating forms with exact coefficients.

A form of degree p is a Fraction combination of monomials, each monomial a
strictly increasing tuple of basis indices standing for the wedge of the
corresponding dual covectors.  Evaluation is the determinant of the
pairing matrix, with no factorial normalisation, so the monomials are dual
to the increasing basis tuples.

The differential follows the convention

    (p+1)! (dg)(X_0, ..., X_p) =
        sum over i < j of (-1)^(i+j+1) g([X_i, X_j], X_0, ..  omitting X_i
        and X_j .., X_p)

which differs from the common Koszul sign by a global factor; the square
still vanishes and all consumers here only use zero sets and ranks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .algebra import GradedLieAlgebra, InputError, Subspace
from .linalg import Vector, ZERO

Monomial = tuple[int, ...]


def _merge_sign(left: Monomial, right: Monomial) -> tuple[Monomial, int]:
    """Sorted concatenation and the parity of the merge; 0 on a repeat."""
    merged = []
    sign = 1
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            return (), 0
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            # right[j] jumps over the remaining left entries
            if (len(left) - i) % 2 == 1:
                sign = -sign
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), sign


class InvariantForm:
    """Alternating form on the algebra, stored sparsely by monomial."""

    __slots__ = ("algebra", "degree", "terms")

    def __init__(
        self,
        algebra: GradedLieAlgebra,
        degree: int,
        terms: Mapping[Monomial, object] | None = None,
    ) -> None:
        n = algebra.dimension
        if not 1 <= degree <= n:
            raise InputError("form degree must be between 1 and %d" % n)
        self.algebra = algebra
        self.degree = degree
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != degree:
                raise InputError("monomial %r has wrong arity" % (mono,))
            if any(not 0 <= i < n for i in mono):
                raise InputError("monomial index out of range in %r" % (mono,))
            if any(a >= b for a, b in zip(mono, mono[1:])):
                raise InputError("monomial %r is not strictly increasing" % (mono,))
            c = Fraction(coeff)
            if c != 0:
                clean[mono] = clean.get(mono, ZERO) + c
        self.terms = {m: c for m, c in sorted(clean.items()) if c != 0}

    @classmethod
    def dual(cls, algebra: GradedLieAlgebra, label_or_index) -> "InvariantForm":
        i = (
            label_or_index
            if isinstance(label_or_index, int)
            else algebra.index(label_or_index)
        )
        return cls(algebra, 1, {(i,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantForm):
            return NotImplemented
        if self.algebra is not other.algebra:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __add__(self, other: "InvariantForm") -> "InvariantForm":
        if other.algebra is not self.algebra:
            raise InputError("forms live on different algebras")
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise InputError("cannot add forms of different degree")
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged.get(mono, ZERO) + c
        return InvariantForm(self.algebra, self.degree, merged)

    def __neg__(self) -> "InvariantForm":
        return InvariantForm(
            self.algebra, self.degree, {m: -c for m, c in self.terms.items()}
        )

    def __sub__(self, other: "InvariantForm") -> "InvariantForm":
        return self + (-other)

    def __rmul__(self, scalar) -> "InvariantForm":
        c = Fraction(scalar)
        return InvariantForm(
            self.algebra, self.degree, {m: c * v for m, v in self.terms.items()}
        )

    def evaluate(self, vectors: Sequence[Sequence[Fraction]]) -> Fraction:
        """Value on a tuple of vectors: sum of pairing determinants."""
        if len(vectors) != self.degree:
            raise InputError(
                "form of degree %d applied to %d vectors" % (self.degree, len(vectors))
            )
        total = ZERO
        for mono, coeff in self.terms.items():
            rows = [[Fraction(v[i]) for v in vectors] for i in mono]
            total += coeff * _det(rows)
        return total

    def wedge(self, other: "InvariantForm") -> "InvariantForm":
        if other.algebra is not self.algebra:
            raise InputError("forms live on different algebras")
        degree = self.degree + other.degree
        if degree > self.algebra.dimension or self.is_zero() or other.is_zero():
            return InvariantForm(self.algebra, min(degree, self.algebra.dimension), {})
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                merged, sign = _merge_sign(ma, mb)
                if sign == 0:
                    continue
                out[merged] = out.get(merged, ZERO) + sign * ca * cb
        return InvariantForm(self.algebra, degree, out)

    def __repr__(self) -> str:
        if self.is_zero():
            return "InvariantForm(0)"
        labels = self.algebra.basis
        bits = []
        for mono, c in self.terms.items():
            body = "^".join(labels[i] + "*" for i in mono)
            bits.append("%s %s" % (c, body))
        return "InvariantForm(%s)" % " + ".join(bits)


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by elimination; input is consumed."""
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def wedge(*factors: InvariantForm) -> InvariantForm:
    if not factors:
        raise InputError("wedge of nothing")
    out = factors[0]
    for f in factors[1:]:
        out = out.wedge(f)
    return out


def differential(form: InvariantForm) -> InvariantForm:
    """Exterior differential under the stated convention.

    Computed monomial-by-monomial: a structure constant [b_u, b_v] -> c b_w
    acts on a monomial containing w by replacing the w covector with the
    pair (u, v), provided neither u nor v already occurs.  The sign is the
    pair-position sign from the defining sum times the parity of moving w
    to the front of its monomial; the whole result carries 1/(p+1)!.
    """
    algebra = form.algebra
    p = form.degree
    if p >= algebra.dimension:
        return InvariantForm(algebra, min(p + 1, algebra.dimension), {})
    pairs = algebra.structure_pairs()
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in form.terms.items():
        members = set(mono)
        for u, v, entry in pairs:
            for w, c in entry.items():
                if w not in members:
                    continue
                if (u in members and u != w) or (v in members and v != w):
                    continue
                rest = tuple(i for i in mono if i != w)
                pos_w = mono.index(w)
                # stored pairs always have u < v, so the merge parity below
                # equals the pair-position sign (-1)^(i+j+1) of the sum
                merged, sign = _merge_sign(rest, (u, v))
                if sign == 0:
                    continue
                total_sign = sign * (-1) ** pos_w
                out[merged] = out.get(merged, ZERO) + total_sign * coeff * c
    scale = Fraction(1, math.factorial(p + 1))
    return InvariantForm(algebra, p + 1, {m: scale * c for m, c in out.items()})


@dataclass(frozen=True)
class ScalingWeight:
    """Weight of a form under the grading dilation; None when mixed."""

    uniform: int | None
    by_monomial: tuple[tuple[Monomial, int], ...]


def scaling_weight(form: InvariantForm) -> ScalingWeight:
    """Dilation by t multiplies each monomial by t to this weight."""
    if form.is_zero():
        raise InputError("the zero form has no scaling weight")
    weights = form.algebra.weights
    per = tuple((mono, sum(weights[i] for i in mono)) for mono in form.terms)
    values = {w for _, w in per}
    return ScalingWeight(values.pop() if len(values) == 1 else None, per)


def cube_form(
    algebra: GradedLieAlgebra, omit: int, order: Sequence
) -> InvariantForm:
    """Wedge of dual covectors of ``order`` with the first ``omit`` dropped.

    ``order`` must be a permutation of the whole basis and the dropped
    prefix must be horizontal.  Used with an ordering that puts an
    isotropic subspace first, the result is the closed form whose scaling
    weight is the Hausdorff dimension minus ``omit``.
    """
    indices = [
        i if isinstance(i, int) else algebra.index(i) for i in order
    ]
    if sorted(indices) != list(range(algebra.dimension)):
        raise InputError("order must be a permutation of the basis")
    if not 0 <= omit <= len(algebra.layers[0]):
        raise InputError("omit must be between 0 and dim V1")
    first = set(algebra.layers[0])
    for i in indices[:omit]:
        if i not in first:
            raise InputError(
                "omitted prefix contains the non-horizontal %s" % algebra.basis[i]
            )
    kept = indices[omit:]
    mono = tuple(sorted(kept))
    sign = _permutation_sign(kept)
    return InvariantForm(algebra, len(kept), {mono: Fraction(sign)})


def _permutation_sign(seq: Sequence[int]) -> int:
    sign = 1
    for a, b in itertools.combinations(range(len(seq)), 2):
        if seq[a] > seq[b]:
            sign = -sign
    return sign


def check_cube_closed(algebra: GradedLieAlgebra, s: Subspace, omit: int) -> bool:
    """Is the cube form for ``s``-first ordering closed after dropping
    ``omit`` covectors?

    ``s`` must be a horizontal span of basis vectors; the ordering places
    its vectors first, the rest of the basis after in declared order.
    True is guaranteed when ``s`` is isotropic and ``omit <= dim s - 1``;
    calling with an uncertified ``s`` simply reports what the differential
    says.
    """
    labels = s.coordinate_labels()
    if labels is None:
        raise InputError("cube ordering needs a span of basis vectors")
    if not s.is_horizontal():
        raise InputError("subspace is not horizontal")
    if not 0 <= omit <= max(s.dim, 0):
        raise InputError("omit must be between 0 and dim s")
    chosen = [algebra.index(l) for l in labels]
    rest = [i for i in range(algebra.dimension) if i not in set(chosen)]
    gamma = cube_form(algebra, omit, chosen + rest)
    return differential(gamma).is_zero()


@dataclass(frozen=True)
class PittetReport:
    pairs: tuple[tuple[str, str], ...]
    kernel_dimension: int
    kernel_basis: tuple[Vector, ...]


def pittet_kernel(algebra: GradedLieAlgebra) -> PittetReport:
    """Kernel of the differential on the span of (second dual, first dual)
    wedge pairs.

    Generators are all products Y* ^ x* with Y from the second layer and x
    from the first, ordered lexicographically.  Requires a 2-step (or
    abelian) algebra; the kernel dimension counts independent closed
    2-forms of this shape.
    """
    if algebra.declared_degree > 2:
        raise InputError("pittet kernel is defined for 2-step algebras")
    v2 = algebra.layers[1] if algebra.declared_degree == 2 else ()
    v1 = algebra.layers[0]
    pairs = []
    generators = []
    for y in v2:
        for x in v1:
            pairs.append((algebra.basis[y], algebra.basis[x]))
            generators.append(
                differential(
                    InvariantForm.dual(algebra, y).wedge(InvariantForm.dual(algebra, x))
                )
            )
    monomials = sorted({m for g in generators for m in g.terms})
    row_of = {m: r for r, m in enumerate(monomials)}
    matrix = [[ZERO] * len(generators) for _ in monomials]
    for col, g in enumerate(generators):
        for m, c in g.terms.items():
            matrix[row_of[m]][col] = c
    kernel = linalg.nullspace(matrix, ncols=len(generators))
    return PittetReport(tuple(pairs), len(kernel), kernel)


# -- JSON handling for CLI form literals -----------------------------------


def form_to_dict(form: InvariantForm) -> dict:
    return {
        "degree": form.degree,
        "terms": [
            {"indices": list(mono), "coeff": str(c)} for mono, c in form.terms.items()
        ],
    }


def form_from_dict(algebra: GradedLieAlgebra, data: dict) -> InvariantForm:
    from .catalog import _parse_coefficient

    try:
        degree = int(data["degree"])
        raw_terms = data["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("form JSON needs integer degree and a terms list") from exc
    terms: dict[Monomial, Fraction] = {}
    for item in raw_terms:
        try:
            mono = tuple(int(i) for i in item["indices"])
            coeff = _parse_coefficient(item["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("form terms need indices and coeff") from exc
        terms[mono] = terms.get(mono, ZERO) + coeff
    return InvariantForm(algebra, degree, terms)
