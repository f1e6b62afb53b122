"""Stratified nilpotent Lie algebras with exact rational structure constants.

A graded algebra is described by a basis, an ordered partition of that basis
into layers V_1, ..., V_d, and a table of brackets on basis pairs.  The table
stores each unordered pair once (lower basis index first); the other
orientation follows by antisymmetry and unlisted pairs bracket to zero.
Coefficients are Fractions throughout, so every decision this module makes
(ranks, spans, equalities) is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector, ONE, ZERO


class InputError(ValueError):
    """Malformed algebra data: unknown labels, duplicate pairs, bad layers."""


class NotNilpotentError(InputError):
    """The lower central series stabilised above zero."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a structural check; ``detail`` explains a failure."""

    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _coefficient(value) -> Fraction:
    if isinstance(value, float):
        raise InputError("floating point coefficient rejected: %r" % (value,))
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError("bad coefficient %r" % (value,)) from exc


class GradedLieAlgebra:
    """Finite-dimensional Lie algebra with a declared layer grading.

    ``brackets`` maps label pairs to sparse results, e.g.
    ``{("a", "b"): {"c": 1}}`` for [a, b] = c.  Listing both orientations of
    the same pair is an error even when the entries are consistent.
    Construction validates shape only; Jacobi and the stratification
    property are separate checks so that defective tables can be built
    and then diagnosed.
    """

    def __init__(
        self,
        name: str,
        basis: Sequence[str],
        layers: Sequence[Sequence[str]],
        brackets: Mapping[tuple[str, str], Mapping[str, object]],
    ) -> None:
        self.name = str(name)
        self.basis = tuple(str(b) for b in basis)
        if len(set(self.basis)) != len(self.basis):
            raise InputError("duplicate basis labels")
        if not self.basis:
            raise InputError("empty basis")
        self._index = {label: i for i, label in enumerate(self.basis)}

        seen: set[str] = set()
        layer_indices = []
        for layer in layers:
            idx = tuple(self.index(label) for label in layer)
            if not idx:
                raise InputError("empty layer")
            layer_indices.append(idx)
            for label in layer:
                if label in seen:
                    raise InputError("label %r in two layers" % label)
                seen.add(label)
        if len(seen) != len(self.basis):
            missing = sorted(set(self.basis) - seen)
            raise InputError("labels missing from layers: %s" % ", ".join(missing))
        self.layers: tuple[tuple[int, ...], ...] = tuple(layer_indices)

        weights = [0] * len(self.basis)
        for depth, idx in enumerate(self.layers, start=1):
            for i in idx:
                weights[i] = depth
        self.weights = tuple(weights)

        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        oriented: set[tuple[int, int]] = set()
        for (left, right), result in brackets.items():
            u, v = self.index(left), self.index(right)
            if u == v:
                raise InputError("bracket of %r with itself listed" % left)
            if (u, v) in oriented or (v, u) in oriented:
                raise InputError(
                    "bracket pair (%s, %s) listed twice" % (left, right)
                )
            oriented.add((u, v))
            sign = 1
            if u > v:
                u, v, sign = v, u, -1
            entry: dict[int, Fraction] = {}
            for label, coeff in result.items():
                w = self.index(label)
                c = sign * _coefficient(coeff)
                if c != 0:
                    entry[w] = entry.get(w, ZERO) + c
            entry = {w: c for w, c in entry.items() if c != 0}
            if entry:
                table[(u, v)] = entry
        self._table = table

    # -- basic accessors -------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def declared_degree(self) -> int:
        return len(self.layers)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError("unknown basis label %r" % (label,)) from None

    def label(self, i: int) -> str:
        return self.basis[i]

    def layer_of(self, i: int) -> int:
        """1-based layer of basis position ``i``."""
        return self.weights[i]

    def structure_pairs(self) -> tuple[tuple[int, int, dict[int, Fraction]], ...]:
        """Stored bracket entries as (u, v, {w: coeff}) with u < v."""
        return tuple(
            (u, v, dict(entry)) for (u, v), entry in sorted(self._table.items())
        )

    # -- vectors ---------------------------------------------------------

    def zero(self) -> Vector:
        return linalg.zero_vector(self.dimension)

    def basis_vector(self, label_or_index) -> Vector:
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return linalg.unit_vector(self.dimension, i)

    def vector(self, coefficients: Mapping[str, object]) -> Vector:
        out = [ZERO] * self.dimension
        for label, coeff in coefficients.items():
            out[self.index(label)] += _coefficient(coeff)
        return tuple(out)

    def describe(self, v: Sequence[Fraction]) -> str:
        parts = []
        for i, c in enumerate(v):
            if c == 0:
                continue
            if c == 1:
                parts.append(self.basis[i])
            elif c == -1:
                parts.append("-" + self.basis[i])
            else:
                parts.append("%s*%s" % (c, self.basis[i]))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    # -- bracket ---------------------------------------------------------

    def bracket_basis(self, u: int, v: int) -> dict[int, Fraction]:
        """Sparse [b_u, b_v] for basis positions."""
        if u == v:
            return {}
        if u < v:
            return dict(self._table.get((u, v), {}))
        entry = self._table.get((v, u), {})
        return {w: -c for w, c in entry.items()}

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the bracket table."""
        out = [ZERO] * self.dimension
        for (u, v), entry in self._table.items():
            coeff = x[u] * y[v] - x[v] * y[u]
            if coeff == 0:
                continue
            for w, c in entry.items():
                out[w] += coeff * c
        return tuple(out)

    def layer_projection(self, v: Sequence[Fraction], depth: int) -> Vector:
        return tuple(
            c if self.weights[i] == depth else ZERO for i, c in enumerate(v)
        )

    def layer_span(self, depth: int) -> "Subspace":
        rows = [self.basis_vector(i) for i in self.layers[depth - 1]]
        return Subspace(self, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedLieAlgebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.basis == other.basis
            and self.layers == other.layers
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.name, self.basis, self.layers))

    def __repr__(self) -> str:
        dims = ", ".join(str(len(layer)) for layer in self.layers)
        return "GradedLieAlgebra(%r, dim=%d, layers=(%s))" % (
            self.name,
            self.dimension,
            dims,
        )


class Subspace:
    """Subspace of the underlying vector space, canonicalised to RREF.

    Two subspaces are equal exactly when their reduced row bases agree, so
    equality is span equality.
    """

    def __init__(self, algebra: GradedLieAlgebra, rows: Iterable[Sequence]) -> None:
        self.algebra = algebra
        reduced = linalg.rref(rows)
        for row in reduced:
            if len(row) != algebra.dimension:
                raise InputError("row length does not match algebra dimension")
        self.rows: Matrix = reduced

    @classmethod
    def from_labels(cls, algebra: GradedLieAlgebra, labels: Iterable[str]) -> "Subspace":
        return cls(algebra, [algebra.basis_vector(l) for l in labels])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return linalg.in_row_span(self.rows, v)

    def is_horizontal(self) -> bool:
        """True when every spanning vector lies in the first layer."""
        first = self.algebra.layers[0]
        allowed = set(first)
        for row in self.rows:
            for i, c in enumerate(row):
                if c != 0 and i not in allowed:
                    return False
        return True

    def coordinate_labels(self) -> tuple[str, ...] | None:
        """Labels if this is a span of basis vectors, else None."""
        labels = []
        for row in self.rows:
            support = [i for i, c in enumerate(row) if c != 0]
            if len(support) != 1 or row[support[0]] != 1:
                return None
            labels.append(self.algebra.basis[support[0]])
        return tuple(labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra is other.algebra and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        labels = self.coordinate_labels()
        if labels is not None:
            return "Subspace<%s>" % ", ".join(labels)
        return "Subspace(dim=%d)" % self.dim


# -- structural checks ---------------------------------------------------


def jacobi_check(algebra: GradedLieAlgebra) -> CheckResult:
    """Verify the Jacobi identity on all basis triples.

    Trilinearity makes basis triples sufficient.  The first failing triple
    is reported by label.
    """
    n = algebra.dimension
    for u in range(n):
        for v in range(u + 1, n):
            uv = algebra.bracket_basis(u, v)
            for w in range(v + 1, n):
                acc = [ZERO] * n
                for t, c in uv.items():
                    for s, c2 in algebra.bracket_basis(t, w).items():
                        acc[s] += c * c2
                for t, c in algebra.bracket_basis(v, w).items():
                    for s, c2 in algebra.bracket_basis(t, u).items():
                        acc[s] += c * c2
                for t, c in algebra.bracket_basis(w, u).items():
                    for s, c2 in algebra.bracket_basis(t, v).items():
                        acc[s] += c * c2
                if any(e != 0 for e in acc):
                    triple = (algebra.basis[u], algebra.basis[v], algebra.basis[w])
                    return CheckResult(False, "jacobi fails on (%s, %s, %s)" % triple)
    return CheckResult(True)


def lower_central_series(algebra: GradedLieAlgebra) -> list[Subspace]:
    """Chain g = g_1 > g_2 > ... ending with the zero subspace.

    g_{j+1} = [g, g_j].  Raises NotNilpotentError if the chain stabilises
    before reaching zero.
    """
    n = algebra.dimension
    current = Subspace(algebra, [algebra.basis_vector(i) for i in range(n)])
    chain = [current]
    while current.dim > 0:
        images = []
        for u in range(n):
            bu = algebra.basis_vector(u)
            for row in current.rows:
                images.append(algebra.bracket(bu, row))
        nxt = Subspace(algebra, images)
        if nxt.dim == current.dim:
            raise NotNilpotentError(
                "lower central series stabilises at dimension %d" % current.dim
            )
        chain.append(nxt)
        current = nxt
    return chain


def nilpotency_degree(algebra: GradedLieAlgebra) -> int:
    return len(lower_central_series(algebra)) - 1


def stratification_check(algebra: GradedLieAlgebra) -> CheckResult:
    """Confirm the declared layers genuinely stratify the algebra.

    Three conditions: structure constants respect the grading (a bracket of
    layers s and t lands in layer s+t), each V_{j+1} is exactly spanned by
    [V_1, V_j], and the declared layer dimensions agree with the lower
    central series quotients.
    """
    weights = algebra.weights
    for u, v, entry in algebra.structure_pairs():
        target = weights[u] + weights[v]
        for w, c in entry.items():
            if weights[w] != target:
                return CheckResult(
                    False,
                    "bracket [%s, %s] has a layer-%d component %s; grading "
                    "requires layer %d"
                    % (
                        algebra.basis[u],
                        algebra.basis[v],
                        weights[w],
                        algebra.basis[w],
                        target,
                    ),
                )

    first = algebra.layers[0]
    for depth in range(1, algebra.declared_degree):
        images = []
        for u in first:
            for v in algebra.layers[depth - 1]:
                images.append(algebra.bracket(algebra.basis_vector(u), algebra.basis_vector(v)))
        generated = Subspace(algebra, images)
        expected = algebra.layer_span(depth + 1)
        if generated != expected:
            return CheckResult(
                False,
                "[V_1, V_%d] spans a %d-dimensional space but layer %d has "
                "dimension %d" % (depth, generated.dim, depth + 1, expected.dim),
            )
    # top layer brackets to zero with V_1 by the grading check above

    try:
        chain = lower_central_series(algebra)
    except NotNilpotentError as exc:
        return CheckResult(False, str(exc))
    if len(chain) - 1 != algebra.declared_degree:
        return CheckResult(
            False,
            "nilpotency degree %d does not match %d declared layers"
            % (len(chain) - 1, algebra.declared_degree),
        )
    for depth in range(1, len(chain)):
        quotient = chain[depth - 1].dim - chain[depth].dim
        declared = len(algebra.layers[depth - 1])
        if quotient != declared:
            return CheckResult(
                False,
                "layer %d declares dimension %d but the central series "
                "quotient has dimension %d" % (depth, declared, quotient),
            )
    return CheckResult(True)


def hausdorff_dimension(algebra: GradedLieAlgebra) -> int:
    """Sum of layer index times layer dimension."""
    return sum(depth * len(idx) for depth, idx in enumerate(algebra.layers, start=1))


class Dilation:
    """Grading automorphism: multiplies layer j by t**j."""

    def __init__(self, algebra: GradedLieAlgebra, t: Fraction) -> None:
        t = _coefficient(t)
        if t == 0:
            raise InputError("dilation parameter must be nonzero")
        self.algebra = algebra
        self.t = t
        self.factors: Vector = tuple(t ** w for w in algebra.weights)

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        return tuple(f * c for f, c in zip(self.factors, v, strict=True))


def dilation(algebra: GradedLieAlgebra, t) -> Dilation:
    return Dilation(algebra, t)
