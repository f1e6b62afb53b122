"""Growth-exponent predictions from a certified horizontal subspace.

Everything here is a bookkeeping layer: given an algebra together with a
certified subspace (isotropy and regularity are recomputed, not trusted),
a scalable-lattice flag and an optional assertion about the maximal
isotropic dimension, emit the filling-function and divergence exponents
the certification supports, labelled by the rule that produced them and by
how strong the statement is (equivalence, one-sided bound, strict bound).

Dimensions no rule covers are reported as unknown, and bounds at the same
dimension are cross-checked for consistency but never merged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import GradedLieAlgebra, InputError, Subspace, hausdorff_dimension
from .horizontal import (
    IsotropyResult,
    RegularityResult,
    is_isotropic,
    is_regular,
)

RELATIONS = ("equivalent", "at_most", "at_least", "strictly_above")

# prediction rule identifiers; names describe what each rule derives
LOW_EUCLIDEAN = "low-euclidean"
LOW_EUCLIDEAN_LOWER = "low-euclidean-lower-only"
GAP_UPPER = "gap-upper"
GAP_STRICT_LOWER = "gap-strict-lower"
HIGH_SUBEUCLIDEAN = "high-subeuclidean"
HIGH_SUBEUCLIDEAN_LOWER = "high-subeuclidean-lower-only"
DIV_LOWER = "div-lower"
DIV_HIGH = "div-high-equivalence"
DIV_HIGH_LOWER = "div-high-lower-only"

_INDEXING_NOTE = (
    "dimension convention: this row sits at m = n-j-1 for the shifted index "
    "j, the placement consistent with the divergence dimension cap n-2 and "
    "with deriving the upper bound from the (m+1)-dimensional filling "
    "function; a variant statement placing it at n-j would violate both"
)

_STRICT_NOTE = (
    "triggered by the asserted maximal isotropic dimension matching the "
    "certified subspace; the alternative trigger (an unfillable compact "
    "cycle in the asymptotic cone) is not machine-checkable here"
)


@dataclass(frozen=True)
class GrowthBound:
    """One predicted bound: target function, dimension, exponent, strength."""

    target: str
    m: int
    exponent: Fraction
    relation: str
    source: str
    note: str = ""

    def __post_init__(self) -> None:
        if self.target not in ("F", "Div"):
            raise InputError("target must be F or Div")
        if self.relation not in RELATIONS:
            raise InputError("unknown relation %r" % self.relation)
        if self.exponent <= 0:
            raise InputError("growth exponents are positive")
        # filling slower than linear is impossible for a geodesic space
        if self.target == "F" and self.exponent <= 1:
            raise InputError("filling exponents exceed 1")

    def as_dict(self) -> dict:
        out = {
            "target": self.target,
            "m": self.m,
            "exponent": str(self.exponent),
            "relation": self.relation,
            "source": self.source,
        }
        if self.note:
            out["note"] = self.note
        return out


class HypothesisBundle:
    """Input data for the predictor, certified at construction.

    ``lattice_scalable`` defaults to automatic: nilpotency degree at most 2
    guarantees a lattice preserved by the dilation by 2, higher degree does
    not, and an explicit value overrides either way.  ``k1_max_isotropic``
    is the caller's assertion (k1+1 = largest isotropic dimension); it is
    never derived here.
    """

    def __init__(
        self,
        algebra: GradedLieAlgebra,
        subspace: Subspace,
        lattice_scalable: bool | None = None,
        k1_max_isotropic: int | None = None,
    ) -> None:
        if subspace.dim < 1:
            raise InputError("the certified subspace must be nonzero")
        self.algebra = algebra
        self.subspace = subspace
        self.isotropy: IsotropyResult = is_isotropic(algebra, subspace)
        if not self.isotropy:
            raise InputError(
                "subspace is not isotropic; no prediction rule applies"
            )
        self.regularity: RegularityResult = is_regular(algebra, subspace)
        if lattice_scalable is None:
            lattice_scalable = algebra.declared_degree <= 2
        self.lattice_scalable = bool(lattice_scalable)
        self.k = subspace.dim - 1
        if k1_max_isotropic is not None and k1_max_isotropic < self.k:
            raise InputError(
                "asserted maximal isotropic dimension is below the certified one"
            )
        self.k1_max_isotropic = k1_max_isotropic

    @property
    def regular(self) -> bool:
        return self.regularity.regular


def predict_filling(bundle: HypothesisBundle) -> list[GrowthBound]:
    """Filling-function bounds for dimensions 2..n.

    Low band: Euclidean equivalences up to the certified dimension (lower
    halves survive without the lattice).  Gap dimension k+2: upper bound
    (k+1+d)/(k+1) plus the strict lower bound (k+2)/(k+1) under the
    maximal-isotropy assertion.  High band: sub-Euclidean equivalences at
    n-j for j < k; the isotropy-only lower bound extends one dimension
    further, to n-k.
    """
    algebra = bundle.algebra
    n = algebra.dimension
    d = algebra.declared_degree
    big_d = hausdorff_dimension(algebra)
    k = bundle.k
    lat = bundle.lattice_scalable
    rows: list[GrowthBound] = []

    if bundle.regular:
        for m in range(2, min(k + 1, n) + 1):
            if lat:
                rows.append(
                    GrowthBound("F", m, Fraction(m, m - 1), "equivalent", LOW_EUCLIDEAN)
                )
            else:
                rows.append(
                    GrowthBound(
                        "F",
                        m,
                        Fraction(m, m - 1),
                        "at_least",
                        LOW_EUCLIDEAN_LOWER,
                        "certification alone; a scalable lattice would upgrade "
                        "this to an equivalence",
                    )
                )
        gap = k + 2
        if gap <= n:
            if lat:
                rows.append(
                    GrowthBound(
                        "F", gap, Fraction(k + 1 + d, k + 1), "at_most", GAP_UPPER
                    )
                )
            if bundle.k1_max_isotropic == k:
                rows.append(
                    GrowthBound(
                        "F",
                        gap,
                        Fraction(k + 2, k + 1),
                        "strictly_above",
                        GAP_STRICT_LOWER,
                        _STRICT_NOTE,
                    )
                )
        for j in range(0, k):
            m = n - j
            if m < 2:
                continue
            expo = Fraction(big_d - j, big_d - j - 1)
            if lat:
                rows.append(GrowthBound("F", m, expo, "equivalent", HIGH_SUBEUCLIDEAN))
            else:
                rows.append(
                    GrowthBound(
                        "F",
                        m,
                        expo,
                        "at_least",
                        HIGH_SUBEUCLIDEAN_LOWER,
                        "isotropy-only lower bound; the upper half needs a "
                        "scalable lattice",
                    )
                )
        m = n - k
        if m >= 2:
            rows.append(
                GrowthBound(
                    "F",
                    m,
                    Fraction(big_d - k, big_d - k - 1),
                    "at_least",
                    HIGH_SUBEUCLIDEAN_LOWER,
                    "isotropy alone reaches this dimension; the two-sided "
                    "statement stops one dimension higher",
                )
            )
    else:
        for j in range(0, k + 1):
            m = n - j
            if m < 2:
                continue
            rows.append(
                GrowthBound(
                    "F",
                    m,
                    Fraction(big_d - j, big_d - j - 1),
                    "at_least",
                    HIGH_SUBEUCLIDEAN_LOWER,
                    "regularity unavailable: isotropy-based lower bound only",
                )
            )
    return sorted(rows, key=lambda b: (b.m, b.relation, b.exponent))


def predict_divergence(bundle: HypothesisBundle) -> list[GrowthBound]:
    """Divergence bounds for dimensions 1..n-2.

    Low band: r^(j+1) for j up to the certified dimension.  High band: the
    equivalence at m = n-j-1 whose exponent is m times the filling exponent
    one dimension up; the band is exactly the set of dimensions where both
    the two-sided filling input (j <= k-1) and the divergence dimension cap
    (j >= 1) are available, with the isotropy-only lower bound again
    extending one dimension lower (j = k).
    """
    algebra = bundle.algebra
    n = algebra.dimension
    big_d = hausdorff_dimension(algebra)
    k = bundle.k
    divdim = n - 2
    lat = bundle.lattice_scalable
    rows: list[GrowthBound] = []

    if bundle.regular:
        for j in range(1, min(k, divdim) + 1):
            rows.append(
                GrowthBound(
                    "Div",
                    j,
                    Fraction(j + 1),
                    "at_least",
                    DIV_LOWER,
                    "scales the Euclidean filling lower bound; no lattice needed",
                )
            )
        for j in range(1, k):
            m = n - j - 1
            if not 1 <= m <= divdim:
                continue
            expo = Fraction((big_d - j) * m, big_d - j - 1)
            if lat:
                rows.append(
                    GrowthBound("Div", m, expo, "equivalent", DIV_HIGH, _INDEXING_NOTE)
                )
            else:
                rows.append(
                    GrowthBound(
                        "Div",
                        m,
                        expo,
                        "at_least",
                        DIV_HIGH_LOWER,
                        _INDEXING_NOTE + "; upper half needs a scalable lattice",
                    )
                )
        m = n - k - 1
        if 1 <= m <= divdim and k >= 1:
            expo = Fraction((big_d - k) * m, big_d - k - 1)
            rows.append(
                GrowthBound(
                    "Div",
                    m,
                    expo,
                    "at_least",
                    DIV_HIGH_LOWER,
                    "isotropy-only edge of the high band; " + _INDEXING_NOTE,
                )
            )
    else:
        for j in range(0, k + 1):
            m = n - j - 1
            if not 1 <= m <= divdim:
                continue
            expo = Fraction((big_d - j) * m, big_d - j - 1)
            rows.append(
                GrowthBound(
                    "Div",
                    m,
                    expo,
                    "at_least",
                    DIV_HIGH_LOWER,
                    "regularity unavailable: isotropy-based lower bound only",
                )
            )
    return sorted(rows, key=lambda b: (b.m, b.relation, b.exponent))


@dataclass(frozen=True)
class CoverageRow:
    target: str
    m: int
    bounds: tuple[GrowthBound, ...]
    conflict: bool

    @property
    def status(self) -> str:
        if not self.bounds:
            return "unknown"
        if self.conflict:
            return "conflict"
        return "bounded"


@dataclass(frozen=True)
class CoverageTable:
    filling: tuple[CoverageRow, ...]
    divergence: tuple[CoverageRow, ...]
    notes: tuple[str, ...]


def _detect_conflict(bounds: tuple[GrowthBound, ...]) -> bool:
    equivalents = {b.exponent for b in bounds if b.relation == "equivalent"}
    if len(equivalents) > 1:
        return True
    eq = next(iter(equivalents)) if equivalents else None
    lowers = [b.exponent for b in bounds if b.relation == "at_least"]
    stricts = [b.exponent for b in bounds if b.relation == "strictly_above"]
    uppers = [b.exponent for b in bounds if b.relation == "at_most"]
    lo = max(lowers + stricts, default=None)
    hi = min(uppers, default=None)
    if eq is not None:
        if any(l > eq for l in lowers):
            return True
        if any(s >= eq for s in stricts):
            return True
        if any(u < eq for u in uppers):
            return True
    if lo is not None and hi is not None:
        if lo > hi:
            return True
        if lo == hi and any(s == hi for s in stricts):
            return True
    return False


def coverage_table(bundle: HypothesisBundle) -> CoverageTable:
    """Per-dimension view of the predictions with unknown bands kept visible."""
    algebra = bundle.algebra
    n = algebra.dimension
    filling = predict_filling(bundle)
    divergence = predict_divergence(bundle)

    def rows(target: str, bounds: list[GrowthBound], span) -> tuple[CoverageRow, ...]:
        out = []
        for m in span:
            here = tuple(b for b in bounds if b.m == m)
            out.append(CoverageRow(target, m, here, _detect_conflict(here)))
        return tuple(out)

    notes = [
        "certified subspace dimension %d (k = %d)" % (bundle.subspace.dim, bundle.k),
        "scalable lattice: %s"
        % ("assumed available" if bundle.lattice_scalable else "not assumed"),
    ]
    if bundle.k1_max_isotropic is not None:
        notes.append(
            "asserted maximal isotropic dimension: %d (k1 = %d)"
            % (bundle.k1_max_isotropic + 1, bundle.k1_max_isotropic)
        )
    if not bundle.regular:
        notes.append(
            "regularity failed (rank %d of %d): only isotropy-based lower "
            "bounds are emitted; low-dimensional filling can then exceed the "
            "Euclidean rate, as for the rank-4 unipotent group whose "
            "2-dimensional filling grows at least cubically"
            % (bundle.regularity.rank, bundle.regularity.required_rank)
        )
    return CoverageTable(
        rows("F", filling, range(2, n + 1)),
        rows("Div", divergence, range(1, max(n - 1, 1))),
        tuple(notes),
    )
