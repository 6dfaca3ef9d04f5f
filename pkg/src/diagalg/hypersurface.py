"""Classifier for diagonal subalgebras of generic bigraded hypersurfaces.

For a hypersurface ring in two blocks of variables (m x's, n y's) cut out by
a form of bidegree (d, e), and a diagonal (g, h)Z, this module decides the
Cohen-Macaulay, Gorenstein, rational-singularity, and F-regular-type flags by
closed-form arithmetic, and computes graded local-cohomology dimensions, the
canonical-module shift, and the a-invariant.  The singularity flags answer
for a generic form over characteristic zero; reports carry that caveat.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalDefectError, PreconditionError
from .gradedcomb import (
    DiagonalSpec,
    IndexWindow,
    ShiftedDiagPiece,
    dim_lc_tensor_diag,
    dim_tensor_diag,
    support_window,
)

CAVEAT_GENERIC = (
    "rational-singularities and F-regular-type flags assume a generic form "
    "over a field of characteristic zero"
)
CAVEAT_NORMALITY = (
    "a generic form of this bidegree does not cut out a normal hypersurface "
    "(needs m > min(2, d) and n > min(2, e)); singularity flags are unreliable"
)


@dataclass(frozen=True)
class HypersurfaceSpec:
    """Shape (m, n, d, e) of a bigraded hypersurface: m x-variables of degree
    (1, 0), n y-variables of degree (0, 1), one defining form of bidegree
    (d, e)."""

    m: int
    n: int
    d: int
    e: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise PreconditionError(f"need m, n >= 2: ({self.m}, {self.n})")
        if self.d < 0 or self.e < 0 or self.d + self.e < 1:
            raise PreconditionError(
                f"bidegree must be >= 0 and not (0, 0): ({self.d}, {self.e})"
            )


@dataclass
class ClassificationReport:
    """Outcome of :func:`classify`.

    ``gorenstein`` records the raw arithmetic shift condition; it is reported
    independently of ``cohen_macaulay`` rather than forced to imply it.
    """

    cohen_macaulay: bool
    gorenstein: bool
    rational_singularities_generic: bool
    f_regular_type_generic: bool
    canonical_shift: tuple[int, int]
    a_invariant: int
    cm_obstruction: int | None
    caveats: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "cohen_macaulay": self.cohen_macaulay,
            "gorenstein": self.gorenstein,
            "rational_singularities_generic": self.rational_singularities_generic,
            "f_regular_type_generic": self.f_regular_type_generic,
            "canonical_shift": list(self.canonical_shift),
            "a_invariant": self.a_invariant,
            "cm_obstruction": self.cm_obstruction,
            "caveats": self.caveats,
        }


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def validate_generic_normal(spec: HypersurfaceSpec) -> bool:
    """Whether a generic form of this shape cuts out a normal hypersurface."""
    return spec.m > min(2, spec.d) and spec.n > min(2, spec.e)


def is_cohen_macaulay(spec: HypersurfaceSpec, diag: DiagonalSpec) -> bool:
    """Floor-form Cohen-Macaulay criterion:
    floor((d-m)/g) < e/h and floor((e-n)/h) < d/g, evaluated exactly."""
    lhs1 = (spec.d - spec.m) // diag.g
    lhs2 = (spec.e - spec.n) // diag.h
    return lhs1 * diag.h < spec.e and lhs2 * diag.g < spec.d


def _obstruction_windows(spec: HypersurfaceSpec, diag: DiagonalSpec):
    # Integer windows d/g <= k <= (e-n)/h and e/h <= k <= (d-m)/g.
    w1 = (_ceil_div(spec.d, diag.g), (spec.e - spec.n) // diag.h)
    w2 = (_ceil_div(spec.e, diag.h), (spec.d - spec.m) // diag.g)
    return w1, w2


def cm_no_integer_window(spec: HypersurfaceSpec, diag: DiagonalSpec) -> bool:
    """Window-form Cohen-Macaulay criterion: no integer k lies in either
    obstruction window.  Equivalent to :func:`is_cohen_macaulay`; both are
    kept so the equivalence is testable rather than assumed."""
    w1, w2 = _obstruction_windows(spec, diag)
    return w1[0] > w1[1] and w2[0] > w2[1]


def cm_obstruction(spec: HypersurfaceSpec, diag: DiagonalSpec) -> int | None:
    """Smallest obstruction index k when not Cohen-Macaulay, else None."""
    w1, w2 = _obstruction_windows(spec, diag)
    candidates = [lo for lo, hi in (w1, w2) if lo <= hi]
    return min(candidates) if candidates else None


def canonical_shift(spec: HypersurfaceSpec) -> tuple[int, int]:
    """Bidegree shift (d - m, e - n) of the graded canonical module."""
    return (spec.d - spec.m, spec.e - spec.n)


def is_gorenstein(spec: HypersurfaceSpec, diag: DiagonalSpec) -> bool:
    """The canonical shift restricts to an integer multiple of the diagonal:
    g | d - m, h | e - n, and (d - m)/g = (e - n)/h."""
    a, b = canonical_shift(spec)
    return a % diag.g == 0 and b % diag.h == 0 and a // diag.g == b // diag.h


def dim_piece(spec: HypersurfaceSpec, diag: DiagonalSpec, k: int) -> int:
    """Dimension of the index-k graded piece of the diagonal subalgebra.

    The defining form is a nonzerodivisor, so the Hilbert function is the
    ambient tensor count minus its (-d, -e) shift.
    """
    total = dim_tensor_diag(ShiftedDiagPiece(spec.m, spec.n, 0, 0, k), diag)
    sub = dim_tensor_diag(ShiftedDiagPiece(spec.m, spec.n, -spec.d, -spec.e, k), diag)
    if sub > total:
        raise InternalDefectError(
            f"negative Hilbert value at k={k} for {spec}; please report"
        )
    return total - sub


def canonical_piece_dim(spec: HypersurfaceSpec, diag: DiagonalSpec, k: int) -> int:
    """Dimension of the index-k piece of the graded canonical module, i.e. of
    the (d - m, e - n)-shifted diagonal of the hypersurface ring."""
    a, b = canonical_shift(spec)
    total = dim_tensor_diag(ShiftedDiagPiece(spec.m, spec.n, a, b, k), diag)
    sub = dim_tensor_diag(ShiftedDiagPiece(spec.m, spec.n, -spec.m, -spec.n, k), diag)
    if sub > total:
        raise InternalDefectError(
            f"negative canonical Hilbert value at k={k} for {spec}; please report"
        )
    return total - sub


def dim_lc_piece(spec: HypersurfaceSpec, diag: DiagonalSpec, q: int, k: int) -> int:
    """dim of the degree-k piece of the q-th local cohomology of the diagonal.

    Below the top (q <= m + n - 3) this is the (q + 1)-st local cohomology of
    the (-d, -e)-shifted tensor diagonal.  At the top (q = m + n - 2) it is
    the kernel of a surjection between top tensor local cohomologies, so the
    dimensions subtract.  Above the top it vanishes.
    """
    m, n, d, e = spec.m, spec.n, spec.d, spec.e
    top = m + n - 2
    if q < 0 or q > top:
        return 0
    if q < top:
        return dim_lc_tensor_diag(
            q + 1, ShiftedDiagPiece(m, n, -d, -e, k), diag
        )
    big = dim_lc_tensor_diag(m + n - 1, ShiftedDiagPiece(m, n, -d, -e, k), diag)
    small = dim_lc_tensor_diag(m + n - 1, ShiftedDiagPiece(m, n, 0, 0, k), diag)
    if small > big:
        raise InternalDefectError(
            f"top local cohomology came out negative at k={k} for {spec}"
        )
    return big - small


def lc_support_window(spec: HypersurfaceSpec, diag: DiagonalSpec, q: int) -> IndexWindow:
    """Bounded index window outside of which ``dim_lc_piece(spec, diag, q, .)``
    vanishes, for q strictly below the top cohomological degree."""
    if not 0 <= q <= spec.m + spec.n - 3:
        raise PreconditionError(
            f"bounded windows exist only for 0 <= q <= m+n-3; got q={q}"
        )
    return support_window(q + 1, (spec.m, spec.n, -spec.d, -spec.e), diag)


_A_INV_CAP_MESSAGE = (
    "a-invariant search exceeded its cap; the canonical Hilbert function "
    "should have become positive -- please report"
)


def a_invariant(spec: HypersurfaceSpec, diag: DiagonalSpec) -> int:
    """Top degree in which the highest local cohomology is nonzero: minus the
    first index where the canonical module has a nonzero piece."""
    m, n, d, e = spec.m, spec.n, spec.d, spec.e
    k0 = max(_ceil_div(m - d, diag.g), _ceil_div(n - e, diag.h))
    cap = k0 + (d + e + m + n) * (diag.g + diag.h)
    for k in range(k0, cap + 1):
        if canonical_piece_dim(spec, diag, k) > 0:
            return -k
    raise InternalDefectError(_A_INV_CAP_MESSAGE)


def has_rational_singularities_generic(spec: HypersurfaceSpec, diag: DiagonalSpec) -> bool:
    """Cohen-Macaulay and (d < m or e < n); generic form, characteristic 0."""
    return is_cohen_macaulay(spec, diag) and (spec.d < spec.m or spec.e < spec.n)


def is_f_regular_type_generic(spec: HypersurfaceSpec) -> bool:
    """d < m and e < n; generic form, characteristic 0.  Diagonal-free."""
    return spec.d < spec.m and spec.e < spec.n


def dim2_rational(d: int, e: int, diag: DiagonalSpec) -> bool:
    """The m = n = 2 case, where rational singularities and F-regular type
    coincide: (d = 1 and e <= h + 1) or (e = 1 and d <= g + 1)."""
    if d < 1 or e < 1:
        raise PreconditionError(f"need d, e >= 1: ({d}, {e})")
    return (d == 1 and e <= diag.h + 1) or (e == 1 and d <= diag.g + 1)


def rees_to_product_diagonal(delta: int, g: int, h: int) -> DiagonalSpec:
    """Convert a diagonal taken in the Rees-style bigrading (x of degree
    (1, 0), y of degree (delta, 1)) into the product bigrading (y of degree
    (0, 1)): (g, h) maps to (g - delta*h, h)."""
    if delta < 0 or g < 1 or h < 1:
        raise PreconditionError(f"need delta >= 0 and g, h >= 1: ({delta}, {g}, {h})")
    if g <= delta * h:
        raise PreconditionError(
            f"diagonal not ample for product grading: need g > delta*h, "
            f"got g={g}, delta*h={delta * h}"
        )
    return DiagonalSpec(g - delta * h, h)


def classify(spec: HypersurfaceSpec, diag: DiagonalSpec) -> ClassificationReport:
    """Assemble all flags, the canonical shift, the a-invariant, the smallest
    CM obstruction, and applicable caveats into one report."""
    caveats = [CAVEAT_GENERIC]
    if not validate_generic_normal(spec):
        caveats.append(CAVEAT_NORMALITY)
    return ClassificationReport(
        cohen_macaulay=is_cohen_macaulay(spec, diag),
        gorenstein=is_gorenstein(spec, diag),
        rational_singularities_generic=has_rational_singularities_generic(spec, diag),
        f_regular_type_generic=is_f_regular_type_generic(spec),
        canonical_shift=canonical_shift(spec),
        a_invariant=a_invariant(spec, diag),
        cm_obstruction=cm_obstruction(spec, diag),
        caveats=caveats,
    )


def lc_dim_table(spec: HypersurfaceSpec, diag: DiagonalSpec,
                 k_lo: int | None = None, k_hi: int | None = None) -> dict:
    """Map (q, k) -> nonzero local-cohomology dimension.

    Degrees q <= m + n - 3 are covered completely (their support windows are
    finite).  The top degree q = m + n - 2 is nonzero for every k <= the
    a-invariant, so its rows are truncated to [k_lo, k_hi]; the defaults are
    a_invariant - 8 and a_invariant.
    """
    table: dict = {}
    top = spec.m + spec.n - 2
    for q in range(0, top):
        window = lc_support_window(spec, diag, q)
        if window.is_empty:
            continue
        for k in window.k_values():
            value = dim_lc_piece(spec, diag, q, k)
            if value:
                table[(q, k)] = value
    a_inv = a_invariant(spec, diag)
    hi = a_inv if k_hi is None else k_hi
    lo = a_inv - 8 if k_lo is None else k_lo
    for k in range(lo, hi + 1):
        value = dim_lc_piece(spec, diag, top, k)
        if value:
            table[(top, k)] = value
    return table
