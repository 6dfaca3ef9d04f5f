"""Characteristic-p F-singularity tests on explicit polynomials.

Provides the Frobenius-power F-purity test for hypersurfaces, positive
F-regularity certificates via socle non-membership against Frobenius powers
of a parameter ideal (for graded and bigraded hypersurfaces), constructors
for the standard witness polynomials, and a seeded dense-form sampler.

Certificates are one-sided: a non-membership at some power q proves
F-regularity for forms satisfying the recorded hypotheses; exhausting the
tested powers yields "inconclusive", never "false".
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import PreconditionError, RingContextError
from .exactalg import (
    MultiPoly,
    PolyRing,
    exponent_vectors,
    groebner_basis,
    ideal_contains,
    normal_form,
)

VERDICT_F_REGULAR = "f_regular"
VERDICT_INCONCLUSIVE = "inconclusive"
VERDICT_NOT_F_PURE = "not_f_pure"
VERDICT_NOT_F_REGULAR = "not_f_regular"

ASSUMPTION_REGULAR_LOCUS = (
    "the hypersurface is assumed regular after inverting the distinguished "
    "variables (not checked)"
)
ASSUMPTION_F_PURE = "F-purity verified by the Frobenius-power exclusion test"


@dataclass
class FrobeniusCertificate:
    """Outcome of an F-regularity membership search.

    A verdict of ``f_regular`` always carries the power ``q_used`` and the
    nonzero normal form that witnesses non-membership; rerunning the recorded
    computation must reproduce ``normal_form`` exactly.
    """

    verdict: str
    p: int
    m: int
    n: int
    degree: tuple[int, int] | tuple[int]
    q_used: int | None
    tested_powers: list[int]
    ideal_generators: list[str]
    socle: str | None
    normal_form: str | None
    assumptions: list[str] = field(default_factory=list)
    details: str | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "degree": list(self.degree),
            "q_used": self.q_used,
            "tested_powers": self.tested_powers,
            "ideal_generators": self.ideal_generators,
            "socle": self.socle,
            "normal_form": self.normal_form,
            "assumptions": self.assumptions,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _normalize_distinguished(f: MultiPoly, mono: tuple, label: str) -> MultiPoly:
    # The socle argument needs the distinguished variables to stay a system
    # of parameters on the hypersurface, which the parameter-space
    # normalization (pure power present) guarantees.  Scaling f leaves the
    # ideal unchanged, so a nonzero coefficient is normalized to 1.
    coeff = f.terms.get(mono, 0)
    if coeff == 0:
        raise PreconditionError(
            f"the membership criterion needs {label} to occur in f with a "
            "nonzero coefficient"
        )
    if coeff == 1:
        return f
    return f.mul_monomial((0,) * f.ring.nvars, f.ring.field.inv(coeff))


def fedder_is_f_pure(f: MultiPoly, p: int | None = None) -> bool:
    """Frobenius-power F-purity test for the hypersurface cut out by f:
    F-pure exactly when f^(p-1) lies outside (v^p : v each variable)."""
    if f.is_zero:
        raise PreconditionError("f must be nonzero")
    if not f.is_homogeneous():
        raise PreconditionError("f must be homogeneous")
    ring = f.ring
    if p is not None and p != ring.p:
        raise RingContextError(f"p={p} disagrees with the ring modulus {ring.p}")
    p = ring.p
    frobenius_powers = [v ** p for v in ring.gens()]
    return not ideal_contains(frobenius_powers, f ** (p - 1))


def _membership_search(f: MultiPoly, p: int, e_max: int, param_gens_at,
                       socle_at, base_assumptions, m: int, n: int, degree):
    """Shared search loop: test socle membership for q = p, p^2, ..., p^e_max."""
    if e_max < 1:
        raise PreconditionError(f"need e_max >= 1: {e_max}")
    if not fedder_is_f_pure(f):
        return FrobeniusCertificate(
            verdict=VERDICT_NOT_F_PURE, p=p, m=m, n=n, degree=degree,
            q_used=None, tested_powers=[], ideal_generators=[],
            socle=None, normal_form=None, assumptions=[],
            details="Frobenius-power exclusion test failed: the hypersurface "
                    "is not F-pure, hence not F-regular",
        )
    assumptions = [ASSUMPTION_F_PURE, *base_assumptions]
    tested: list[int] = []
    for e in range(1, e_max + 1):
        q = p ** e
        gens = param_gens_at(q) + [f]
        socle = socle_at(q)
        remainder = normal_form(socle, groebner_basis(gens))
        tested.append(q)
        if not remainder.is_zero:
            return FrobeniusCertificate(
                verdict=VERDICT_F_REGULAR, p=p, m=m, n=n, degree=degree,
                q_used=q, tested_powers=tested,
                ideal_generators=[str(g) for g in gens],
                socle=str(socle), normal_form=str(remainder),
                assumptions=assumptions,
                details=f"socle excluded from the Frobenius-power ideal at q={q}",
            )
    return FrobeniusCertificate(
        verdict=VERDICT_INCONCLUSIVE, p=p, m=m, n=n, degree=degree,
        q_used=None, tested_powers=tested, ideal_generators=[],
        socle=None, normal_form=None, assumptions=assumptions,
        details=f"socle contained in the Frobenius-power ideal for all "
                f"tested q up to p^{e_max}; no verdict",
    )


def f_regular_certificate_graded(f: MultiPoly, d: int, m: int, p: int,
                                 e_max: int = 4) -> FrobeniusCertificate:
    """F-regularity certificate for a degree-d hypersurface in m variables:
    search for a power q with x1^((d-1)q+1) outside (x2^q, ..., xm^q, f)."""
    ring = f.ring
    if ring.m != m or ring.n != 0 or ring.p != p:
        raise RingContextError(
            f"expected a ring with m={m} x-variables, no y-variables, p={p}; "
            f"got {ring!r}"
        )
    if f.is_zero or not f.is_homogeneous() or f.total_degree() != d:
        raise PreconditionError(f"f must be homogeneous of degree {d}")
    if d >= m:
        return FrobeniusCertificate(
            verdict=VERDICT_NOT_F_REGULAR, p=p, m=m, n=0, degree=(d,),
            q_used=None, tested_powers=[], ideal_generators=[],
            socle=None, normal_form=None, assumptions=[],
            details=f"not F-regular: the hypersurface has a-invariant "
                    f"d - m = {d - m} >= 0",
        )
    f = _normalize_distinguished(f, (d,) + (0,) * (m - 1), "x1^d")

    def params(q):
        return [ring.x(i) ** q for i in range(2, m + 1)]

    def socle(q):
        return ring.x(1) ** ((d - 1) * q + 1)

    return _membership_search(
        f, p, e_max, params, socle, [ASSUMPTION_REGULAR_LOCUS], m, 0, (d,)
    )


def f_regular_certificate_bigraded(f: MultiPoly, d: int, e: int, m: int,
                                   n: int, p: int,
                                   e_max: int = 4) -> FrobeniusCertificate:
    """F-regularity certificate for a bidegree-(d, e) hypersurface: search
    for q with x1^((d+e-1)q+1) outside
    (x1^q - y1^q, x2^q, ..., xm^q, y2^q, ..., yn^q, f)."""
    ring = f.ring
    if ring.m != m or ring.n != n or ring.p != p:
        raise RingContextError(
            f"expected a ring with m={m} x-variables, n={n} y-variables, "
            f"p={p}; got {ring!r}"
        )
    if f.is_zero or not f.is_bihomogeneous() or f.bidegree() != (d, e):
        raise PreconditionError(f"f must be bihomogeneous of bidegree ({d}, {e})")
    if d >= m or e >= n:
        return FrobeniusCertificate(
            verdict=VERDICT_NOT_F_REGULAR, p=p, m=m, n=n, degree=(d, e),
            q_used=None, tested_powers=[], ideal_generators=[],
            socle=None, normal_form=None, assumptions=[],
            details="not F-regular: a negative multigraded a-invariant "
                    f"requires d < m and e < n; got (d, e) = ({d}, {e})",
        )
    f = _normalize_distinguished(
        f, (d,) + (0,) * (m - 1) + (e,) + (0,) * (n - 1), "x1^d*y1^e")

    def params(q):
        gens = [ring.x(1) ** q - ring.y(1) ** q]
        gens += [ring.x(i) ** q for i in range(2, m + 1)]
        gens += [ring.y(j) ** q for j in range(2, n + 1)]
        return gens

    def socle(q):
        return ring.x(1) ** ((d + e - 1) * q + 1)

    return _membership_search(
        f, p, e_max, params, socle, [ASSUMPTION_REGULAR_LOCUS], m, n, (d, e)
    )


def recheck_certificate(cert: FrobeniusCertificate) -> bool:
    """Re-run a stored f_regular certificate's membership computation and
    compare the resulting normal form with the recorded one."""
    from .parsing import parse_polynomial

    if cert.verdict != VERDICT_F_REGULAR:
        raise PreconditionError("only f_regular certificates can be rechecked")
    gens = [parse_polynomial(text, cert.m, cert.n, cert.p).poly
            for text in cert.ideal_generators]
    socle = parse_polynomial(cert.socle, cert.m, cert.n, cert.p).poly
    remainder = normal_form(socle, groebner_basis(gens))
    return str(remainder) == cert.normal_form


# ---------------------------------------------------------------------------
# Witness polynomials and the dense-form sampler.

def witness_graded(d: int, m: int, p: int) -> MultiPoly:
    """x1^d + x2*...*x_{d+1} in m variables over F_p."""
    if d < 1:
        raise PreconditionError(f"need d >= 1: {d}")
    if m < d + 1:
        raise PreconditionError(f"need m >= d + 1 variables: m={m}, d={d}")
    ring = PolyRing(p, m)
    tail = ring.one()
    for i in range(2, d + 2):
        tail = tail * ring.x(i)
    return ring.x(1) ** d + tail


def witness_bigraded(d: int, e: int, m: int, n: int, p: int) -> MultiPoly:
    """x1^d*y1^e + x2*...*x_{d+1} * y2*...*y_{e+1} over F_p."""
    if d < 1 or e < 1:
        raise PreconditionError(f"need d, e >= 1: ({d}, {e})")
    if m < d + 1 or n < e + 1:
        raise PreconditionError(
            f"need m >= d + 1 and n >= e + 1: m={m}, d={d}, n={n}, e={e}"
        )
    ring = PolyRing(p, m, n)
    tail = ring.one()
    for i in range(2, d + 2):
        tail = tail * ring.x(i)
    for j in range(2, e + 2):
        tail = tail * ring.y(j)
    return ring.x(1) ** d * ring.y(1) ** e + tail


def witness_fpure(d: int, m: int, p: int, e: int | None = None,
                  n: int = 0) -> MultiPoly:
    """The standard F-pure witness: x1*(x1+x2)*...*(x1+x_d) in the graded
    case, or the squarefree monomial x1..x_d*y1..y_e in the bigraded case."""
    if d < 1:
        raise PreconditionError(f"need d >= 1: {d}")
    if m < d:
        raise PreconditionError(f"need m >= d variables: m={m}, d={d}")
    if e is None:
        ring = PolyRing(p, m, n)
        f = ring.x(1)
        for i in range(2, d + 1):
            f = f * (ring.x(1) + ring.x(i))
        return f
    if e < 1 or n < e:
        raise PreconditionError(f"need n >= e >= 1: n={n}, e={e}")
    ring = PolyRing(p, m, n)
    f = ring.one()
    for i in range(1, d + 1):
        f = f * ring.x(i)
    for j in range(1, e + 1):
        f = f * ring.y(j)
    return f


def random_biform(m: int, n: int, d: int, e: int, p: int, seed: int) -> MultiPoly:
    """Seeded dense form of bidegree (d, e): every monomial appears, the
    distinguished monomial x1^d*y1^e has coefficient 1, and all other
    coefficients are uniform in the nonzero residues.  Deterministic per seed.
    """
    if m < 1 and d > 0:
        raise PreconditionError("d > 0 needs at least one x-variable")
    if n < 1 and e > 0:
        raise PreconditionError("e > 0 needs at least one y-variable")
    if d < 0 or e < 0 or d + e < 1:
        raise PreconditionError(f"bidegree must be >= 0 and not (0, 0): ({d}, {e})")
    ring = PolyRing(p, m, n)
    rng = random.Random(seed)
    lead = tuple([d] + [0] * (m - 1) + [e] + [0] * (n - 1)) if m and n else (
        tuple([d] + [0] * (m - 1)) if m else tuple([e] + [0] * (n - 1))
    )
    terms = {}
    for ex in exponent_vectors(d, m):
        for ey in exponent_vectors(e, n):
            mono = ex + ey
            terms[mono] = 1 if mono == lead else rng.randrange(1, p)
    return ring.poly(terms)
