"""Classification of essential components by dominant weights.

Starting from a dominant weight kappa, the parabolic is built at
kappa + rho_K, the shifted weight mu = kappa - rho(s cap u) - rho_l(+1..+1)
is tested for lattice integrality, and a datum (parabolic, kappa, mu,
kappa_l, m-values) comes back when it passes.  The m-value of each Levi
pair is forced to -1 by the construction, which is what makes every datum
essential; genuineness of kappa is the same integrality condition phrased
against the half-sum of a noncompact positive system, and ball enumeration
over the shifted lattice therefore never hits a failure.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InternalBijectionFailure,
    NonIntegralPairing,
    NotDominant,
    StructuralInvariantError,
)
from .groups import RealFormDescriptor, is_integral
from .parabolic import ThetaParabolic, build_parabolic
from .ratlin import ellipsoid_integer_points, gauss_solve, mat_mul, transpose
from .weights import BilinearForm, Weight, half_sum, project_away


@dataclass(frozen=True)
class EssentialVoganDatum:
    """Computable shadow of one essential component.

    kappa generates the datum; mu is the integral shift for the all-plus
    sign choice; kappa_l is mu with its components along the Levi pairs
    removed; m_values lists the sign character value on each pair.
    """

    parabolic: ThetaParabolic
    kappa: Weight
    mu: Weight
    kappa_l: Weight
    m_values: tuple[int, ...]

    @property
    def descriptor(self) -> RealFormDescriptor:
        return self.parabolic.descriptor

    @property
    def n_pairs(self) -> int:
        return self.parabolic.n_pairs


@dataclass(frozen=True)
class ClassificationRun:
    group: str
    radius: Fraction
    entries: tuple[EssentialVoganDatum, ...]

    @property
    def kappas(self) -> tuple[Weight, ...]:
        return tuple(e.kappa for e in self.entries)


def m_value(mu: Weight, beta: Weight, form: BilinearForm) -> int:
    """(-1) ** c for the integer coroot pairing c = 2<mu,b>/<b,b>.

    A non-integer pairing means mu exponentiates to no character of the
    circle attached to beta.
    """
    c = form.coroot_pairing(mu, beta)
    if c.denominator != 1:
        raise NonIntegralPairing(
            f"coroot pairing of {mu} against {beta} is {c}, not an integer"
        )
    return -1 if c.numerator % 2 else 1


def construct_from_kappa(d: RealFormDescriptor, kappa: Weight):
    """The datum generated by a dominant kappa, or None when the shifted
    weight mu falls outside the integral lattice."""
    if not d.is_dominant_weight(kappa):
        raise NotDominant(f"{kappa} is not dominant for the compact positives")

    lam = kappa + d.rho_compact()
    p = build_parabolic(d, lam)
    plus = (1,) * p.n_pairs
    mu = kappa - p.rho_s_cap_u() - p.rho_l_plus(plus)
    if not is_integral(d, mu):
        return None

    form = d.form
    for gamma in p.u_compact + p.u_noncompact:
        if form.inner(lam, gamma) <= 0:
            raise StructuralInvariantError(
                "defining weight must pair strictly positively with every "
                "nilradical weight"
            )
    for beta in p.l_pairs:
        if form.coroot_pairing(mu, beta) != -1:
            raise StructuralInvariantError(
                f"mu must restrict to minus one half of each Levi pair; "
                f"coroot pairing against {beta} is "
                f"{form.coroot_pairing(mu, beta)}"
            )

    kappa_l = project_away(mu, p.l_pairs, form)
    m_values = tuple(m_value(mu, beta, form) for beta in p.l_pairs)
    return EssentialVoganDatum(
        parabolic=p, kappa=kappa, mu=mu, kappa_l=kappa_l, m_values=m_values
    )


def is_essential(datum: EssentialVoganDatum) -> bool:
    """The sign character takes the value -1 on every Levi pair.

    The Levi already has the split rank-one shape by construction, so this
    single condition decides essentiality; it is vacuous when there are no
    pairs.
    """
    return all(v == -1 for v in datum.m_values)


def genuine_shift(d: RealFormDescriptor) -> Weight:
    """Half-sum of the lexicographic noncompact positives; the genuine
    weights form its coset modulo the integral lattice."""
    return half_sum(d.noncompact_positives(), rank=d.rank_tc)


def is_genuine(d: RealFormDescriptor, kappa: Weight) -> bool:
    """Whether kappa - rho(noncompact positives) is integral.

    Any one-per-pair choice of noncompact positives gives the same answer:
    two choices differ by a sum of noncompact weights, which lie in the
    lattice.
    """
    return is_integral(d, kappa - genuine_shift(d))


def enumerate_ball(
    d: RealFormDescriptor, radius_sq: Fraction
) -> tuple[EssentialVoganDatum, ...]:
    """Every datum whose kappa is dominant, genuine, and of squared norm at
    most radius_sq, sorted by kappa coordinates.

    Points of the shifted lattice are enumerated exactly: with basis rows B
    and Gram G the squared norm of shift + nB is a positive definite
    quadratic in the integer vector n, walked by rational LDL recursion.
    Every genuine dominant kappa must yield a datum; a miss is a hard
    correctness failure, not a skip.
    """
    radius_sq = Fraction(radius_sq)
    shift = genuine_shift(d)
    basis = tuple(tuple(b.coords) for b in d.integrality_basis)
    quad = mat_mul(mat_mul(basis, d.form.gram), transpose(basis))
    center = gauss_solve(transpose(basis), tuple(-c for c in shift.coords))
    if center is None:
        raise StructuralInvariantError("integrality basis is singular")

    found = []
    for n in ellipsoid_integer_points(center, quad, radius_sq):
        kappa = shift
        for coeff, b in zip(n, d.integrality_basis):
            kappa = kappa + coeff * b
        if not d.is_dominant_weight(kappa):
            continue
        datum = construct_from_kappa(d, kappa)
        if datum is None:
            raise InternalBijectionFailure(
                f"genuine dominant weight {kappa} produced no datum"
            )
        found.append(datum)

    found.sort(key=lambda datum: datum.kappa.coords)
    kappas = [datum.kappa for datum in found]
    if len(set(kappas)) != len(kappas):
        raise InternalBijectionFailure("duplicate kappa in enumeration")
    return tuple(found)


def enumerate_components(d: RealFormDescriptor, radius) -> ClassificationRun:
    """Classification run over the closed ball of the given radius > 0."""
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    entries = enumerate_ball(d, radius * radius)
    return ClassificationRun(group=d.name, radius=radius, entries=entries)
