"""Per-component invariants and the two-way matching.

From a datum: the 2^N fine weights kappa_l + (1/2) sum s_j b_j, the minimal
K-types (fine weight + twice the noncompact nilradical half-sum), the Dirac
highest weight kappa_l + rho(s cap u) (always equal to kappa), and the
R-group order 2^N.  The inverse direction recovers kappa from a minimal
K-type as mu - rho_G + rho_K for the unique positive system making
mu + 2 rho_K strictly dominant.
"""

import itertools
from dataclasses import dataclass

from .classify import EssentialVoganDatum, construct_from_kappa, is_genuine
from .errors import (
    AmbiguousPositiveSystem,
    DominanceFailure,
    InternalBijectionFailure,
    NotDominant,
    NotGenuine,
    StructuralInvariantError,
)
from .groups import RealFormDescriptor, is_integral, lex_positive
from .weights import Weight, half_sum


@dataclass(frozen=True)
class ComponentSummary:
    kappa: Weight
    n_pairs: int
    r_order: int
    fine_weights: tuple[Weight, ...]
    minimal_k_types: tuple[Weight, ...]
    dirac_hw: Weight


def sign_vectors(n: int):
    """All +-1 vectors of length n, binary-counter order, +1 first."""
    return itertools.product((1, -1), repeat=n)


def fine_weights(datum: EssentialVoganDatum) -> tuple[Weight, ...]:
    """kappa_l shifted by every half signed sum of the Levi pairs; each of
    the 2^N results is integral, which is checked."""
    d = datum.descriptor
    p = datum.parabolic
    out = []
    for signs in sign_vectors(p.n_pairs):
        w = datum.kappa_l + p.rho_l_plus(signs)
        if not is_integral(d, w):
            raise StructuralInvariantError(
                f"fine weight {w} is not analytically integral"
            )
        out.append(w)
    return tuple(out)


def minimal_k_types(datum: EssentialVoganDatum) -> tuple[Weight, ...]:
    """Fine weights shifted by 2 rho(s cap u): the minimal K-type highest
    weights, pairwise distinct and dominant."""
    shift = 2 * datum.parabolic.rho_s_cap_u()
    out = tuple(w + shift for w in fine_weights(datum))
    d = datum.descriptor
    for w in out:
        if not d.is_dominant_weight(w):
            raise DominanceFailure(
                f"computed minimal K-type {w} is not dominant"
            )
    if len(set(out)) != len(out):
        raise StructuralInvariantError("minimal K-types must be pairwise distinct")
    return out


def dirac_highest_weight(datum: EssentialVoganDatum) -> Weight:
    """kappa_l + rho(s cap u); algebraically equal to kappa, and checked."""
    hw = datum.kappa_l + datum.parabolic.rho_s_cap_u()
    if hw != datum.kappa:
        raise StructuralInvariantError(
            f"Dirac highest weight {hw} must equal the generating weight "
            f"{datum.kappa}"
        )
    return hw


def r_group_order(datum: EssentialVoganDatum) -> int:
    """2^N with N the number of Levi pairs; cross-checked against the rank
    bookkeeping N = dim(a) - rank_g + rank_tc."""
    d = datum.descriptor
    n = datum.n_pairs
    dim_a = n + (d.rank_g - d.rank_tc)
    if dim_a - d.rank_g + d.rank_tc != n:
        raise StructuralInvariantError(
            "R-group order bookkeeping is inconsistent with the descriptor ranks"
        )
    return 2**n


def match_inverse(d: RealFormDescriptor, mu_g: Weight) -> Weight:
    """Recover the generating weight from a minimal K-type highest weight.

    The positive system is resolved purely by the strict sign of
    <mu_g + 2 rho_K, gamma> over the noncompact weights; a zero pairing
    means the input is not a minimal K-type of an essential component and
    is an error, never a tie-break.
    """
    if not d.is_dominant_weight(mu_g):
        raise NotDominant(f"{mu_g} is not dominant for the compact positives")
    rho_k = d.rho_compact()
    w = mu_g + 2 * rho_k
    chosen = []
    for gamma in d.noncompact_weights:
        s = d.form.inner(w, gamma)
        if s == 0 and lex_positive(gamma):
            raise AmbiguousPositiveSystem(
                f"{mu_g} + 2 rho_K pairs to zero with {gamma}"
            )
        if s > 0:
            chosen.append(gamma)
    rho_g = rho_k + half_sum(chosen, rank=d.rank_tc)
    return mu_g - rho_g + rho_k


def summarize_datum(datum: EssentialVoganDatum) -> ComponentSummary:
    """Assemble one component's invariants, verifying both round trips:
    the Dirac highest weight equals kappa, and every minimal K-type maps
    back to kappa through the inverse matching."""
    d = datum.descriptor
    k_types = minimal_k_types(datum)
    for w in k_types:
        back = match_inverse(d, w)
        if back != datum.kappa:
            raise StructuralInvariantError(
                f"minimal K-type {w} matches back to {back}, expected "
                f"{datum.kappa}"
            )
    return ComponentSummary(
        kappa=datum.kappa,
        n_pairs=datum.n_pairs,
        r_order=r_group_order(datum),
        fine_weights=fine_weights(datum),
        minimal_k_types=k_types,
        dirac_hw=dirac_highest_weight(datum),
    )


def summarize(d: RealFormDescriptor, kappa: Weight) -> ComponentSummary:
    if not d.is_dominant_weight(kappa):
        raise NotDominant(f"{kappa} is not dominant for the compact positives")
    if not is_genuine(d, kappa):
        raise NotGenuine(f"{kappa} is not the highest weight of a genuine type")
    datum = construct_from_kappa(d, kappa)
    if datum is None:
        raise InternalBijectionFailure(
            f"genuine dominant weight {kappa} produced no datum"
        )
    return summarize_datum(datum)
