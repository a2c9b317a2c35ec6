"""Theta-stable parabolic subalgebras cut out by a weight.

A weight lam that is strictly dominant for the fixed compact positives
partitions the torus weights of the group into three exact-sign buckets:
strictly positive pairing (the nilradical u), zero pairing (the Levi), and
strictly negative (the opposite nilradical, kept implicitly).  The zero
bucket then consists of noncompact +-pairs only, one rank-one split factor
per pair, mutually orthogonal, plus the central zero-weight part.
"""

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    NondegeneracyViolation,
    NotStrictlyDominant,
    StructuralInvariantError,
)
from .groups import RealFormDescriptor, lex_positive
from .weights import Weight, half_sum


@dataclass(frozen=True)
class ThetaParabolic:
    descriptor: RealFormDescriptor
    defining_weight: Weight
    u_compact: tuple[Weight, ...]
    u_noncompact: tuple[Weight, ...]
    l_pairs: tuple[Weight, ...]
    m0: int

    @property
    def n_pairs(self) -> int:
        return len(self.l_pairs)

    def rho_s_cap_u(self) -> Weight:
        """Half-sum of the noncompact weights in the nilradical."""
        return half_sum(self.u_noncompact, rank=self.descriptor.rank_tc)

    def rho_l_plus(self, signs) -> Weight:
        """Half-sum of one signed member per Levi pair: (1/2) sum s_j b_j."""
        signs = tuple(signs)
        if len(signs) != self.n_pairs:
            raise DimensionMismatch(
                f"{len(signs)} signs for {self.n_pairs} Levi pairs"
            )
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        return half_sum(
            (s * b for s, b in zip(signs, self.l_pairs)),
            rank=self.descriptor.rank_tc,
        )

    def rho_u(self) -> Weight:
        """Half-sum of all nilradical weights; vanishes against every Levi
        pair, which is checked."""
        rho = half_sum(
            self.u_compact + self.u_noncompact, rank=self.descriptor.rank_tc
        )
        form = self.descriptor.form
        for beta in self.l_pairs:
            if form.inner(rho, beta) != 0:
                raise StructuralInvariantError(
                    "half-sum of nilradical weights must restrict to zero on "
                    f"each rank-one Levi factor; fails against {beta}"
                )
        return rho

    def assembled_noncompact_positives(self, signs) -> tuple[Weight, ...]:
        """Noncompact part of the positive system built from the nilradical
        plus a sign choice on the Levi pairs."""
        signs = tuple(signs)
        if len(signs) != self.n_pairs:
            raise DimensionMismatch(
                f"{len(signs)} signs for {self.n_pairs} Levi pairs"
            )
        return self.u_noncompact + tuple(
            s * b for s, b in zip(signs, self.l_pairs)
        )


def build_parabolic(d: RealFormDescriptor, lam: Weight) -> ThetaParabolic:
    """Bucket every torus weight of the group by the exact sign of its
    pairing with lam.

    lam must be strictly dominant for the fixed compact positives; the zero
    bucket is then guaranteed to contain noncompact pairs only, and the pair
    representatives (first nonzero coordinate positive) are mutually
    orthogonal.
    """
    form = d.form
    if not d.is_dominant_weight(lam, strict=True):
        raise NotStrictlyDominant(
            f"{lam} does not pair strictly positively with every positive "
            "compact root"
        )

    u_compact = []
    for alpha in d.compact_roots:
        s = form.inner(lam, alpha)
        if s > 0:
            u_compact.append(alpha)
        elif s == 0:
            raise NondegeneracyViolation(
                f"compact root {alpha} pairs to zero with {lam}"
            )

    u_noncompact = []
    l_pairs = []
    for gamma in d.noncompact_weights:
        s = form.inner(lam, gamma)
        if s > 0:
            u_noncompact.append(gamma)
        elif s == 0 and lex_positive(gamma):
            l_pairs.append(gamma)

    u_compact.sort()
    u_noncompact.sort()
    l_pairs.sort()

    for i, a in enumerate(l_pairs):
        for b in l_pairs[i + 1 :]:
            if form.inner(a, b) != 0:
                raise StructuralInvariantError(
                    "rank-one Levi factors must be mutually orthogonal; "
                    f"{a} and {b} are not"
                )

    total = 2 * len(u_compact) + 2 * len(u_noncompact) + 2 * len(l_pairs)
    if total != len(d.compact_roots) + len(d.noncompact_weights):
        raise StructuralInvariantError(
            "sign buckets do not partition the torus weights; descriptor "
            "lists are inconsistent"
        )

    return ThetaParabolic(
        descriptor=d,
        defining_weight=lam,
        u_compact=tuple(u_compact),
        u_noncompact=tuple(u_noncompact),
        l_pairs=tuple(l_pairs),
        m0=d.zero_weight_s_dim,
    )
