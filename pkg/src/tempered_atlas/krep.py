"""Finite-dimensional representation calculator for the compact group.

Everything is driven by the compact root data alone, so a central torus
(U(2), SO(2)) costs nothing: central directions ride along as free abelian
coordinates.  Multiplicities come from the Freudenthal recursion, tensor
products from the Klimyk shift over one factor's weight multiset, and the
multiplicity of a spin-cover type in V (x) S from the Weyl
antisymmetrization sum, which is exact and order-free.

Weight multisets are plain dicts Weight -> positive integer.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .classify import is_genuine
from .errors import NotDominant, NotGenuine, StructuralInvariantError
from .groups import RealFormDescriptor, is_integral
from .ratlin import gauss_solve, identity, mat_mul, mat_vec, transpose
from .weights import Weight, half_sum, reflect

WeightMultiset = dict

_MAX_CHAMBER_STEPS = 100_000
_MAX_WEYL_ORDER = 1_000_000


def multiset_mass(ms: WeightMultiset) -> int:
    return sum(ms.values())


def convolve(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """Weight multiset of a tensor product of the two weight systems."""
    out: WeightMultiset = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + m1 * m2
    return out


@lru_cache(maxsize=None)
def simple_compact_roots(d: RealFormDescriptor) -> tuple[Weight, ...]:
    """Positive compact roots that are not sums of two positive ones."""
    pos = set(d.positive_compact)
    return tuple(
        sorted(a for a in pos if not any(b != a and (a - b) in pos for b in pos))
    )


def dominant_representative(d: RealFormDescriptor, w: Weight) -> Weight:
    """Image of w in the closed dominant chamber under simple reflections."""
    simples = simple_compact_roots(d)
    for _ in range(_MAX_CHAMBER_STEPS):
        neg = next((s for s in simples if d.form.inner(w, s) < 0), None)
        if neg is None:
            return w
        w = reflect(w, neg, d.form)
    raise StructuralInvariantError(
        "dominant chamber walk did not terminate; compact root data is "
        "not a root system"
    )


def to_dominant_chamber(d: RealFormDescriptor, w: Weight):
    """(dominant image, reflection parity, hit a chamber wall)."""
    simples = simple_compact_roots(d)
    sign = 1
    for _ in range(_MAX_CHAMBER_STEPS):
        neg = next((s for s in simples if d.form.inner(w, s) < 0), None)
        if neg is None:
            singular = any(d.form.inner(w, s) == 0 for s in simples)
            return w, sign, singular
        w = reflect(w, neg, d.form)
        sign = -sign
    raise StructuralInvariantError(
        "dominant chamber walk did not terminate; compact root data is "
        "not a root system"
    )


def weyl_dim(d: RealFormDescriptor, hw: Weight) -> int:
    """Product over positive compact roots of <hw + rho, a> / <rho, a>."""
    if not d.is_dominant_weight(hw):
        raise NotDominant(f"{hw} is not dominant")
    rho = d.rho_compact()
    value = Fraction(1)
    for a in d.positive_compact:
        num = d.form.inner(hw + rho, a)
        if num <= 0:
            raise NotDominant(f"{hw} + rho_K is not strictly dominant")
        value *= num / d.form.inner(rho, a)
    if value.denominator != 1 or value <= 0:
        raise StructuralInvariantError(
            f"dimension formula gave the non-integer {value}"
        )
    return int(value)


@lru_cache(maxsize=None)
def _positive_root_simple_coords(d: RealFormDescriptor):
    simples = simple_compact_roots(d)
    cols = transpose(tuple(s.coords for s in simples))
    out = []
    for a in d.positive_compact:
        sol = gauss_solve(cols, a.coords)
        if sol is None or any(c.denominator != 1 or c < 0 for c in sol):
            raise StructuralInvariantError(
                f"positive compact root {a} is not a nonnegative integer "
                "combination of the simple roots"
            )
        out.append((a, tuple(int(c) for c in sol)))
    return tuple(out)


@lru_cache(maxsize=None)
def _freudenthal_items(d: RealFormDescriptor, hw: Weight):
    form = d.form
    simples = simple_compact_roots(d)
    mult = {hw: 1}
    if not simples:
        return ((hw, 1),)
    pos_coords = _positive_root_simple_coords(d)
    rho = d.rho_compact()
    top = form.norm_sq(hw + rho)

    # Walk hw - (nonnegative combinations of simple roots) level by level.
    # Every true weight below hw has a true-weight parent one simple root
    # up, so expanding only positive-multiplicity frontiers loses nothing.
    coeff = {hw: (0,) * len(simples)}
    frontier = [hw]
    while frontier:
        candidates = {}
        for w in frontier:
            cw = coeff[w]
            for i, s in enumerate(simples):
                child = w - s
                if child not in candidates:
                    cc = list(cw)
                    cc[i] += 1
                    candidates[child] = tuple(cc)
        frontier = []
        for w in sorted(candidates):
            cw = candidates[w]
            wd = dominant_representative(d, w)
            if wd != w:
                # Multiplicities are reflection invariant; the dominant
                # image sits at a strictly earlier level, already decided.
                m = mult.get(wd, 0)
            else:
                denom = top - form.norm_sq(w + rho)
                if denom <= 0:
                    m = 0
                else:
                    acc = Fraction(0)
                    for a, acoords in pos_coords:
                        k_max = min(
                            cw[i] // acoords[i]
                            for i in range(len(simples))
                            if acoords[i]
                        )
                        x = w
                        for _ in range(k_max):
                            x = x + a
                            mk = mult.get(x, 0)
                            if mk:
                                acc += mk * form.inner(x, a)
                    m_exact = 2 * acc / denom
                    if m_exact.denominator != 1 or m_exact < 0:
                        raise StructuralInvariantError(
                            f"multiplicity recursion gave {m_exact} at {w}"
                        )
                    m = int(m_exact)
            if m > 0:
                mult[w] = m
                coeff[w] = cw
                frontier.append(w)
    return tuple(sorted(mult.items()))


def freudenthal(d: RealFormDescriptor, hw: Weight) -> WeightMultiset:
    """Full weight multiset of the irreducible with highest weight hw."""
    if not d.is_dominant_weight(hw):
        raise NotDominant(f"{hw} is not dominant")
    return dict(_freudenthal_items(d, hw))


def tensor_decompose(d: RealFormDescriptor, hw1: Weight, hw2: Weight):
    """Irreducible decomposition of the tensor product, as a sorted tuple
    of (dominant highest weight, multiplicity).

    Klimyk shift: each weight nu of the second factor moves hw1 + rho into
    some chamber; wall hits cancel, interior points contribute the parity
    of the walk.
    """
    for hw in (hw1, hw2):
        if not d.is_dominant_weight(hw):
            raise NotDominant(f"{hw} is not dominant")
    rho = d.rho_compact()
    acc: dict[Weight, int] = {}
    for nu, m in sorted(freudenthal(d, hw2).items()):
        moved, sign, singular = to_dominant_chamber(d, hw1 + rho + nu)
        if singular:
            continue
        target = moved - rho
        acc[target] = acc.get(target, 0) + sign * m
    out = tuple(sorted((w, c) for w, c in acc.items() if c != 0))
    for w, c in out:
        if c < 0 or not d.is_dominant_weight(w):
            raise StructuralInvariantError(
                f"tensor decomposition produced invalid term ({w}, {c})"
            )
    return out


def spin_weights(d: RealFormDescriptor) -> WeightMultiset:
    """Weight multiset of the spin module of the noncompact part.

    Subset sums of one noncompact positive system around its half-sum; a
    zero-weight part of dimension m0 contributes a uniform factor
    2**(m0 // 2), so the total mass is 2**(dim(s) // 2).
    """
    pairs = d.noncompact_positives()
    base = half_sum(pairs, rank=d.rank_tc)
    factor = 2 ** (d.zero_weight_s_dim // 2)
    out: WeightMultiset = {}
    for picks in itertools.product((0, 1), repeat=len(pairs)):
        w = base
        for take, gamma in zip(picks, pairs):
            if take:
                w = w - gamma
        out[w] = out.get(w, 0) + factor
    return out


def _reflection_matrix(d: RealFormDescriptor, a: Weight):
    n = d.rank_tc
    ga = mat_vec(d.form.gram, a.coords)
    nn = d.form.norm_sq(a)
    return tuple(
        tuple(
            (Fraction(1) if i == j else Fraction(0)) - 2 * a.coords[i] * ga[j] / nn
            for j in range(n)
        )
        for i in range(n)
    )


@lru_cache(maxsize=None)
def weyl_group(d: RealFormDescriptor):
    """All Weyl elements of the compact root system as (matrix, parity)
    pairs, generated by closing the simple reflections."""
    gens = [_reflection_matrix(d, s) for s in simple_compact_roots(d)]
    ident = identity(d.rank_tc)
    elements = {ident: 1}
    queue = [ident]
    while queue:
        m = queue.pop()
        sgn = elements[m]
        for g in gens:
            nm = mat_mul(g, m)
            if nm not in elements:
                if len(elements) >= _MAX_WEYL_ORDER:
                    raise StructuralInvariantError(
                        "Weyl closure exceeded the order cap; compact root "
                        "data is not a root system"
                    )
                elements[nm] = -sgn
                queue.append(nm)
    return tuple(sorted(elements.items()))


def dirac_multiplicity(d: RealFormDescriptor, tau_hw: Weight, v_hw: Weight) -> int:
    """Multiplicity of the genuine type with highest weight tau_hw inside
    V(v_hw) (x) S, by the alternating Weyl sum over the product multiset."""
    if not d.is_dominant_weight(tau_hw) or not is_genuine(d, tau_hw):
        raise NotGenuine(f"{tau_hw} is not a genuine dominant highest weight")
    if not d.is_dominant_weight(v_hw) or not is_integral(d, v_hw):
        raise NotDominant(f"{v_hw} is not a dominant integral highest weight")
    product = convolve(freudenthal(d, v_hw), spin_weights(d))
    rho = d.rho_compact()
    target = tau_hw + rho
    total = 0
    for mat, sgn in weyl_group(d):
        moved = Weight(mat_vec(mat, target.coords)) - rho
        total += sgn * product.get(moved, 0)
    if total < 0:
        raise StructuralInvariantError(
            f"alternating sum gave the negative multiplicity {total}"
        )
    return total
