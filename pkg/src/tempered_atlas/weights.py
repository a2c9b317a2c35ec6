"""Exact rational weights, bilinear forms, half-sums, and dominance.

Weights are coordinate vectors in a fixed basis of the dual of the compact
torus; the positive definite Gram matrix of a :class:`BilinearForm` carries
all the geometry.  Every operation is pure, exact, and rejects floats.
"""

import re
from fractions import Fraction

from .errors import DimensionMismatch, ZeroRoot
from .ratlin import leading_minors_positive, to_matrix

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'n'.  Decimal and float literals are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coordinates are not allowed; use Fraction")
    return Fraction(value)


class Weight:
    """A vector of exact rationals; supports +, -, negation, and scalar
    multiplication by int or Fraction."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(_coerce(c) for c in coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight"):
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch(
                f"rank {len(self.coords)} vs rank {len(other.coords)}"
            )

    def __add__(self, other):
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, scalar):
        return Weight(a * _coerce(scalar) for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __le__(self, other):
        return self.coords <= other.coords

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Weight{self}"


def parse_weight(text: str) -> Weight:
    """Parse a comma-separated list of rationals, parentheses optional."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p for p in body.split(",") if p.strip() != ""]
    if not parts:
        raise ValueError(f"empty weight literal: {text!r}")
    return Weight(parse_rational(p) for p in parts)


class BilinearForm:
    """Symmetric rational Gram matrix on the weight space.

    Symmetry and positive definiteness are queried, not enforced at
    construction, so that structural validation can report them.
    """

    __slots__ = ("gram",)

    def __init__(self, rows):
        gram = to_matrix(
            tuple(tuple(_coerce(x) for x in row) for row in rows)
        )
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise DimensionMismatch("Gram matrix must be square")
        self.gram = gram

    @classmethod
    def identity(cls, rank: int) -> "BilinearForm":
        return cls(
            tuple(
                tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
            )
        )

    @property
    def rank(self) -> int:
        return len(self.gram)

    def _check(self, w: Weight):
        if len(w) != self.rank:
            raise DimensionMismatch(f"weight rank {len(w)} vs form rank {self.rank}")

    def inner(self, a: Weight, b: Weight) -> Fraction:
        self._check(a)
        self._check(b)
        return sum(
            a[i] * self.gram[i][j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def norm_sq(self, w: Weight) -> Fraction:
        return self.inner(w, w)

    def coroot_pairing(self, w: Weight, root: Weight) -> Fraction:
        """2 <w, root> / <root, root>."""
        nn = self.norm_sq(root)
        if nn == 0:
            raise ZeroRoot(f"zero-length root {root}")
        return 2 * self.inner(w, root) / nn

    def is_symmetric(self) -> bool:
        g = self.gram
        return all(
            g[i][j] == g[j][i] for i in range(self.rank) for j in range(i)
        )

    def is_positive_definite(self) -> bool:
        return self.is_symmetric() and leading_minors_positive(self.gram)

    def scaled(self, factor) -> "BilinearForm":
        c = _coerce(factor)
        return BilinearForm(tuple(tuple(c * x for x in row) for row in self.gram))

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearForm({self.gram})"


def half_sum(roots, rank: int | None = None) -> Weight:
    """Half the sum of the given weights, multiplicities as listed.

    An empty collection yields the zero weight; pass ``rank`` so its
    dimension is known.
    """
    roots = tuple(roots)
    if not roots:
        return Weight.zero(rank if rank is not None else 0)
    total = roots[0]
    for r in roots[1:]:
        total = total + r
    return Fraction(1, 2) * total


def is_dominant(w: Weight, positives, form: BilinearForm, strict: bool = False) -> bool:
    """True when <w, a> >= 0 (or > 0 when strict) for every a in positives.

    Vacuously true for an empty positive set (abelian compact factor).
    """
    if strict:
        return all(form.inner(w, a) > 0 for a in positives)
    return all(form.inner(w, a) >= 0 for a in positives)


def reflect(w: Weight, root: Weight, form: BilinearForm) -> Weight:
    return w - form.coroot_pairing(w, root) * root


def project_away(w: Weight, roots, form: BilinearForm) -> Weight:
    """Remove the components of w along mutually orthogonal roots.

    The orthogonality makes the removal a plain sum of rank-one
    projections; it is checked.
    """
    roots = tuple(roots)
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            if form.inner(a, b) != 0:
                raise ValueError(f"roots {a} and {b} are not orthogonal")
    out = w
    for a in roots:
        out = out - (form.inner(w, a) / form.norm_sq(a)) * a
    return out
