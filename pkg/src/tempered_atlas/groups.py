"""Group descriptors: built-in catalog, text file format, validation,
and lattice integrality.

A descriptor records a connected linear real reductive group purely through
its compact-torus weight structure: the compact roots with a fixed positive
subsystem, the nonzero weights of the noncompact part (multiplicity one
each), the dimension of the zero-weight noncompact part, an invariant Gram
matrix, and a basis of the analytically integral lattice.

Descriptor file format (text, human editable, exact rationals only)::

    [group]
    name = sp4r
    rank_tc = 2
    rank_g = 2
    zero_weight_s_dim = 0

    [form]
    gram = 1,0 ; 0,1

    [roots]
    compact = 1,-1 ; -1,1
    positive_compact = 1,-1
    noncompact = 1,1 ; -1,-1 ; 2,0 ; -2,0 ; 0,2 ; 0,-2

    [lattice]
    basis = 1,0 ; 0,1

Vectors are comma-separated rationals ("p/q" or "n"; no float literals),
vector lists are semicolon-separated, and an empty value is an empty list.
"""

import configparser
import io
from dataclasses import dataclass

from .errors import (
    DescriptorFormatError,
    DescriptorValidationError,
    DimensionMismatch,
    UnknownGroup,
)
from .ratlin import det, gauss_solve, transpose
from .weights import BilinearForm, Weight, half_sum, is_dominant, parse_rational, reflect


def lex_positive(w: Weight) -> bool:
    """First nonzero coordinate is positive; the canonical pick per +-pair."""
    for c in w:
        if c != 0:
            return c > 0
    return False


@dataclass(frozen=True)
class RealFormDescriptor:
    name: str
    rank_tc: int
    rank_g: int
    form: BilinearForm
    compact_roots: tuple[Weight, ...]
    positive_compact: tuple[Weight, ...]
    noncompact_weights: tuple[Weight, ...]
    zero_weight_s_dim: int
    integrality_basis: tuple[Weight, ...]

    @property
    def dim_s(self) -> int:
        return len(self.noncompact_weights) + self.zero_weight_s_dim

    def rho_compact(self) -> Weight:
        """Half-sum of the fixed positive compact roots."""
        return half_sum(self.positive_compact, rank=self.rank_tc)

    def noncompact_positives(self) -> tuple[Weight, ...]:
        """The lexicographically positive member of each noncompact +-pair."""
        return tuple(sorted(w for w in self.noncompact_weights if lex_positive(w)))

    def is_dominant_weight(self, w: Weight, strict: bool = False) -> bool:
        return is_dominant(w, self.positive_compact, self.form, strict=strict)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(d: RealFormDescriptor) -> ValidationReport:
    """Check every structural invariant; violations come back in a fixed
    order as (invariant name, detail) pairs."""
    v: list[tuple[str, str]] = []

    if d.zero_weight_s_dim != d.rank_g - d.rank_tc:
        v.append(
            (
                "rank_balance",
                f"zero_weight_s_dim = {d.zero_weight_s_dim} but rank_g - rank_tc = "
                f"{d.rank_g - d.rank_tc}",
            )
        )
    if d.form.rank != d.rank_tc:
        v.append(("form_shape", f"Gram is {d.form.rank}x{d.form.rank}, rank_tc = {d.rank_tc}"))
    elif not d.form.is_symmetric():
        v.append(("form_symmetric", "Gram matrix is not symmetric"))
    elif not d.form.is_positive_definite():
        v.append(("form_positive_definite", "form not positive definite"))

    dim_ok = True
    for label, weights in (
        ("compact", d.compact_roots),
        ("positive_compact", d.positive_compact),
        ("noncompact", d.noncompact_weights),
        ("lattice", d.integrality_basis),
    ):
        bad = [w for w in weights if len(w) != d.rank_tc]
        if bad:
            dim_ok = False
            v.append((f"{label}_dimension", f"wrong-rank entries: {bad}"))

    if not dim_ok:
        return ValidationReport(tuple(v))  # coordinate checks below assume ranks match

    for label, weights in (("compact", d.compact_roots), ("noncompact", d.noncompact_weights)):
        seen = set(weights)
        if len(seen) != len(weights):
            v.append(
                (
                    f"{label}_multiplicity",
                    f"duplicate {label} entries; nonzero weights carry multiplicity 1",
                )
            )
        missing = sorted(w for w in seen if -w not in seen)
        if missing:
            v.append(
                (
                    f"{label}_negation_closure",
                    f"negatives absent for: {' '.join(str(w) for w in missing)}",
                )
            )
        zeros = [w for w in weights if w.is_zero]
        if zeros:
            v.append((f"{label}_zero_entry", "zero vector listed as a nonzero weight"))

    compact_set = set(d.compact_roots)
    pos = list(d.positive_compact)
    if any(a not in compact_set for a in pos):
        v.append(("positive_system", "positive_compact is not a subset of compact"))
    else:
        pos_set = set(pos)
        if len(pos_set) != len(pos):
            v.append(("positive_system", "duplicate positive compact roots"))
        else:
            for a in sorted(compact_set):
                if (a in pos_set) == (-a in pos_set):
                    v.append(
                        (
                            "positive_system",
                            f"exactly one of {a}, {-a} must be positive",
                        )
                    )
                    break

    if len(d.integrality_basis) != d.rank_tc or not d.integrality_basis:
        v.append(("lattice_basis_shape", "basis must have rank_tc rows"))
    elif all(len(w) == d.rank_tc for w in d.integrality_basis):
        basis = tuple(tuple(w.coords) for w in d.integrality_basis)
        if det(basis) == 0:
            v.append(("lattice_basis_invertible", "basis matrix is singular"))
        else:
            outside = [
                w
                for w in sorted(set(d.compact_roots) | set(d.noncompact_weights))
                if not is_integral(d, w)
            ]
            if outside:
                v.append(
                    (
                        "root_lattice_membership",
                        "weights outside the integral lattice: "
                        + " ".join(str(w) for w in outside),
                    )
                )

    if d.form.rank == d.rank_tc and d.form.is_positive_definite():
        cs = set(d.compact_roots)
        for a in sorted(cs):
            if a.is_zero:
                continue
            for b in sorted(cs):
                if reflect(b, a, d.form) not in cs:
                    v.append(
                        (
                            "compact_reflection_closure",
                            f"reflection of {b} in {a} leaves the compact root set",
                        )
                    )
                    break
            else:
                continue
            break

    return ValidationReport(tuple(v))


def lattice_coordinates(d: RealFormDescriptor, w: Weight):
    """Exact coefficients of w in the integrality basis, or None."""
    if len(w) != d.rank_tc:
        raise DimensionMismatch(f"weight rank {len(w)} vs descriptor rank {d.rank_tc}")
    basis = tuple(tuple(b.coords) for b in d.integrality_basis)
    return gauss_solve(transpose(basis), w.coords)


def is_integral(d: RealFormDescriptor, w: Weight) -> bool:
    """Membership of w in the integer span of the integrality basis."""
    coeffs = lattice_coordinates(d, w)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def _pm(*weights) -> tuple[Weight, ...]:
    out = []
    for w in weights:
        out.append(Weight(w))
        out.append(-Weight(w))
    return tuple(out)


def _sl2r() -> RealFormDescriptor:
    # k = so(2) is abelian; s has torus weights +-2; lattice Z.
    return RealFormDescriptor(
        name="sl2r",
        rank_tc=1,
        rank_g=1,
        form=BilinearForm.identity(1),
        compact_roots=(),
        positive_compact=(),
        noncompact_weights=_pm((2,)),
        zero_weight_s_dim=0,
        integrality_basis=(Weight((1,)),),
    )


def _sl2c() -> RealFormDescriptor:
    # Complex group seen as real: k = su(2), s is its adjoint, so the
    # weight +-2 occurs on both sides and s has a 1-dim zero-weight part.
    return RealFormDescriptor(
        name="sl2c",
        rank_tc=1,
        rank_g=2,
        form=BilinearForm.identity(1),
        compact_roots=_pm((2,)),
        positive_compact=(Weight((2,)),),
        noncompact_weights=_pm((2,)),
        zero_weight_s_dim=1,
        integrality_basis=(Weight((1,)),),
    )


def _su21() -> RealFormDescriptor:
    # Coordinates in the fundamental-weight basis of su(3); K = S(U(2)xU(1)).
    # Compact root e1-e2 = (2,-1); noncompact e1-e3 = (1,1), e2-e3 = (-1,2).
    # Gram is the (scaled) trace form in these coordinates; lattice Z^2.
    return RealFormDescriptor(
        name="su21",
        rank_tc=2,
        rank_g=2,
        form=BilinearForm(((2, 1), (1, 2))),
        compact_roots=_pm((2, -1)),
        positive_compact=(Weight((2, -1)),),
        noncompact_weights=_pm((1, 1), (-1, 2)),
        zero_weight_s_dim=0,
        integrality_basis=(Weight((1, 0)), Weight((0, 1))),
    )


def _sp4r() -> RealFormDescriptor:
    # K = U(2): compact roots +-(e1-e2); s carries +-(e1+e2), +-2e1, +-2e2.
    return RealFormDescriptor(
        name="sp4r",
        rank_tc=2,
        rank_g=2,
        form=BilinearForm.identity(2),
        compact_roots=_pm((1, -1)),
        positive_compact=(Weight((1, -1)),),
        noncompact_weights=_pm((1, 1), (2, 0), (0, 2)),
        zero_weight_s_dim=0,
        integrality_basis=(Weight((1, 0)), Weight((0, 1))),
    )


_CATALOG = {
    "sl2r": _sl2r,
    "sl2c": _sl2c,
    "su21": _su21,
    "sp4r": _sp4r,
}


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG))


def catalog(name: str) -> RealFormDescriptor:
    """A validated built-in descriptor; deterministic across runs."""
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise UnknownGroup(
            f"unknown group {name!r}; catalog has {', '.join(catalog_names())}"
        ) from None
    d = builder()
    report = validate(d)
    if not report.ok:
        raise DescriptorValidationError(report)
    return d


# ---------------------------------------------------------------------------
# file format


def _parse_vector_list(text: str, what: str) -> tuple[Weight, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise DescriptorFormatError(f"empty vector in {what}")
        try:
            out.append(Weight(parse_rational(p) for p in chunk.split(",")))
        except ValueError as exc:
            raise DescriptorFormatError(f"{what}: {exc}") from None
    return tuple(out)


def _parse_int(text: str, what: str) -> int:
    text = text.strip()
    if not text.lstrip("+-").isdigit():
        raise DescriptorFormatError(f"{what}: not an integer: {text!r}")
    return int(text)


def _get(cp: configparser.ConfigParser, section: str, key: str) -> str:
    try:
        return cp.get(section, key)
    except (configparser.NoSectionError, configparser.NoOptionError):
        raise DescriptorFormatError(f"missing [{section}] {key}") from None


def parse_descriptor(text: str) -> RealFormDescriptor:
    """Parse the file format without validating; see loads_descriptor."""
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise DescriptorFormatError(str(exc)) from None

    name = _get(cp, "group", "name").strip()
    if not name:
        raise DescriptorFormatError("[group] name is empty")
    rank_tc = _parse_int(_get(cp, "group", "rank_tc"), "rank_tc")
    rank_g = _parse_int(_get(cp, "group", "rank_g"), "rank_g")
    m0 = _parse_int(_get(cp, "group", "zero_weight_s_dim"), "zero_weight_s_dim")

    gram_rows = _parse_vector_list(_get(cp, "form", "gram"), "[form] gram")
    if len(gram_rows) != rank_tc or any(len(r) != rank_tc for r in gram_rows):
        raise DescriptorFormatError("[form] gram must be rank_tc x rank_tc")
    form = BilinearForm(tuple(r.coords for r in gram_rows))

    return RealFormDescriptor(
        name=name,
        rank_tc=rank_tc,
        rank_g=rank_g,
        form=form,
        compact_roots=_parse_vector_list(_get(cp, "roots", "compact"), "[roots] compact"),
        positive_compact=_parse_vector_list(
            _get(cp, "roots", "positive_compact"), "[roots] positive_compact"
        ),
        noncompact_weights=_parse_vector_list(
            _get(cp, "roots", "noncompact"), "[roots] noncompact"
        ),
        zero_weight_s_dim=m0,
        integrality_basis=_parse_vector_list(_get(cp, "lattice", "basis"), "[lattice] basis"),
    )


def loads_descriptor(text: str) -> RealFormDescriptor:
    d = parse_descriptor(text)
    report = validate(d)
    if not report.ok:
        raise DescriptorValidationError(report)
    return d


def load_descriptor(path) -> RealFormDescriptor:
    """Read, parse, and validate a descriptor file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DescriptorFormatError(f"cannot read {path}: {exc}") from None
    return loads_descriptor(text)


def _fmt_vectors(weights) -> str:
    return " ; ".join(",".join(str(c) for c in w) for w in weights)


def serialize_descriptor(d: RealFormDescriptor) -> str:
    out = io.StringIO()
    out.write("[group]\n")
    out.write(f"name = {d.name}\n")
    out.write(f"rank_tc = {d.rank_tc}\n")
    out.write(f"rank_g = {d.rank_g}\n")
    out.write(f"zero_weight_s_dim = {d.zero_weight_s_dim}\n\n")
    out.write("[form]\n")
    out.write(f"gram = {_fmt_vectors(Weight(r) for r in d.form.gram)}\n\n")
    out.write("[roots]\n")
    out.write(f"compact = {_fmt_vectors(d.compact_roots)}\n")
    out.write(f"positive_compact = {_fmt_vectors(d.positive_compact)}\n")
    out.write(f"noncompact = {_fmt_vectors(d.noncompact_weights)}\n\n")
    out.write("[lattice]\n")
    out.write(f"basis = {_fmt_vectors(d.integrality_basis)}\n")
    return out.getvalue()
