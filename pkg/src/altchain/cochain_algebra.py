"""Exact rational cochains, the alternating-projection operator, cup products.

A cochain is a finitely supported map from degree-n generators to
Fractions.  The projector averages a cochain over all reorderings of each
generator with the parity as weight; its image is exactly the cochains
that flip sign under odd reorderings, and it is the identity there.  The
modified cup product is the projector applied to the ordinary front/back
cup product, which buys graded commutativity and associativity on
alternating inputs.

All arithmetic is exact; equality of cochains is equality of their
canonical sparse forms, with no tolerances anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import permutations
from .complex_model import GeneratorIndex, face
from .errors import DegreeCapError, FormatError
from .integer_homology import IntegerMatrix

COCHAIN_FORMAT_VERSION = 1
_COCHAIN_FIELDS = {"format_version", "degree", "values"}


class Cochain:
    """Sparse rational cochain of a fixed degree.

    ``values`` maps generator tuples to nonzero Fractions; anything absent
    evaluates to zero.  Instances are value-like: arithmetic returns new
    cochains and the internal map is never mutated after construction.
    """

    __slots__ = ("degree", "values")

    def __init__(self, degree: int, values=None):
        self.degree = degree
        clean = {}
        for g, v in (values or {}).items():
            if len(g) != degree + 1:
                raise ValueError(f"{g} does not have degree {degree}")
            fv = Fraction(v)
            if fv:
                clean[g] = fv
        self.values = clean

    @classmethod
    def zero(cls, degree: int) -> "Cochain":
        return cls(degree)

    @classmethod
    def indicator(cls, g: tuple) -> "Cochain":
        return cls(len(g) - 1, {g: Fraction(1)})

    def __call__(self, g: tuple) -> Fraction:
        return self.values.get(g, Fraction(0))

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.values)
        for g, v in other.values.items():
            out[g] = out.get(g, Fraction(0)) + v
        return Cochain(self.degree, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {g: -v for g, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, k) -> "Cochain":
        k = Fraction(k)
        return Cochain(self.degree, {g: k * v for g, v in self.values.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.values == other.values)

    def __hash__(self):
        raise TypeError("Cochain is not hashable")

    def __repr__(self) -> str:
        terms = ", ".join(f"{g}: {v}" for g, v in sorted(self.values.items()))
        return f"Cochain(deg {self.degree}, {{{terms}}})"


def _reorder_closure(support) -> set:
    """All tuples obtained by reordering entries of the supported tuples."""
    out = set()
    for h in support:
        out.update(itertools.permutations(h))
    return out


def coboundary(index: GeneratorIndex, alpha: Cochain) -> Cochain:
    """Alternating sum of values on the faces; the dual of the boundary."""
    n = alpha.degree
    if n + 1 > index.max_degree:
        raise DegreeCapError(
            f"coboundary of degree {n} needs generators of degree {n + 1}, "
            f"cap is {index.max_degree}")
    K = index.complex
    targets = set()
    for h in alpha.values:
        sup = set(h)
        for v in range(K.vertex_count):
            if K.has_simplex(sup | {v}):
                for pos in range(n + 2):
                    targets.add(h[:pos] + (v,) + h[pos:])
    out = {}
    for g in targets:
        total = Fraction(0)
        for i in range(n + 2):
            f = face(g, i)
            if f in alpha.values:
                total += (-1) ** i * alpha.values[f]
        if total:
            out[g] = total
    return Cochain(n + 1, out)


def is_alternative(alpha: Cochain) -> bool:
    """Does the cochain flip by the parity under every entry reordering?"""
    group = permutations.enumerate_group(alpha.degree + 1)
    for g in _reorder_closure(alpha.values):
        vg = alpha(g)
        for s in group:
            if alpha(permutations.act(s, g)) != s.sign * vg:
                return False
    return True


def alternative_maker(alpha: Cochain) -> Cochain:
    """Parity-weighted average over all reorderings; projects onto
    alternating cochains and is the identity on them."""
    n = alpha.degree
    group = permutations.enumerate_group(n + 1)
    scale = Fraction(1, factorial(n + 1))
    out = {}
    for g in _reorder_closure(alpha.values):
        total = Fraction(0)
        for s in group:
            v = alpha.values.get(permutations.act(s, g))
            if v is not None:
                total += s.sign * v
        if total:
            out[g] = total * scale
    return Cochain(n, out)


def split(alpha: Cochain) -> tuple:
    """Decompose as (alternating part, projector kernel part)."""
    alt = alternative_maker(alpha)
    return alt, alpha - alt


def cup(index: GeneratorIndex, alpha: Cochain, beta: Cochain) -> Cochain:
    """Front-face/back-face product: evaluate the first factor on the
    leading entries and the second on the trailing entries."""
    p, q = alpha.degree, beta.degree
    if p + q > index.max_degree:
        raise DegreeCapError(
            f"cup product of degrees {p} and {q} exceeds the cap "
            f"{index.max_degree}")
    out = {}
    for a, va in alpha.values.items():
        for b, vb in beta.values.items():
            if a[-1] != b[0]:
                continue
            t = a + b[1:]
            if index.is_generator(t):
                out[t] = va * vb  # front/back split of t is unique
    return Cochain(p + q, out)


def alt_cup(index: GeneratorIndex, alpha: Cochain, beta: Cochain) -> Cochain:
    """The projected cup product."""
    return alternative_maker(cup(index, alpha, beta))


def nonlinear_residual(index: GeneratorIndex, alpha: Cochain) -> Cochain:
    """The degree-(2p+1) cochain  alpha cup_A (coboundary alpha).

    Zero whenever alpha is closed; the left-hand side of the model
    nonlinear cochain equation.
    """
    p = alpha.degree
    if 2 * p + 1 > index.max_degree:
        raise DegreeCapError(
            f"residual of a degree-{p} cochain has degree {2 * p + 1}, "
            f"cap is {index.max_degree}")
    return alt_cup(index, alpha, coboundary(index, alpha))


# ---------------------------------------------------------------------------
# the alternating basis

@dataclass(frozen=True)
class AltBasis:
    """Basis data for the alternating cochains of one degree.

    The alternating cochains are spanned by one basis element per
    strictly increasing tuple (per n-simplex); the projector kernel is a
    complement, so its dimension is the generator count minus the number
    of simplices.
    """

    degree: int
    free_tuples: tuple
    complement_dim: int

    @property
    def dim(self) -> int:
        return len(self.free_tuples)


def alt_basis(index: GeneratorIndex, n: int) -> AltBasis:
    simplices = index.complex.simplices_of_dim(n)
    return AltBasis(degree=n, free_tuples=tuple(simplices),
                    complement_dim=index.count(n) - len(simplices))


def alternating_cochain(tau: tuple, value=1) -> Cochain:
    """The alternating cochain supported on the reorderings of a
    strictly increasing tuple, worth ``value`` on the tuple itself."""
    if list(tau) != sorted(set(tau)):
        raise ValueError(f"{tau} is not strictly increasing")
    n = len(tau) - 1
    value = Fraction(value)
    vals = {}
    for s in permutations.enumerate_group(n + 1):
        vals[permutations.act(s, tau)] = s.sign * value
    return Cochain(n, vals)


# ---------------------------------------------------------------------------
# matrices

def coboundary_matrix(index: GeneratorIndex, n: int) -> IntegerMatrix:
    """Matrix of the coboundary from degree n to degree n+1 on the
    generator bases (integer entries)."""
    if n + 1 > index.max_degree:
        raise DegreeCapError(f"need generators of degree {n + 1}")
    entries: dict = {}
    for i, g in enumerate(index.generators(n + 1)):
        for k in range(n + 2):
            j = index.position(face(g, k))
            key = (i, j)
            v = entries.get(key, 0) + (-1) ** k
            if v:
                entries[key] = v
            else:
                entries.pop(key, None)
    return IntegerMatrix(index.count(n + 1), index.count(n), entries)


def alt_coboundary_matrix(index: GeneratorIndex, n: int) -> IntegerMatrix:
    """Coboundary on the alternating bases (strictly increasing tuples)."""
    if n + 1 > index.max_degree:
        raise DegreeCapError(f"need generators of degree {n + 1}")
    cols = {t: j for j, t in enumerate(index.complex.simplices_of_dim(n))}
    rows = index.complex.simplices_of_dim(n + 1)
    entries: dict = {}
    for i, rho in enumerate(rows):
        for k in range(n + 2):
            f = rho[:k] + rho[k + 1:]
            entries[(i, cols[f])] = (-1) ** k
    return IntegerMatrix(len(rows), len(cols), entries)


def alternative_maker_matrix(index: GeneratorIndex, n: int) -> list:
    """Dense Fraction matrix of the projector on the degree-n basis."""
    m = index.count(n)
    out = [[Fraction(0)] * m for _ in range(m)]
    for j, g in enumerate(index.generators(n)):
        image = alternative_maker(Cochain.indicator(g))
        for h, v in image.values.items():
            out[index.position(h)][j] = v
    return out


def alternative_maker_matrix_scaled(index: GeneratorIndex, n: int) -> IntegerMatrix:
    """The projector matrix times (n+1)!, which is integer; same rank.

    Sparse, so rank checks stay cheap even where the dense Fraction matrix
    would not fit comfortably.
    """
    fact = factorial(n + 1)
    entries: dict = {}
    for j, g in enumerate(index.generators(n)):
        image = alternative_maker(Cochain.indicator(g))
        for h, v in image.values.items():
            iv = v * fact
            entries[(index.position(h), j)] = int(iv)
    m = index.count(n)
    return IntegerMatrix(m, m, entries)


# ---------------------------------------------------------------------------
# serialization

def cochain_to_json(alpha: Cochain) -> dict:
    return {
        "format_version": COCHAIN_FORMAT_VERSION,
        "degree": alpha.degree,
        "values": [[list(g), f"{v.numerator}/{v.denominator}"]
                   for g, v in sorted(alpha.values.items())],
    }


def cochain_from_json(data: dict, index: GeneratorIndex | None = None) -> Cochain:
    if not isinstance(data, dict):
        raise FormatError("cochain must be a JSON object")
    unknown = set(data) - _COCHAIN_FIELDS
    if unknown:
        raise FormatError(f"unknown fields in cochain: {sorted(unknown)}")
    if data.get("format_version", COCHAIN_FORMAT_VERSION) != COCHAIN_FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {data.get('format_version')!r}")
    if "degree" not in data or "values" not in data:
        raise FormatError("cochain needs 'degree' and 'values'")
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 0:
        raise FormatError(f"bad degree {degree!r}")
    vals = {}
    for item in data["values"]:
        try:
            key, s = item
            g = tuple(int(v) for v in key)
            v = Fraction(s)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad cochain entry {item!r}") from exc
        if len(g) != degree + 1:
            raise FormatError(f"tuple {g} does not have degree {degree}")
        if index is not None and not index.is_generator(g):
            raise FormatError(f"{g} is not a generator of the complex")
        vals[g] = vals.get(g, Fraction(0)) + v
    return Cochain(degree, vals)
