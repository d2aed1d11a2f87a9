"""Simplicial maps, induced chain/cochain maps, and the prism operator.

Two simplicial maps are treated as homotopic when they are contiguous:
the images of each simplex under both maps jointly span a simplex of the
codomain.  That is precisely what makes every front/back vertex list of
the prism construction a valid generator, on every reordering of every
tuple, so the prism descends to the sign quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .alt_chains import AltChain
from .cochain_algebra import Cochain
from .complex_model import SimplicialComplex
from .errors import FormatError

MAP_FORMAT_VERSION = 1
_MAP_FIELDS = {"format_version", "assignment", "name"}


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex assignment sending simplices of the domain into simplices
    of the codomain."""

    domain: SimplicialComplex
    codomain: SimplicialComplex
    assignment: tuple

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.domain.vertex_count:
            raise ValueError("assignment must cover every domain vertex")
        for v in self.assignment:
            if not 0 <= v < self.codomain.vertex_count:
                raise ValueError(f"vertex image {v} outside the codomain")
        for facet in self.domain.facets:
            image = {self.assignment[v] for v in facet}
            if not self.codomain.has_simplex(image):
                raise ValueError(
                    f"image of facet {sorted(facet)} does not span a simplex")

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def apply(self, g: tuple) -> tuple:
        return tuple(self.assignment[v] for v in g)

    @classmethod
    def identity(cls, K: SimplicialComplex) -> "SimplicialMap":
        return cls(K, K, tuple(range(K.vertex_count)))

    @classmethod
    def constant(cls, K: SimplicialComplex, L: SimplicialComplex, w: int) -> "SimplicialMap":
        return cls(K, L, (w,) * K.vertex_count)


def simplicial_map_to_json(f: SimplicialMap, name: str = "") -> dict:
    """Serialize as a vertex-assignment list."""
    out = {"format_version": MAP_FORMAT_VERSION, "assignment": list(f.assignment)}
    if name:
        out["name"] = name
    return out


def simplicial_map_from_json(data: dict, domain: SimplicialComplex,
                             codomain: SimplicialComplex) -> SimplicialMap:
    if not isinstance(data, dict):
        raise FormatError("simplicial map must be a JSON object")
    unknown = set(data) - _MAP_FIELDS
    if unknown:
        raise FormatError(f"unknown fields in simplicial map: {sorted(unknown)}")
    if data.get("format_version", MAP_FORMAT_VERSION) != MAP_FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {data.get('format_version')!r}")
    try:
        assignment = tuple(int(v) for v in data["assignment"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed assignment: {exc}") from exc
    try:
        return SimplicialMap(domain, codomain, assignment)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def push_forward(f: SimplicialMap, chain: dict) -> dict:
    """Relabel every generator of an ordered chain {tuple: coeff}."""
    out: dict = {}
    for g, c in chain.items():
        t = f.apply(g)
        out[t] = out.get(t, 0) + c
    return {t: c for t, c in out.items() if c}


def push_forward_alt(f: SimplicialMap, chain: AltChain) -> AltChain:
    """The induced map on the sign quotient."""
    out = AltChain(chain.degree)
    for t, c in chain.free.items():
        out._add_generator(f.apply(t), c)
    for t, c in chain.torsion.items():
        ft = tuple(sorted(f.apply(t)))
        out.torsion[ft] = out.torsion.get(ft, 0) + c
    out._prune()
    return out


def pull_back(f: SimplicialMap, alpha: Cochain) -> Cochain:
    """Precompose a codomain cochain with the map: value on g is the value
    on the image tuple of g.  Preserves the alternating property and
    commutes with the projector."""
    preimages = [[] for _ in range(f.codomain.vertex_count)]
    for v, w in enumerate(f.assignment):
        preimages[w].append(v)
    out = {}
    for h, val in alpha.values.items():
        for g in itertools.product(*(preimages[w] for w in h)):
            if f.domain.has_simplex(set(g)):
                out[g] = val
    return Cochain(alpha.degree, out)


@dataclass(frozen=True)
class CombinatorialHomotopy:
    """A contiguous pair of simplicial maps between the same complexes.

    Contiguity (joint images of each simplex span a simplex) is checked on
    facets at construction; subsets inherit it by downward closure.
    """

    start: SimplicialMap
    end: SimplicialMap

    def __post_init__(self):
        f, g = self.start, self.end
        if f.domain is not g.domain and f.domain != g.domain:
            raise ValueError("maps must share their domain")
        if f.codomain is not g.codomain and f.codomain != g.codomain:
            raise ValueError("maps must share their codomain")
        for facet in f.domain.facets:
            joint = {f(v) for v in facet} | {g(v) for v in facet}
            if not f.codomain.has_simplex(joint):
                raise ValueError(
                    f"maps are not contiguous on facet {sorted(facet)}")


def prism_generator(h: CombinatorialHomotopy, g: tuple) -> dict:
    """Prism of one generator: the signed sum over split positions of
    (start images of the head, end images of the tail)."""
    f_img = h.start.apply(g)
    g_img = h.end.apply(g)
    out: dict = {}
    for i in range(len(g)):
        t = f_img[:i + 1] + g_img[i:]
        out[t] = out.get(t, 0) + (-1) ** i
    return {t: c for t, c in out.items() if c}


def prism(h: CombinatorialHomotopy, chain: dict) -> dict:
    """Prism operator on ordered chains; one degree up.

    Satisfies boundary(prism) + prism(boundary) = end - start on chains.
    """
    out: dict = {}
    for g, c in chain.items():
        for t, v in prism_generator(h, g).items():
            out[t] = out.get(t, 0) + c * v
    return {t: c for t, c in out.items() if c}


def prism_alt(h: CombinatorialHomotopy, chain: AltChain) -> AltChain:
    """Prism on the sign quotient, generator by canonical generator.

    A torsion input must produce a pure torsion output (its class has
    order 2); the canonical sorted representative guarantees this because
    every slice of a tuple with an adjacent repeat keeps a repeat.
    """
    out = AltChain(chain.degree + 1)
    for t, c in chain.free.items():
        for u, v in prism_generator(h, t).items():
            out._add_generator(u, c * v)
    for t, c in chain.torsion.items():
        piece = AltChain.from_ordered(chain.degree + 1, prism_generator(h, t))
        if piece.free:
            raise ArithmeticError(
                f"prism of torsion class {t} produced free terms {piece.free}")
        for u, w in piece.torsion.items():
            out.torsion[u] = out.torsion.get(u, 0) + c * w
    out._prune()
    return out
