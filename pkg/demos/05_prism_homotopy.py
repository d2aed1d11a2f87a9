# The prism operator: contiguous maps induce the same homology maps.
#
# Two simplicial maps are contiguous when the joint images of every
# simplex span a simplex.  The prism operator P interpolates between them
# one split position at a time and satisfies
#
#     boundary(P(c)) + P(boundary(c)) = end(c) - start(c)
#
# exactly, on ordered chains and on the sign quotient, so contiguous maps
# agree on homology.

from altchain import (AltChain, CombinatorialHomotopy, SimplicialMap,
                      boundary, enumerate_generators, ordered_boundary,
                      prism, prism_alt, push_forward)
from altchain.complex_model import SimplicialComplex
from altchain.corpus import load_corpus_complex

print("Cone contraction of the solid triangle (constant map vs identity):")
tri = SimplicialComplex.from_facets(3, [[0, 1, 2]])
h = CombinatorialHomotopy(SimplicialMap.constant(tri, tri, 0),
                          SimplicialMap.identity(tri))
for g in [(1,), (1, 2)]:
    P = prism(h, {g: 1})
    lhs = ordered_boundary(P)
    if len(g) > 1:
        for t, c in prism(h, ordered_boundary({g: 1})).items():
            lhs[t] = lhs.get(t, 0) + c
    lhs = {t: c for t, c in lhs.items() if c}
    print(f"  P({g}) = {P}")
    print(f"    boundary(P) + P(boundary) = {lhs}")
    print(f"    end - start               = "
          f"{push_forward(h.end, {g: 1})} - {push_forward(h.start, {g: 1})}")

print()
print("A nontrivial contiguous pair into the torus: walk a segment across")
print("one triangle, sending (0,1) to (p,q) and to (q,r).")
torus = load_corpus_complex("torus_7")
seg = SimplicialComplex.from_facets(2, [[0, 1]])
p, q, r = torus.simplices_of_dim(2)[0]
f = SimplicialMap(seg, torus, (p, q))
g = SimplicialMap(seg, torus, (q, r))
walk = CombinatorialHomotopy(f, g)
index = enumerate_generators(seg, 2)
bad = 0
for n in range(2):
    for gen in index.generators(n):
        chain = {gen: 1}
        lhs = ordered_boundary(prism(walk, chain))
        if n:
            for t, c in prism(walk, ordered_boundary(chain)).items():
                lhs[t] = lhs.get(t, 0) + c
        lhs = {t: c for t, c in lhs.items() if c}
        rhs = push_forward(g, chain)
        for t, c in push_forward(f, chain).items():
            rhs[t] = rhs.get(t, 0) - c
        rhs = {t: c for t, c in rhs.items() if c}
        bad += lhs != rhs
print(f"  prism identity on every segment generator: "
      f"{'all exact' if bad == 0 else f'{bad} failures'}")

print()
print("The same identity holds on the sign quotient, torsion included:")
torsion = AltChain.from_generator((1, 1))
out = prism_alt(h, torsion)
print(f"  prism of the torsion class [(1,1)] under the cone: {out}")
check = boundary(prism_alt(h, torsion)) + prism_alt(h, boundary(torsion))
target = AltChain.from_generator((1, 1)) - AltChain.from_generator((0, 0))
print(f"  boundary(P) + P(boundary) = {check}")
print(f"  end - start               = {target}")
assert check == target
