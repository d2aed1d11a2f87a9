# Integer homology three ways, plus the rational cohomology splitting.
#
# Every corpus complex is pushed through three independent pipelines:
# classical simplicial chains, the full ordered-tuple complex, and the
# sign-quotient complex with its Z/2 relations (via stacked Smith normal
# forms).  All three agree, which is the computational content of the
# equivalence between the quotient theory and the standard one.

import time

from altchain import (alt_chain_complex, enumerate_generators,
                      homology_presented, ordered_homology,
                      simplicial_homology, verify_cohomology_splitting)
from altchain.corpus import load_corpus

print(f"{'complex':10s}  {'simplicial':22s}{'ordered tuples':22s}"
      f"{'sign quotient':22s}")
start = time.perf_counter()
for name, K in load_corpus():
    index = enumerate_generators(K, 3)
    simp = ", ".join(str(g) for g in simplicial_homology(K)[:3])
    ordered = ", ".join(str(g) for g in ordered_homology(index))
    quotient = ", ".join(str(g) for g in
                         homology_presented(alt_chain_complex(K, 3)))
    print(f"{name:10s}  {simp:22s}{ordered:22s}{quotient:22s}")
print(f"(all three pipelines, degree cap 3: {time.perf_counter() - start:.2f}s)")

print()
print("Rational cohomology: the projector identifies the alternating")
print("subcomplex's cohomology with the full one, degree by degree.")
print(f"{'complex':10s}  degree  full rank  alternating rank  kernel")
for name, K in load_corpus():
    index = enumerate_generators(K, 3)
    for n in range(3):
        r = verify_cohomology_splitting(index, n)
        print(f"{name:10s}  {n:^6d}  {r.rank_full:^9d}  "
              f"{r.rank_alternating:^16d}  {r.kernel_rank:^6d}")
