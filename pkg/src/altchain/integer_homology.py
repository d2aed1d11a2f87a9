"""Exact integer and rational linear algebra for homology computation.

Everything here is arbitrary-precision: Smith normal form by classical
row/column reduction with minimal-absolute-value pivoting, sparse
diagonalization for the large boundary matrices of tuple complexes, and
homology of both free chain complexes and complexes presented with
order-2 generator relations.

Matrix conventions: a boundary matrix for degree n has one column per
degree-n generator and one row per degree-(n-1) generator; composition
"later degree after earlier" is the matrix product of the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .complex_model import GeneratorIndex, SimplicialComplex, face
from .errors import FormatError

MATRIX_FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse exact integer matrix: only nonzero entries are stored."""

    rows: int
    cols: int
    entries: dict = field(repr=False)  # (row, col) -> nonzero int

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for r, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = int(v)
        return cls(rows, cols, entries)

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             {(c, r): v for (r, c), v in self.entries.items()})

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + v * w
        return IntegerMatrix(self.rows, other.cols,
                             {k: v for k, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    def column(self, j: int) -> list:
        col = [0] * self.rows
        for (r, c), v in self.entries.items():
            if c == j:
                col[r] = v
        return col


def matrix_to_json(M: IntegerMatrix) -> dict:
    """Serialize as dimensions plus row-major entries as decimal strings."""
    dense = M.to_dense()
    return {
        "format_version": MATRIX_FORMAT_VERSION,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [str(v) for row in dense for v in row],
    }


def matrix_from_json(data: dict) -> IntegerMatrix:
    for key in ("rows", "cols", "entries"):
        if key not in data:
            raise FormatError(f"matrix object missing '{key}'")
    rows, cols = int(data["rows"]), int(data["cols"])
    flat = data["entries"]
    if len(flat) != rows * cols:
        raise FormatError("matrix entry count does not match dimensions")
    entries = {}
    for k, s in enumerate(flat):
        try:
            v = int(s)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad matrix entry {s!r}") from exc
        if v:
            entries[(k // cols, k % cols)] = v
    return IntegerMatrix(rows, cols, entries)


def _identity(k: int) -> list:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def dense_matmul(A: list, B: list) -> list:
    if not A:
        return []
    nb = len(B[0]) if B else 0
    out = [[0] * nb for _ in range(len(A))]
    for i, row in enumerate(A):
        acc = out[i]
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] += a * brow[j]
    return out


def hstack(A: list, B: list) -> list:
    if not A and not B:
        return []
    if not A:
        return [row[:] for row in B]
    if not B:
        return [row[:] for row in A]
    if len(A) != len(B):
        raise ValueError("row count mismatch")
    return [ra + rb for ra, rb in zip(A, B)]


# ---------------------------------------------------------------------------
# Smith normal form (dense, with transforms)

@dataclass(frozen=True)
class SNFResult:
    """Factorization M = U @ diag @ V with U, V unimodular.

    ``diagonal`` holds the invariant factors d_1 | d_2 | ... padded with
    zeros up to min(rows, cols).  ``u_inv`` and ``v_inv`` are maintained
    alongside so kernels and integer solves need no extra inversions.
    """

    rows: int
    cols: int
    diagonal: tuple
    u: list = field(repr=False)
    u_inv: list = field(repr=False)
    v: list = field(repr=False)
    v_inv: list = field(repr=False)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> tuple:
        return tuple(d for d in self.diagonal if d)

    def kernel_basis(self) -> list:
        """Columns spanning the integer kernel (each a length-``cols`` vector)."""
        r = self.rank
        return [[self.v_inv[i][j] for i in range(self.cols)]
                for j in range(r, self.cols)]

    def image_basis(self) -> list:
        """Columns spanning the integer image (each a length-``rows`` vector)."""
        out = []
        for i, d in enumerate(self.diagonal):
            if d:
                out.append([d * self.u[r][i] for r in range(self.rows)])
        return out

    def solve(self, b: list):
        """An integer x with M x = b, or None when none exists."""
        if len(b) != self.rows:
            raise ValueError("length mismatch")
        ub = [sum(self.u_inv[i][k] * b[k] for k in range(self.rows))
              for i in range(self.rows)]
        y = [0] * self.cols
        for i in range(self.rows):
            d = self.diagonal[i] if i < len(self.diagonal) else 0
            if d:
                if ub[i] % d:
                    return None
                y[i] = ub[i] // d
            elif ub[i]:
                return None
        return [sum(self.v_inv[i][k] * y[k] for k in range(self.cols))
                for i in range(self.cols)]


def _nearest_quotient(a: int, d: int) -> int:
    # quotient minimizing |a - q*d|; keeps reduction residues at half the
    # pivot and avoids the coefficient blowup of plain floor division
    q = a // d
    r = a - q * d
    if 2 * abs(r) > abs(d):
        q += 1  # the floor remainder shares d's sign, so +1 always shrinks
    return q


def smith_normal_form(M) -> SNFResult:
    """Diagonalize over Z by elementary row/column operations.

    Pivots are chosen with minimal absolute value and reduced with
    round-to-nearest quotients, so each clearing pass at least halves the
    pivot; the divisibility chain is enforced during the sweep and the
    diagonal comes out canonical.
    """
    if isinstance(M, IntegerMatrix):
        D = M.to_dense()
        m, n = M.rows, M.cols
    else:
        D = [list(map(int, row)) for row in M]
        m = len(D)
        n = len(D[0]) if m else 0
    U = _identity(m)
    Uinv = _identity(m)
    V = _identity(n)
    Vinv = _identity(n)

    def swap_rows(a, b):
        if a == b:
            return
        D[a], D[b] = D[b], D[a]
        for r in U:
            r[a], r[b] = r[b], r[a]
        Uinv[a], Uinv[b] = Uinv[b], Uinv[a]

    def swap_cols(a, b):
        if a == b:
            return
        for row in D:
            row[a], row[b] = row[b], row[a]
        V[a], V[b] = V[b], V[a]
        for r in Vinv:
            r[a], r[b] = r[b], r[a]

    def row_add(dst, src, k):
        # D[dst] += k * D[src]
        Dd, Ds = D[dst], D[src]
        for j in range(n):
            if Ds[j]:
                Dd[j] += k * Ds[j]
        for r in U:
            r[src] -= k * r[dst]
        Ud, Us = Uinv[dst], Uinv[src]
        for j in range(m):
            if Us[j]:
                Ud[j] += k * Us[j]

    def col_add(dst, src, k):
        # D[:,dst] += k * D[:,src]
        for row in D:
            if row[src]:
                row[dst] += k * row[src]
        Vs, Vd = V[src], V[dst]
        for j in range(n):
            if Vd[j]:
                Vs[j] -= k * Vd[j]
        for r in Vinv:
            r[dst] += k * r[src]

    def negate_row(a):
        D[a] = [-v for v in D[a]]
        for r in U:
            r[a] = -r[a]
        Uinv[a] = [-v for v in Uinv[a]]

    t = 0
    limit = min(m, n)
    while t < limit:
        piv = None
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])

        while True:
            # one reduction pass: every residue ends at most half the pivot
            for i in range(t + 1, m):
                if D[i][t]:
                    q = _nearest_quotient(D[i][t], D[t][t])
                    if q:
                        row_add(i, t, -q)
            for j in range(t + 1, n):
                if D[t][j]:
                    q = _nearest_quotient(D[t][j], D[t][t])
                    if q:
                        col_add(j, t, -q)
            residue = None
            for i in range(t + 1, m):
                if D[i][t] and (residue is None or abs(D[i][t]) < residue[0]):
                    residue = (abs(D[i][t]), "row", i)
            for j in range(t + 1, n):
                if D[t][j] and (residue is None or abs(D[t][j]) < residue[0]):
                    residue = (abs(D[t][j]), "col", j)
            if residue is None:
                break
            if residue[1] == "row":
                swap_rows(t, residue[2])
            else:
                swap_cols(t, residue[2])

        # make the pivot divide the rest of the submatrix before moving on
        d = D[t][t]
        offender = None
        for i in range(t + 1, m):
            row = D[i]
            for j in range(t + 1, n):
                if row[j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        if d < 0:
            negate_row(t)
        t += 1

    diag = tuple(D[i][i] for i in range(limit))
    return SNFResult(rows=m, cols=n, diagonal=diag, u=U, u_inv=Uinv, v=V, v_inv=Vinv)


# ---------------------------------------------------------------------------
# sparse diagonalization (rank / invariant factors, no transforms)

def sparse_diagonalize(M: IntegerMatrix) -> list:
    """Diagonal entries of a diagonalization of M, unordered.

    Elementary integer row and column operations only, so the multiset of
    entries determines the invariant factors.  Suited to the large sparse
    boundary matrices; fill-in is kept down by pivoting on short columns.
    """
    rows: dict = {}
    cols: dict = {}
    for (r, c), v in M.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    diag = []
    while cols:
        pc = min(cols, key=lambda c: (len(cols[c]), c))
        pr = min(cols[pc], key=lambda r: (abs(rows[r][pc]), len(rows[r]), r))
        while True:
            pv = rows[pr][pc]
            # clear the pivot column with row operations
            switched = False
            for r in list(cols[pc]):
                if r == pr:
                    continue
                q = _nearest_quotient(rows[r][pc], pv)
                if q:
                    prow = rows[pr]
                    rrow = rows[r]
                    for c, v in prow.items():
                        nv = rrow.get(c, 0) - q * v
                        if nv:
                            rrow[c] = nv
                            cols[c].add(r)
                        else:
                            rrow.pop(c, None)
                            cols[c].discard(r)
                if rows.get(r, {}).get(pc):
                    # remainder is smaller than the pivot; adopt it
                    pr = r
                    switched = True
                    break
                if not rows.get(r):
                    rows.pop(r, None)
            if switched:
                continue
            pv = rows[pr][pc]
            # clear the pivot row with column operations
            switched = False
            for c in list(rows[pr]):
                if c == pc:
                    continue
                q = _nearest_quotient(rows[pr][c], pv)
                if q:
                    for r in list(cols[pc]):
                        nv = rows[r].get(c, 0) - q * rows[r][pc]
                        if nv:
                            rows[r][c] = nv
                            cols[c].add(r)
                        else:
                            rows[r].pop(c, None)
                            cols[c].discard(r)
                if rows[pr].get(c):
                    pc = c
                    switched = True
                    break
                if not cols.get(c):
                    cols.pop(c, None)
            if switched:
                continue
            break
        d = rows[pr][pc]
        diag.append(d)
        del rows[pr][pc]
        if not rows[pr]:
            del rows[pr]
        cols[pc].discard(pr)
        if not cols[pc]:
            del cols[pc]
        # the pivot row and column are singleton at this point, so nothing
        # else references them
    return diag


def canonical_invariant_factors(diagonal) -> tuple:
    """Divisibility chain determined by any unimodular diagonalization."""
    ds = sorted(abs(d) for d in diagonal if d)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
        if changed:
            ds.sort()
    return tuple(ds)


def integer_rank(M: IntegerMatrix) -> int:
    """Rank over Q (equivalently over Z) of an exact integer matrix."""
    return len(sparse_diagonalize(M))


def rational_rank(rows_of_fractions) -> int:
    """Rank of a dense matrix with Fraction or int entries, exactly."""
    rows = [list(row) for row in rows_of_fractions]
    entries = {}
    ncols = 0
    for r, row in enumerate(rows):
        ncols = max(ncols, len(row))
        scale = 1
        for v in row:
            if isinstance(v, Fraction):
                scale = scale * v.denominator // gcd(scale, v.denominator)
        for c, v in enumerate(row):
            iv = int(v * scale)
            if iv:
                entries[(r, c)] = iv
    return integer_rank(IntegerMatrix(len(rows), ncols, entries))


# ---------------------------------------------------------------------------
# abelian groups and homology

@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in canonical form."""

    free_rank: int
    torsion: tuple = ()

    @classmethod
    def canonical(cls, free_rank: int, torsion) -> "AbelianGroup":
        chain = canonical_invariant_factors(torsion)
        return cls(free_rank, tuple(d for d in chain if d > 1))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology_free(dims: Sequence[int], boundaries: Sequence[IntegerMatrix]) -> list:
    """Homology of a free chain complex given as boundary matrices.

    ``dims[n]`` is the rank of the degree-n chain group for n = 0..D and
    ``boundaries[n]`` (for n = 1..D) maps degree n to degree n-1.  Groups
    are returned for degrees 0..D-1; the top degree would need the absent
    degree-(D+1) matrix.
    """
    D = len(dims) - 1
    for n in range(1, D + 1):
        M = boundaries[n]
        if M.rows != dims[n - 1] or M.cols != dims[n]:
            raise ValueError(f"boundary matrix {n} has wrong shape")
    for n in range(1, D):
        if not boundaries[n].matmul(boundaries[n + 1]).is_zero():
            raise ValueError(f"boundary composition at degree {n + 1} is not zero")

    diags = {n: sparse_diagonalize(boundaries[n]) for n in range(1, D + 1)}
    groups = []
    for n in range(D):
        rank_n = len(diags[n]) if n >= 1 else 0
        nullity = dims[n] - rank_n
        rank_next = len(diags[n + 1])
        torsion = canonical_invariant_factors(diags[n + 1])
        groups.append(AbelianGroup.canonical(nullity - rank_next, torsion))
    return groups


def homology_presented(pres) -> list:
    """Homology of a complex whose chain groups carry order-2 relations.

    ``pres`` provides ``max_degree``, ``generator_count(n)``,
    ``boundary_matrix(n)`` (dense, degree n -> n-1 on the combined
    generator list) and ``relation_matrix(n)`` (columns spanning the
    relation subgroup).  Degree-n cycles are the x with boundary(x) in the
    span of the degree-(n-1) relations; boundaries and relations are then
    quotiented out inside the cycle lattice.
    """
    D = pres.max_degree
    groups = []
    for n in range(D):
        g_n = pres.generator_count(n)
        if n == 0:
            cycle_basis = [[1 if i == j else 0 for j in range(g_n)]
                           for i in range(g_n)]
        else:
            stacked = hstack(pres.boundary_matrix(n), pres.relation_matrix(n - 1))
            if not stacked:
                stacked = [[0] * g_n for _ in range(max(1, pres.generator_count(n - 1)))]
            snf = smith_normal_form(stacked)
            raw = [vec[:g_n] for vec in snf.kernel_basis()]
            # projections of kernel vectors generate the cycle group but may
            # be dependent; extract a lattice basis
            if raw:
                gen_matrix = [[vec[i] for vec in raw] for i in range(g_n)]
                snf2 = smith_normal_form(gen_matrix)
                cycle_basis = snf2.image_basis()
            else:
                cycle_basis = []
        r = len(cycle_basis)
        killers = []
        bmat = pres.boundary_matrix(n + 1)
        if bmat and bmat[0]:
            for j in range(len(bmat[0])):
                killers.append([bmat[i][j] for i in range(g_n)])
        rmat = pres.relation_matrix(n)
        if rmat and rmat[0]:
            for j in range(len(rmat[0])):
                killers.append([rmat[i][j] for i in range(g_n)])

        if r == 0:
            if any(any(w) for w in killers):
                raise ValueError(
                    f"degree {n}: a boundary or relation is not a cycle; "
                    "the presented complex is inconsistent")
            groups.append(AbelianGroup(0))
            continue
        basis_matrix = [[cycle_basis[j][i] for j in range(r)] for i in range(g_n)]
        basis_snf = smith_normal_form(basis_matrix)

        coords = []
        for w in killers:
            z = basis_snf.solve(w)
            if z is None:
                raise ValueError(
                    f"degree {n}: a boundary or relation is not a cycle; "
                    "the presented complex is inconsistent")
            coords.append(z[:r])
        if coords:
            killer_matrix = [[coords[j][i] for j in range(len(coords))]
                             for i in range(r)]
            ksnf = smith_normal_form(killer_matrix)
            groups.append(AbelianGroup.canonical(r - ksnf.rank,
                                                 ksnf.invariant_factors))
        else:
            groups.append(AbelianGroup(r))
    return groups


def cohomology_rational(dims: Sequence[int], deltas: Sequence[IntegerMatrix]) -> list:
    """Betti numbers of a cochain complex given by coboundary matrices.

    ``deltas[n]`` maps degree n to degree n+1, for n = 0..D-1.  Ranks are
    returned for degrees 0..D-1.
    """
    D = len(dims) - 1
    for n in range(D):
        M = deltas[n]
        if M.rows != dims[n + 1] or M.cols != dims[n]:
            raise ValueError(f"coboundary matrix {n} has wrong shape")
    for n in range(D - 1):
        if not deltas[n + 1].matmul(deltas[n]).is_zero():
            raise ValueError(f"coboundary composition at degree {n} is not zero")
    ranks = {n: integer_rank(deltas[n]) for n in range(D)}
    out = []
    for n in range(D):
        z = dims[n] - ranks[n]
        b = ranks[n - 1] if n >= 1 else 0
        out.append(z - b)
    return out


# ---------------------------------------------------------------------------
# matrices of the standard complexes

def ordered_boundary_matrix(index: GeneratorIndex, n: int) -> IntegerMatrix:
    """Boundary matrix of the full tuple complex, degree n -> n-1."""
    if n < 1:
        raise ValueError("boundary matrices start at degree 1")
    gens = index.generators(n)
    entries: dict = {}
    for j, g in enumerate(gens):
        for i in range(len(g)):
            r = index.position(face(g, i))
            key = (r, j)
            v = entries.get(key, 0) + (-1) ** i
            if v:
                entries[key] = v
            else:
                entries.pop(key, None)
    return IntegerMatrix(index.count(n - 1), index.count(n), entries)


def simplicial_boundary_matrix(K: SimplicialComplex, n: int) -> IntegerMatrix:
    """Classical simplicial boundary matrix on sorted simplices."""
    if n < 1:
        raise ValueError("boundary matrices start at degree 1")
    rows = {s: i for i, s in enumerate(K.simplices_of_dim(n - 1))}
    cols = K.simplices_of_dim(n)
    entries = {}
    for j, s in enumerate(cols):
        for i in range(len(s)):
            entries[(rows[s[:i] + s[i + 1:]], j)] = (-1) ** i
    return IntegerMatrix(len(rows), len(cols), entries)


def simplicial_homology(K: SimplicialComplex) -> list:
    """Simplicial homology of the complex in all degrees 0..dim."""
    top = K.dimension()
    dims = [len(K.simplices_of_dim(n)) for n in range(top + 2)]
    boundaries: list = [None]
    for n in range(1, top + 2):
        if dims[n] == 0:
            boundaries.append(IntegerMatrix(dims[n - 1], 0, {}))
        else:
            boundaries.append(simplicial_boundary_matrix(K, n))
    return homology_free(dims, boundaries)


def ordered_homology(index: GeneratorIndex) -> list:
    """Homology of the full tuple complex for degrees 0..max_degree-1."""
    D = index.max_degree
    dims = [index.count(n) for n in range(D + 1)]
    boundaries: list = [None]
    for n in range(1, D + 1):
        boundaries.append(ordered_boundary_matrix(index, n))
    return homology_free(dims, boundaries)


# ---------------------------------------------------------------------------
# cohomology splitting report

@dataclass(frozen=True)
class SplittingReport:
    """Rank bookkeeping for the projector acting on degree-n cohomology."""

    degree: int
    rank_full: int
    rank_alternating: int
    commutes_on_basis: bool
    kernel_rank: int

    @property
    def induced_isomorphism(self) -> bool:
        return self.kernel_rank == 0 and self.commutes_on_basis


def verify_cohomology_splitting(index: GeneratorIndex, n: int) -> SplittingReport:
    """Check that the projector splits degree-n rational cohomology.

    The projector commutes with the coboundary (verified exactly on every
    basis cochain of degrees n-1 and n), hence maps cocycles to cocycles
    and coboundaries to coboundaries; the induced map on cohomology is
    onto the alternating part, so its kernel rank is the difference of the
    two Betti numbers.
    """
    from . import cochain_algebra as ca

    if n + 1 > index.max_degree:
        raise ValueError(f"need generators of degree {n + 1}")

    commutes = True
    degrees = [n] if n == 0 else [n - 1, n]
    for deg in degrees:
        for g in index.generators(deg):
            alpha = ca.Cochain(deg, {g: Fraction(1)})
            if ca.coboundary(index, ca.alternative_maker(alpha)) != \
                    ca.alternative_maker(ca.coboundary(index, alpha)):
                commutes = False
                break
        if not commutes:
            break

    dims = [index.count(k) for k in range(n + 2)]
    deltas = [ca.coboundary_matrix(index, k) for k in range(n + 1)]
    full = cohomology_rational(dims, deltas)[n]

    alt_dims = [len(index.complex.simplices_of_dim(k)) for k in range(n + 2)]
    alt_deltas = [ca.alt_coboundary_matrix(index, k) for k in range(n + 1)]
    alt = cohomology_rational(alt_dims, alt_deltas)[n]

    return SplittingReport(degree=n, rank_full=full, rank_alternating=alt,
                           commutes_on_basis=commutes, kernel_rank=full - alt)
