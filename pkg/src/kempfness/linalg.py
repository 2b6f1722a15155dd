"""Exact integer and rational linear algebra.

Matrices are numpy arrays of ``dtype=object`` holding Python ``int`` (or
``fractions.Fraction``) entries, so no arithmetic ever rounds. Every routine
accepts empty matrices (zero rows or zero columns).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "AbelianGroup",
    "CochainCohomology",
    "SnfFactorization",
    "as_integer_matrix",
    "as_rational_matrix",
    "cochain_cohomology",
    "cokernel_invariants",
    "determinant",
    "hermite_column_reduce",
    "identity",
    "kernel_basis",
    "lattice_membership",
    "nonnegative_solution",
    "rank",
    "smith_normal_form",
    "solve_integer",
    "solve_rational",
]


def as_integer_matrix(data, shape: Optional[tuple] = None) -> np.ndarray:
    """Coerce nested sequences to a 2-d object array of Python ints.

    ``shape`` is needed only to give an empty input a definite shape.
    """
    if isinstance(data, np.ndarray) and data.dtype == object and data.ndim == 2:
        arr = data.copy()
    else:
        arr = np.array(data, dtype=object)
        if arr.size == 0:
            arr = np.empty(shape if shape is not None else (0, 0), dtype=object)
    if arr.ndim == 1 and shape is None and arr.size:
        raise ValueError("expected a 2-d matrix, got a vector")
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer entry {x}")
            x = x.numerator
        if isinstance(x, (float, np.floating)) and not float(x).is_integer():
            raise ValueError(f"non-integer entry {x}")
        out[idx] = int(x)
    return out


def as_rational_matrix(data, shape: Optional[tuple] = None) -> np.ndarray:
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        arr = np.empty(shape if shape is not None else (0, 0), dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = Fraction(x)
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def _as_matrix(M) -> np.ndarray:
    if isinstance(M, np.ndarray) and M.ndim == 2 and M.dtype == object:
        return M.copy()
    return as_integer_matrix(M)


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group ``Z^free_rank + sum Z/t``.

    ``torsion`` is kept in invariant-factor form: every entry is at least 2
    and divides the next one.
    """

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t):
            raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_cyclic(cls, free_rank: int, orders: Sequence[int]) -> "AbelianGroup":
        """Build from an arbitrary list of cyclic orders (0 means Z, 1 is dropped)."""
        orders = [abs(int(x)) for x in orders]
        free_rank += sum(1 for x in orders if x == 0)
        finite = [x for x in orders if x > 1]
        if not finite:
            return cls(free_rank, ())
        diag = smith_normal_form(np.diag(np.array(finite, dtype=object))).diagonal
        return cls(free_rank, tuple(d for d in diag if d > 1))

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_cyclic(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, eq=False)
class SnfFactorization:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular.

    The inverses ``U_inv`` and ``V_inv`` are tracked alongside because
    callers need them for change of basis and numpy has no exact inverse.
    """

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray
    source_shape: tuple

    @property
    def diagonal(self) -> list:
        """Nonzero diagonal entries ``d_1 | d_2 | ...``."""
        k = min(self.D.shape)
        return [self.D[i, i] for i in range(k) if self.D[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(M) -> SnfFactorization:
    """Smith normal form by unimodular row and column operations.

    The pivot is always a nonzero entry of least absolute value in the
    remaining block, which keeps intermediate entries small in practice.
    """
    A = _as_matrix(M)
    r, c = A.shape
    D = A.copy()
    U, U_inv = identity(r), identity(r)
    V, V_inv = identity(c), identity(c)

    def swap_rows(i, j):
        if i != j:
            D[[i, j]] = D[[j, i]]
            U[[i, j]] = U[[j, i]]
            U_inv[:, [i, j]] = U_inv[:, [j, i]]

    def swap_cols(i, j):
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j]] = V_inv[[j, i]]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] += q * D[src]
        U[dst] += q * U[src]
        U_inv[:, src] -= q * U_inv[:, dst]

    def add_col(dst, src, q):
        D[:, dst] += q * D[:, src]
        V[:, dst] += q * V[:, src]
        V_inv[src] -= q * V_inv[dst]

    for t in range(min(r, c)):
        block = D[t:, t:]
        nz = [(abs(x), i, j) for (i, j), x in np.ndenumerate(block) if x != 0]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, t + i)
        swap_cols(t, t + j)
        while True:
            p = D[t, t]
            for i in range(t + 1, r):
                if D[i, t] != 0:
                    add_row(i, t, -(D[i, t] // p))
            for j in range(t + 1, c):
                if D[t, j] != 0:
                    add_col(j, t, -(D[t, j] // p))
            rest = [(abs(D[i, t]), i, t) for i in range(t + 1, r) if D[i, t] != 0]
            rest += [(abs(D[t, j]), t, j) for j in range(t + 1, c) if D[t, j] != 0]
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if D[i, j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
            U_inv[:, t] = -U_inv[:, t]
    return SnfFactorization(U, D, V, U_inv, V_inv, (r, c))


def rank(M) -> int:
    return smith_normal_form(M).rank


def determinant(M) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    A = as_rational_matrix(M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i, col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            det = -det
        det *= A[col, col]
        for i in range(col + 1, n):
            if A[i, col] != 0:
                A[i] -= (A[i, col] / A[col, col]) * A[col]
    return det


def cokernel_invariants(M) -> AbelianGroup:
    """``Z^rows / M Z^cols`` as free rank plus invariant factors."""
    A = _as_matrix(M)
    snf = smith_normal_form(A)
    diag = snf.diagonal
    return AbelianGroup(A.shape[0] - len(diag), tuple(d for d in diag if d > 1))


def hermite_column_reduce(M):
    """Column-echelonize ``M`` by unimodular column operations.

    Returns ``(E, V, V_inv, r)`` with ``M @ V == E``; the first ``r`` columns
    of ``E`` are in echelon form and the remaining ones are zero.
    """
    E = _as_matrix(M)
    rows, cols = E.shape
    V, V_inv = identity(cols), identity(cols)
    piv_col = 0
    for i in range(rows):
        if piv_col >= cols:
            break
        while True:
            nz = [j for j in range(piv_col, cols) if E[i, j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(E[i, j]))
            if j != piv_col:
                E[:, [piv_col, j]] = E[:, [j, piv_col]]
                V[:, [piv_col, j]] = V[:, [j, piv_col]]
                V_inv[[piv_col, j]] = V_inv[[j, piv_col]]
            p = E[i, piv_col]
            done = True
            for j in range(piv_col + 1, cols):
                if E[i, j] != 0:
                    q = E[i, j] // p
                    E[:, j] -= q * E[:, piv_col]
                    V[:, j] -= q * V[:, piv_col]
                    V_inv[piv_col] += q * V_inv[j]
                    if E[i, j] != 0:
                        done = False
            if done:
                break
        if any(E[i, j] != 0 for j in range(piv_col, cols)):
            piv_col += 1
    return E, V, V_inv, piv_col


def kernel_basis(M) -> np.ndarray:
    """Columns form a Z-basis of ``{x : M x = 0}``.

    The basis is the tail of a unimodular transform, so the kernel lattice
    it spans is saturated.
    """
    _, V, _, r = hermite_column_reduce(M)
    K = V[:, r:]
    return _sparsify_columns(K)


def _sparsify_columns(K: np.ndarray) -> np.ndarray:
    # Echelonize the basis itself; same lattice, usually far sparser.
    if K.shape[1] == 0:
        return K
    E, _, _, _ = hermite_column_reduce(K)
    E = E[:, : K.shape[1]]
    for j in range(E.shape[1]):
        lead = next((E[i, j] for i in range(E.shape[0]) if E[i, j] != 0), 0)
        if lead < 0:
            E[:, j] = -E[:, j]
    return E


def solve_rational(M, b) -> Optional[np.ndarray]:
    """One exact solution of ``M x = b`` over Q, or ``None`` if inconsistent."""
    A = as_rational_matrix(M)
    rows, cols = A.shape
    rhs = np.array([Fraction(x) for x in b], dtype=object)
    if rhs.shape[0] != rows:
        raise ValueError("dimension mismatch")
    aug = np.empty((rows, cols + 1), dtype=object)
    aug[:, :cols] = A
    aug[:, cols] = rhs
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if aug[i, col] != 0), None)
        if piv is None:
            continue
        aug[[r, piv]] = aug[[piv, r]]
        aug[r] = aug[r] / aug[r, col]
        for i in range(rows):
            if i != r and aug[i, col] != 0:
                aug[i] -= aug[i, col] * aug[r]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    if any(aug[i, cols] != 0 for i in range(r, rows)):
        return None
    x = np.array([Fraction(0)] * cols, dtype=object)
    for i, col in enumerate(pivots):
        x[col] = aug[i, cols]
    return x


def solve_integer(M, v) -> Optional[np.ndarray]:
    """One integer solution of ``M x = v``, or ``None``."""
    A = _as_matrix(M)
    rows, cols = A.shape
    vec = np.array([int(x) for x in v], dtype=object)
    if vec.shape[0] != rows:
        raise ValueError("dimension mismatch")
    snf = smith_normal_form(A)
    w = snf.U.dot(vec) if rows else vec
    diag = snf.diagonal
    y = np.zeros(cols, dtype=object)
    for i, d in enumerate(diag):
        if w[i] % d:
            return None
        y[i] = w[i] // d
    if any(w[i] != 0 for i in range(len(diag), rows)):
        return None
    return snf.V.dot(y) if cols else y


def lattice_membership(v, generators) -> bool:
    """True iff ``v`` is an integer combination of the generator columns."""
    if isinstance(generators, np.ndarray) and generators.ndim == 2:
        G = generators
    elif len(generators) == 0:
        G = _zeros(len(v), 0)
    else:
        G = as_integer_matrix(generators)
    if G.shape[0] != len(v):
        raise ValueError("vector length must equal generator row count")
    if all(x == 0 for x in v):
        return True
    return solve_integer(G, v) is not None


def nonnegative_solution(A, b) -> Optional[np.ndarray]:
    """Exact feasibility for ``A x = b, x >= 0``.

    Phase one of the simplex method over ``Fraction`` with Bland's rule.
    Returns a feasible ``x`` or ``None``.
    """
    A = as_rational_matrix(A)
    rows, cols = A.shape
    b = np.array([Fraction(x) for x in b], dtype=object)
    for i in range(rows):
        if b[i] < 0:
            A[i] = -A[i]
            b[i] = -b[i]
    # tableau: [A | I | b], artificial basis
    T = np.empty((rows, cols + rows + 1), dtype=object)
    T[:, :cols] = A
    T[:, cols : cols + rows] = as_rational_matrix(identity(rows)) if rows else T[:, cols:cols]
    T[:, -1] = b
    basis = list(range(cols, cols + rows))
    n_var = cols + rows

    def reduced_costs():
        # minimize the sum of artificials
        cost = np.array([Fraction(0)] * cols + [Fraction(1)] * rows, dtype=object)
        cb = np.array([cost[j] for j in basis], dtype=object)
        z = cb.dot(T[:, :n_var]) if rows else np.zeros(n_var, dtype=object)
        return cost - z

    while True:
        rc = reduced_costs()
        enter = next((j for j in range(n_var) if rc[j] < 0), None)
        if enter is None:
            break
        ratios = [
            (T[i, -1] / T[i, enter], basis[i], i)
            for i in range(rows)
            if T[i, enter] > 0
        ]
        if not ratios:
            break
        _, _, leave = min(ratios)
        T[leave] = T[leave] / T[leave, enter]
        for i in range(rows):
            if i != leave and T[i, enter] != 0:
                T[i] -= T[i, enter] * T[leave]
        basis[leave] = enter
    x = [Fraction(0)] * n_var
    for i, j in enumerate(basis):
        x[j] = T[i, -1]
    if any(x[j] != 0 for j in range(cols, n_var)):
        return None
    return np.array(x[:cols], dtype=object)


@dataclass(eq=False)
class CochainCohomology:
    """Cohomology at the middle of ``C_prev --d_in--> C --d_out--> C_next``.

    Holds enough data to decide whether a cocycle is a coboundary and to
    express any cocycle in a fixed generating set of the group.
    """

    dim: int
    group: AbelianGroup
    cocycle_basis: np.ndarray  # dim x z
    generators: list  # integer vectors of length dim
    orders: list  # 0 for free generators, else the torsion order
    _coord_map: np.ndarray = field(repr=False)  # rows map cocycles to generator coords
    d_out: np.ndarray = field(repr=False)
    d_in: np.ndarray = field(repr=False)

    def is_cocycle(self, x) -> bool:
        if self.d_out.shape[0] == 0:
            return True
        return not any(self.d_out.dot(np.array(x, dtype=object)))

    def coordinates(self, x) -> tuple:
        """Coordinates of cocycle ``x`` in ``generators``; torsion parts reduced."""
        if not self.is_cocycle(x):
            raise ValueError("not a cocycle")
        vec = np.array([int(t) for t in x], dtype=object)
        c = self._coord_map.dot(vec) if len(self.generators) else []
        return tuple(
            int(ci % o) if o else int(ci) for ci, o in zip(c, self.orders)
        )

    def represent(self, coords) -> np.ndarray:
        out = np.zeros(self.dim, dtype=object)
        for ci, g in zip(coords, self.generators):
            if ci:
                out = out + ci * np.array(g, dtype=object)
        return out

    def is_coboundary(self, x) -> bool:
        return not any(self.coordinates(x))

    def preimage(self, x) -> Optional[np.ndarray]:
        """Integer ``y`` with ``d_in y == x``, if one exists."""
        if self.d_in.shape[1] == 0:
            return np.zeros(0, dtype=object) if not any(x) else None
        return solve_integer(self.d_in, x)


def cochain_cohomology(d_in, d_out, dim: int, preferred=None) -> CochainCohomology:
    """Cohomology ``ker d_out / im d_in`` with explicit generators.

    ``preferred`` is an optional sequence of candidate cocycles (e.g. sparse
    ones); when the group is torsion-free, generators are drawn from it
    greedily as long as they extend to a basis.
    """
    d_in = _zeros(dim, 0) if d_in is None else _as_matrix(d_in)
    d_out = _zeros(0, dim) if d_out is None else _as_matrix(d_out)
    if d_in.shape[0] != dim or d_out.shape[1] != dim:
        raise ValueError("differentials do not match the cochain dimension")
    _, V, V_inv, r = hermite_column_reduce(d_out)
    Zb = V[:, r:]
    to_z = V_inv[r:, :]  # cocycle x -> coordinates in Zb
    z = Zb.shape[1]
    Y = to_z.dot(d_in) if z and d_in.shape[1] else _zeros(z, d_in.shape[1])
    snf = smith_normal_form(Y)
    diag = snf.diagonal
    new_basis = Zb.dot(snf.U_inv) if z else Zb
    gens, orders, rows = [], [], []
    for i in range(z):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        gens.append(new_basis[:, i])
        orders.append(d)
        rows.append(i)
    coord_map = snf.U[rows, :].dot(to_z) if rows else _zeros(0, dim)
    group = AbelianGroup.from_cyclic(0, orders)
    cc = CochainCohomology(dim, group, Zb, gens, orders, coord_map, d_out, d_in)
    if preferred is not None and gens and not group.torsion:
        _prefer_generators(cc, preferred)
    return cc


def _prefer_generators(cc: CochainCohomology, candidates) -> None:
    """Swap in simpler generators for a free group, keeping a basis."""
    r = len(cc.generators)
    chosen = []
    chosen_coords = []
    for cand in candidates:
        if len(chosen) == r:
            break
        if not cc.is_cocycle(cand):
            continue
        coords = list(cc.coordinates(cand))
        trial = chosen_coords + [coords]
        M = np.array(trial, dtype=object).T
        snf = smith_normal_form(M)
        if snf.rank == len(trial) and all(d == 1 for d in snf.diagonal):
            chosen.append(np.array([int(t) for t in cand], dtype=object))
            chosen_coords.append(coords)
    if len(chosen) < r:
        # extend the saturated span to a basis of Z^r
        M = np.array(chosen_coords, dtype=object).T if chosen_coords else _zeros(r, 0)
        snf = smith_normal_form(M)
        for k in range(len(chosen), r):
            coords = snf.U_inv[:, k]
            chosen_coords.append(list(coords))
            chosen.append(cc.represent(coords))
    N = np.array(chosen_coords, dtype=object).T  # r x r, unimodular
    N_inv = _unimodular_inverse(N)
    cc._coord_map = N_inv.dot(cc._coord_map)
    cc.generators = chosen


def _unimodular_inverse(N: np.ndarray) -> np.ndarray:
    snf = smith_normal_form(N)
    if snf.rank != N.shape[0] or any(d != 1 for d in snf.diagonal):
        raise ValueError("matrix is not unimodular")
    # U N V = I  =>  N^-1 = V U
    return snf.V.dot(snf.U)


def primitive(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(x) // g for x in v)
