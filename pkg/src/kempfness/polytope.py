"""Simple polytopes ``{x : <a_i, x> + b_i >= 0}`` and their quadric models.

All combinatorics (vertices, incidences, normal fan, the cokernel matrix)
is exact. Floating point appears only when sampling points on the
intersection of quadrics and testing its Jacobian.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .fan import Fan, validate_fan
from .simplicial import SimplicialComplex

RESIDUAL_TOL = 1e-9
SINGULAR_VALUE_TOL = 1e-7


class PolytopeError(ValueError):
    pass


class Unbounded(PolytopeError):
    pass


class NotFullDimensional(PolytopeError):
    pass


class EmptyPolytope(PolytopeError):
    pass


class RedundantInequality(PolytopeError):
    def __init__(self, index: int):
        super().__init__(f"inequality {index} is redundant")
        self.index = index


class NotSimple(PolytopeError):
    pass


@dataclass(frozen=True)
class Vertex:
    point: tuple  # of Fraction
    facets: frozenset  # 1-based indices of the inequalities that are tight


@dataclass(frozen=True, eq=False)
class HPolytope:
    """Validated H-representation. Build with :func:`from_inequalities`."""

    n: int
    A: np.ndarray
    b: tuple
    vertex_list: tuple = field(repr=False)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    def evaluate(self, x) -> list:
        """The affine embedding ``x -> A x + b`` into ``R^m``."""
        return [sum(self.A[i, j] * x[j] for j in range(self.n)) + self.b[i] for i in range(self.m)]

    def to_json(self) -> dict:
        return {"n": self.n, "A": [[int(v) for v in row] for row in self.A], "b": list(self.b)}

    @classmethod
    def from_json(cls, data) -> "HPolytope":
        if isinstance(data, str):
            data = json.loads(data)
        return from_inequalities(int(data["n"]), data["A"], data["b"])


def _enumerate_vertices(n: int, A: np.ndarray, b: Sequence[int]) -> list:
    m = A.shape[0]
    found = {}
    for S in combinations(range(m), n):
        sub = linalg.as_rational_matrix(A[list(S), :])
        if linalg.determinant(sub) == 0:
            continue
        x = linalg.solve_rational(sub, [-b[i] for i in S])
        vals = [sum(A[i, j] * x[j] for j in range(n)) + b[i] for i in range(m)]
        if any(v < 0 for v in vals):
            continue
        key = tuple(x)
        if key not in found:
            found[key] = frozenset(i + 1 for i, v in enumerate(vals) if v == 0)
    return [Vertex(p, f) for p, f in sorted(found.items())]


def _rank_q(rows) -> int:
    if not rows:
        return 0
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, Fraction(x).denominator)
    M = linalg.as_integer_matrix([[Fraction(x) * den for x in r] for r in rows])
    return linalg.rank(M)


def from_inequalities(n: int, A, b) -> HPolytope:
    """Validate ``<a_i, x> + b_i >= 0`` and cache the vertices.

    Raises:
        Unbounded, EmptyPolytope, NotFullDimensional, RedundantInequality:
            the corresponding geometric condition fails.
        PolytopeError: malformed input or a non-primitive normal.
    """
    A = linalg.as_integer_matrix(A, shape=(len(A), n) if len(A) == 0 else None)
    b = tuple(int(x) for x in b)
    m = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n or len(b) != m:
        raise PolytopeError("A must be m x n and b of length m")
    if m < n + 1:
        raise Unbounded(f"{m} inequalities cannot bound a polytope in dimension {n}")
    for i in range(m):
        row = tuple(A[i])
        if not any(row):
            raise PolytopeError(f"inequality {i + 1} has a zero normal")
        if linalg.primitive(row) != row:
            raise PolytopeError(f"normal {i + 1} is not primitive")
    # bounded iff the normals positively span: A^T lam = 0 with lam >= 1
    if linalg.rank(A) < n:
        raise Unbounded("normals do not span")
    At = A.T.copy()
    rhs = [-sum(At[j]) for j in range(n)]
    if linalg.nonnegative_solution(At, rhs) is None:
        raise Unbounded("the recession cone is nontrivial")
    verts = _enumerate_vertices(n, A, b)
    if not verts:
        raise EmptyPolytope("no point satisfies all inequalities")
    points = [v.point for v in verts]
    if _rank_q([[p[j] - points[0][j] for j in range(n)] for p in points[1:]]) < n:
        raise NotFullDimensional("the vertices span a proper affine subspace")
    contact = {}
    for i in range(1, m + 1):
        on = [v.point for v in verts if i in v.facets]
        rk = _rank_q([[p[j] - on[0][j] for j in range(n)] for p in on[1:]]) if on else -1
        if rk != n - 1:
            raise RedundantInequality(i)
        key = frozenset(v.point for v in verts if i in v.facets)
        if key in contact:
            raise RedundantInequality(i)
        contact[key] = i
    return HPolytope(n, A, b, tuple(verts))


def vertices(P: HPolytope) -> list:
    return list(P.vertex_list)


def is_simple(P: HPolytope) -> bool:
    return all(len(v.facets) == P.n for v in P.vertex_list)


def _require_simple(P: HPolytope) -> None:
    if not is_simple(P):
        raise NotSimple("some vertex lies on more than n facets")


def normal_fan(P: HPolytope) -> Fan:
    """Fan spanned by the facet normals, one maximal cone per vertex."""
    _require_simple(P)
    cones = sorted(tuple(sorted(v.facets)) for v in P.vertex_list)
    return validate_fan(P.n, [tuple(r) for r in P.A], cones)


def facet_nerve(P: HPolytope) -> SimplicialComplex:
    """Facet sets with a common point; for simple ``P`` the vertex sets generate it."""
    _require_simple(P)
    return SimplicialComplex.from_maximal_faces(P.m, [sorted(v.facets) for v in P.vertex_list])


@dataclass(frozen=True, eq=False)
class QuadricSystem:
    """``sum_k c_jk (|z_k|^2 - b_k) = 0`` for each row ``j`` of ``C``.

    ``C`` has its columns in the facet order ``permutation`` (1-based
    labels of the original inequalities): the first ``n`` of them meet at a
    vertex and the last ``m - n`` columns form an identity block. ``b`` is in
    the original order.
    """

    C: np.ndarray
    b: tuple
    permutation: tuple
    n: int

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def C_original(self) -> np.ndarray:
        """``C`` with columns put back in the original facet order."""
        out = np.zeros_like(self.C)
        for k, label in enumerate(self.permutation):
            out[:, label - 1] = self.C[:, k]
        return out

    def rows(self) -> list:
        """Each equation as ``[(facet label, coefficient), ...]`` in column order."""
        return [
            [(self.permutation[k], int(self.C[j, k])) for k in range(self.m) if self.C[j, k] != 0]
            for j in range(self.C.shape[0])
        ]

    def constants(self) -> list:
        """``(C b)_j``; the right-hand sides of the equations."""
        Co = self.C_original
        return [int(sum(Co[j, k] * self.b[k] for k in range(self.m))) for j in range(Co.shape[0])]

    def residuals(self, z) -> np.ndarray:
        r = np.abs(np.asarray(z, dtype=complex)) ** 2 - np.asarray(self.b, dtype=float)
        return np.asarray(self.C_original, dtype=float) @ r

    def jacobian(self, z) -> np.ndarray:
        """``(m-n) x 2m`` real Jacobian in the coordinates ``(Re z_k, Im z_k)``."""
        z = np.asarray(z, dtype=complex)
        Co = np.asarray(self.C_original, dtype=float)
        J = np.empty((Co.shape[0], 2 * self.m))
        J[:, 0::2] = 2 * Co * z.real
        J[:, 1::2] = 2 * Co * z.imag
        return J

    def render(self) -> list:
        """Plain-text equations, e.g. ``|z_1|^2 + |z_4|^2 - 3 = 0``."""
        lines = []
        for row, const in zip(self.rows(), self.constants()):
            terms = []
            for label, c in row:
                mag = "" if abs(c) == 1 else f"{abs(c)}"
                sign = "-" if c < 0 else "+"
                terms.append((sign, f"{mag}|z_{label}|^2"))
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, t in terms[1:]:
                text += f" {sign} {t}"
            if const:
                text += f" {'-' if const > 0 else '+'} {abs(const)}"
            lines.append(text + " = 0")
        return lines

    def to_json(self) -> dict:
        return {
            "C": [[int(x) for x in row] for row in self.C],
            "b": list(self.b),
            "permutation": list(self.permutation),
        }


def _default_order(P: HPolytope) -> list:
    lead = min(tuple(sorted(v.facets)) for v in P.vertex_list)
    rest = [i for i in range(1, P.m + 1) if i not in lead]
    return list(lead) + rest


def cokernel_matrix(P: HPolytope, facet_order: Optional[Sequence[int]] = None) -> QuadricSystem:
    """Integer matrix ``C`` with ``C A = 0`` in the block form ``(-A' | I)``.

    The leading ``n`` facets of ``facet_order`` must meet at a vertex; by
    default the lexicographically smallest vertex facet set leads. The
    leading normals are taken as a basis of ``M_R``. When that basis is not
    unimodular a row of ``-A'`` can be fractional and is scaled by its
    denominator, so the identity block becomes a diagonal block.
    """
    _require_simple(P)
    order = list(facet_order) if facet_order is not None else _default_order(P)
    if sorted(order) != list(range(1, P.m + 1)):
        raise PolytopeError("facet order must be a permutation of 1..m")
    lead = frozenset(order[: P.n])
    if not any(v.facets == lead for v in P.vertex_list):
        raise PolytopeError(f"leading facets {sorted(lead)} do not meet at a vertex")
    n, m = P.n, P.m
    Ap = P.A[[i - 1 for i in order], :]
    B = linalg.as_rational_matrix(Ap[:n, :])
    rows = []
    for j in range(n, m):
        # coordinates of a_j in the basis a_lead: solve B^T y = a_j
        y = linalg.solve_rational(B.T.copy(), list(Ap[j]))
        den = 1
        for t in y:
            den = lcm(den, t.denominator)
        row = [-(t * den) for t in y] + [0] * (m - n)
        row[j] = den
        rows.append([int(Fraction(t)) for t in row])
    C = linalg.as_integer_matrix(rows, shape=(m - n, m) if not rows else None)
    return QuadricSystem(C, P.b, tuple(order), n)


def quadric_equations(P: HPolytope, facet_order: Optional[Sequence[int]] = None) -> QuadricSystem:
    return cokernel_matrix(P, facet_order)


def moment_map_target(P: HPolytope, facet_order: Optional[Sequence[int]] = None) -> list:
    """``C b``: the value at which the moment map cuts out the quadric model."""
    return cokernel_matrix(P, facet_order).constants()


@dataclass(frozen=True, eq=False)
class SampledPoint:
    z: np.ndarray
    source_x: tuple
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(np.max(np.abs(self.residuals))) if self.residuals.size else 0.0


def lift_point(P: HPolytope, x, phases, Q: Optional[QuadricSystem] = None) -> SampledPoint:
    """``z_k = sqrt(<a_k, x> + b_k) * exp(i theta_k)``."""
    y = P.evaluate([Fraction(t) for t in x])
    if any(t < 0 for t in y):
        raise PolytopeError("point is outside the polytope")
    mod = np.sqrt(np.array([float(t) for t in y]))
    z = mod * np.exp(1j * np.asarray(phases, dtype=float))
    Q = Q if Q is not None else cokernel_matrix(P)
    return SampledPoint(z, tuple(Fraction(t) for t in x), Q.residuals(z))


def sample_on_Z(P: HPolytope, count: int, seed: int = 0, Q: Optional[QuadricSystem] = None) -> list:
    """Points of the quadric model lying over random rational points of ``P``.

    Each ``x`` is a convex combination of the vertices with random positive
    integer weights, so it is exact; the phases come from ``numpy``'s
    seeded generator.
    """
    _require_simple(P)
    rng = np.random.default_rng(seed)
    Q = Q if Q is not None else cokernel_matrix(P)
    pts = [v.point for v in P.vertex_list]
    out = []
    for _ in range(count):
        w = [int(t) for t in rng.integers(1, 1000, size=len(pts))]
        total = sum(w)
        x = [sum(Fraction(wi, total) * p[j] for wi, p in zip(w, pts)) for j in range(P.n)]
        phases = rng.uniform(0.0, 2 * math.pi, size=P.m)
        out.append(lift_point(P, x, phases, Q))
    return out


def jacobian_rank_check(
    pt: SampledPoint,
    Q: QuadricSystem,
    tol: float = SINGULAR_VALUE_TOL,
    residual_tol: float = RESIDUAL_TOL,
) -> bool:
    """Whether the quadrics are independent (full-rank Jacobian) at ``pt``.

    Raises:
        ValueError: ``pt`` is not on the quadric model within ``residual_tol``.
    """
    res = Q.residuals(pt.z)
    if res.size and np.max(np.abs(res)) > residual_tol:
        raise ValueError("point does not satisfy the quadric equations")
    J = Q.jacobian(pt.z)
    if J.shape[0] == 0:
        return True
    s = np.linalg.svd(J, compute_uv=False)
    if s[0] == 0:
        return False
    return int(np.sum(s > tol * s[0])) == J.shape[0]


def cube(side: int = 1, n: int = 3) -> HPolytope:
    A = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    A += [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
    return from_inequalities(n, A, [0] * n + [side] * n)


def standard_simplex(n: int) -> HPolytope:
    A = [[1 if j == i else 0 for j in range(n)] for i in range(n)] + [[-1] * n]
    return from_inequalities(n, A, [0] * n + [1])


def cut_cube() -> HPolytope:
    """A 3-cube of side 3 with two non-adjacent edges cut off (8 facets)."""
    A = [
        [1, 0, 0], [0, 1, 0], [0, 0, 1],
        [-1, 0, 0], [0, -1, 0], [0, 0, -1],
        [-1, 1, 0], [0, -1, -1],
    ]
    return from_inequalities(3, A, [0, 0, 0, 3, 3, 3, 2, 5])
