"""Rational simplicial fans and the combinatorial data they determine.

Ray and cone indices are 1-based throughout, matching the usual
``a_1, ..., a_m`` labelling of the one-dimensional cones.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import linalg
from .linalg import AbelianGroup
from .simplicial import SimplicialComplex, mask_of, vertices_of

MAX_RANK = 16


class FanError(ValueError):
    pass


class NonSimplicialCone(FanError):
    pass


class BadIntersection(FanError):
    pass


class ContainsLine(FanError):
    pass


class RaysDoNotSpan(FanError):
    pass


@dataclass(frozen=True)
class Cone:
    generator_indices: frozenset

    def __init__(self, generator_indices: Iterable[int]):
        object.__setattr__(self, "generator_indices", frozenset(int(i) for i in generator_indices))

    @property
    def dim(self) -> int:
        return len(self.generator_indices)

    def sorted(self) -> tuple:
        return tuple(sorted(self.generator_indices))

    def __repr__(self) -> str:
        return f"Cone({list(self.sorted())})"


@dataclass(frozen=True)
class Fan:
    """A validated simplicial fan. Build with :func:`validate_fan`."""

    n: int
    rays: tuple
    cones: tuple
    primitivized: bool = field(default=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.rays)

    def ray_matrix(self, indices: Optional[Sequence[int]] = None) -> np.ndarray:
        """``n x k`` matrix whose columns are the selected rays."""
        idx = range(1, self.m + 1) if indices is None else indices
        cols = [self.rays[i - 1] for i in idx]
        if not cols:
            return np.zeros((self.n, 0), dtype=object)
        return linalg.as_integer_matrix(cols).T.copy()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rays": [list(r) for r in self.rays],
            "maximal_cones": [list(c.sorted()) for c in self.cones],
        }

    @classmethod
    def from_json(cls, data) -> "Fan":
        if isinstance(data, str):
            data = json.loads(data)
        return validate_fan(int(data["n"]), data["rays"], data["maximal_cones"])


def validate_fan(n: int, rays, maximal_cones) -> Fan:
    """Check the fan axioms exactly and return a :class:`Fan`.

    Rays are divided by their gcd; ``Fan.primitivized`` records whether any
    input ray needed it. Cones that are faces of other listed cones are
    absorbed.

    Raises:
        ContainsLine: some cone is not strongly convex.
        NonSimplicialCone: some cone has linearly dependent generators.
        BadIntersection: two cones meet outside a common face.
    """
    if not 1 <= n <= MAX_RANK:
        raise FanError(f"lattice rank must be in [1, {MAX_RANK}]")
    prim, changed = [], False
    for r in rays:
        r = tuple(int(x) for x in r)
        if len(r) != n:
            raise FanError(f"ray {r} does not have {n} coordinates")
        if not any(r):
            raise FanError("zero ray")
        p = linalg.primitive(r)
        changed |= p != r
        prim.append(p)
    m = len(prim)
    if m > 64:
        raise FanError("at most 64 rays are supported")
    masks = set()
    for c in maximal_cones:
        c = [int(i) for i in c]
        if any(not 1 <= i <= m for i in c):
            raise FanError(f"cone {c} indexes a missing ray")
        if len(set(c)) != len(c):
            raise FanError(f"cone {c} repeats a generator")
        masks.add(mask_of(c))
    masks.discard(0)
    kept = sorted(
        (f for f in masks if not any(f != g and f & ~g == 0 for g in masks)),
        key=lambda f: vertices_of(f),
    )
    fan = Fan(n, tuple(prim), tuple(Cone(vertices_of(f)) for f in kept), changed)
    for cone in fan.cones:
        gens = fan.ray_matrix(cone.sorted())
        if _has_positive_dependency(gens):
            raise ContainsLine(f"{cone} contains a line")
        if linalg.rank(gens) < cone.dim:
            raise NonSimplicialCone(f"{cone} has dependent generators")
    for c1, c2 in combinations(fan.cones, 2):
        if not _meet_in_common_face(fan, c1, c2):
            raise BadIntersection(f"{c1} and {c2} meet outside a common face")
    return fan


def _has_positive_dependency(G: np.ndarray) -> bool:
    # lambda >= 0, sum lambda = 1, G lambda = 0
    k = G.shape[1]
    if k == 0:
        return False
    A = np.vstack([G, np.ones((1, k), dtype=object)])
    b = [0] * G.shape[0] + [1]
    return linalg.nonnegative_solution(A, b) is not None


def _meet_in_common_face(fan: Fan, c1: Cone, c2: Cone) -> bool:
    """Both cones simplicial; decide ``c1 ∩ c2 == cone(common generators)``.

    A bad point ``x = sum_{G1} l_i a_i = sum_{G2} u_j a_j`` exists iff the
    non-shared coefficients admit a nonnegative, nonzero solution once the
    shared directions are projected away.
    """
    shared = c1.generator_indices & c2.generator_indices
    only1 = sorted(c1.generator_indices - shared)
    only2 = sorted(c2.generator_indices - shared)
    if not only1 or not only2:
        return True
    S = fan.ray_matrix(sorted(shared))
    # rows of L annihilate span(S)
    L = linalg.kernel_basis(S.T.copy()).T.copy() if S.shape[1] else linalg.identity(fan.n)
    B = np.hstack([fan.ray_matrix(only1), -fan.ray_matrix(only2)])
    B = L.dot(B) if L.shape[0] else np.zeros((0, B.shape[1]), dtype=object)
    return not _has_positive_dependency(B)


def underlying_complex(F: Fan) -> SimplicialComplex:
    """The complex on ``[m]`` whose faces are the generator sets of cones."""
    return SimplicialComplex.from_maximal_faces(F.m, [c.sorted() for c in F.cones])


def is_regular(F: Fan) -> bool:
    """Every maximal cone is generated by part of a lattice basis."""
    for c in F.cones:
        snf = linalg.smith_normal_form(F.ray_matrix(c.sorted()))
        if snf.rank != c.dim or any(d != 1 for d in snf.diagonal):
            return False
    return True


def contains_point(F: Fan, c: Cone, v) -> bool:
    """Exact test whether ``v`` is a nonnegative combination of ``c``'s rays."""
    v = [Fraction(x) for x in v]
    if not any(v):
        return True
    G = linalg.as_rational_matrix(F.ray_matrix(c.sorted()))
    x = linalg.solve_rational(G, v) if G.shape[1] else None
    if x is None:
        return False
    return all(t >= 0 for t in x)


def is_complete(F: Fan, samples: int = 64, seed: int = 0) -> bool:
    """Whether the cones cover all of ``N_R``.

    Combinatorial test (full-dimensional maximal cones, every wall shared
    by exactly two of them, connected through walls), cross-checked by
    locating ``samples`` pseudo-random lattice points.
    """
    n = F.n
    if not F.cones or any(c.dim != n for c in F.cones):
        return False
    walls = {}
    for idx, c in enumerate(F.cones):
        for i in c.generator_indices:
            walls.setdefault(c.generator_indices - {i}, []).append(idx)
    if any(len(owners) != 2 for owners in walls.values()):
        return False
    seen, stack = {0}, [0]
    adj = {}
    for a, b in walls.values():
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    while stack:
        for nb in adj.get(stack.pop(), []):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(F.cones):
        return False
    rng = random.Random(seed)
    for _ in range(samples):
        v = [rng.randint(-1000, 1000) for _ in range(n)]
        if not any(contains_point(F, c, v) for c in F.cones):
            return False
    return True


def group_structure(F: Fan) -> AbelianGroup:
    """Structure of the kernel ``G`` of ``(C*)^m -> (C*)^n`` given by the rays.

    ``G`` is dual to ``coker(A^T: M -> Z^m)``, so it is ``(C*)^free_rank``
    times a finite group whose invariant factors are the returned torsion.
    The torsion is nontrivial exactly when the rays generate a proper
    sublattice of ``N``.

    Raises:
        RaysDoNotSpan: the rays do not span ``N_R``.
    """
    A = F.ray_matrix()
    snf = linalg.smith_normal_form(A)
    if snf.rank != F.n:
        raise RaysDoNotSpan("the rays do not span N_R")
    return AbelianGroup(F.m - F.n, tuple(d for d in snf.diagonal if d > 1))


def maximal_cone_determinants(F: Fan) -> list:
    out = []
    for c in F.cones:
        M = F.ray_matrix(c.sorted())
        out.append(linalg.determinant(M) if M.shape[0] == M.shape[1] else None)
    return out
