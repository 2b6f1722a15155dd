"""Abstract simplicial complexes on ``[m]`` and their reduced cohomology.

Faces are bitmasks: vertex ``i`` (1-based) is bit ``i - 1``. A complex
always contains the empty face, so the "empty complex" is ``{∅}`` and has
``H̃^{-1} = Z``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .linalg import AbelianGroup, smith_normal_form

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a set of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << (int(v) - 1)
    return mask


def vertices_of(mask: int) -> tuple:
    """Sorted 1-based labels of the vertices in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subsets_by_size(m: int):
    """All subsets of ``[m]`` as bitmasks, by size and then lexicographically."""
    for k in range(m + 1):
        for combo in combinations(range(1, m + 1), k):
            yield mask_of(combo)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class CohomologyTable(dict):
    """Degree -> :class:`AbelianGroup`; missing degrees are zero."""

    def __missing__(self, key):
        return AbelianGroup()

    def betti(self) -> dict:
        return {k: g.free_rank for k, g in sorted(self.items())}

    def nonzero(self) -> dict:
        return {k: g for k, g in sorted(self.items()) if not g.is_trivial}


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of subsets of ``[m]``, stored by maximal faces.

    ``labels`` records the original vertex names when the complex was cut
    out of a bigger one by :func:`full_subcomplex`.
    """

    m: int
    maximal: frozenset
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not 0 <= self.m <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}]")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.m + 1)))
        full = (1 << self.m) - 1
        for f in self.maximal:
            if f & ~full:
                raise ValueError(f"face {vertices_of(f)} not inside [{self.m}]")

    @classmethod
    def from_maximal_faces(cls, m: int, maximal: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = set()
        for face in maximal:
            face = list(face)
            bad = [v for v in face if not 1 <= int(v) <= m]
            if bad:
                raise ValueError(f"vertex index {bad[0]} out of range 1..{m}")
            masks.add(mask_of(face))
        masks.discard(0)
        return cls(m, frozenset(_maximal_only(masks)))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset({(1 << m) - 1}))

    @classmethod
    def simplex_boundary(cls, m: int) -> "SimplicialComplex":
        full = (1 << m) - 1
        return cls(m, frozenset(full & ~(1 << i) for i in range(m)))

    def is_face(self, mask: int) -> bool:
        if mask == 0:
            return True
        return any(mask & ~f == 0 for f in self.maximal)

    @cached_property
    def faces(self) -> frozenset:
        out = {0}
        for f in self.maximal:
            out.update(_submasks(f))
        return frozenset(out)

    @cached_property
    def dimension(self) -> int:
        return max((popcount(f) for f in self.faces), default=0) - 1

    def faces_of_size(self, k: int) -> list:
        """Faces with ``k`` vertices, sorted lexicographically by vertex tuple."""
        return sorted((f for f in self.faces if popcount(f) == k), key=vertices_of)

    def maximal_faces(self) -> list:
        return sorted((vertices_of(f) for f in self.maximal), key=lambda t: (len(t), t))

    def f_vector(self) -> list:
        """Face counts by size, starting with the empty face."""
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[popcount(f)] += 1
        return counts

    def to_json(self) -> dict:
        return {"m": self.m, "maximal_faces": [list(f) for f in self.maximal_faces()]}

    @classmethod
    def from_json(cls, data) -> "SimplicialComplex":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_maximal_faces(int(data["m"]), data["maximal_faces"])

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, maximal={self.maximal_faces()})"


def _maximal_only(masks) -> list:
    masks = sorted(set(masks), key=popcount, reverse=True)
    kept = []
    for f in masks:
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    return kept


def from_maximal_faces(m: int, maximal) -> SimplicialComplex:
    return SimplicialComplex.from_maximal_faces(m, maximal)


def full_subcomplex(K: SimplicialComplex, I) -> SimplicialComplex:
    """Restriction of ``K`` to the vertex set ``I``.

    ``I`` is a bitmask or an iterable of 1-based labels. The result lives on
    ``[|I|]`` with ``labels`` giving the original names in increasing order.
    """
    mask = I if isinstance(I, int) else mask_of(I)
    verts = vertices_of(mask)
    if verts and verts[-1] > K.m:
        raise ValueError("subset is not inside the vertex set")
    position = {v: k for k, v in enumerate(verts)}
    restricted = set()
    for f in K.maximal:
        g = f & mask
        restricted.add(mask_of(position[v] + 1 for v in vertices_of(g)))
    restricted.discard(0)
    labels = tuple(K.labels[v - 1] for v in verts)
    return SimplicialComplex(len(verts), frozenset(_maximal_only(restricted)), labels)


def minimal_non_faces(K: SimplicialComplex) -> list:
    """Inclusion-minimal non-faces, as sorted tuples of 1-based labels."""
    found = set()
    for f in K.faces:
        for i in range(K.m):
            bit = 1 << i
            if f & bit:
                continue
            s = f | bit
            if s in found or K.is_face(s):
                continue
            if all(K.is_face(s & ~(1 << j)) for j in range(K.m) if s >> j & 1):
                found.add(s)
    return sorted((vertices_of(s) for s in found), key=lambda t: (len(t), t))


def coboundary_matrix(K: SimplicialComplex, k: int) -> np.ndarray:
    """Matrix of ``δ`` from faces of size ``k`` to faces of size ``k + 1``.

    Inserting vertex ``v`` at 0-based position ``j`` of the sorted face
    carries the sign ``(-1)^j``.
    """
    src = K.faces_of_size(k)
    dst = K.faces_of_size(k + 1)
    row = {f: i for i, f in enumerate(dst)}
    M = np.zeros((len(dst), len(src)), dtype=object)
    for c, f in enumerate(src):
        for v in range(K.m):
            bit = 1 << v
            if f & bit:
                continue
            g = f | bit
            if g in row:
                j = popcount(g & (bit - 1))
                M[row[g], c] = -1 if j % 2 else 1
    return M


def reduced_cohomology(K: SimplicialComplex) -> CohomologyTable:
    """Reduced integral cohomology from the augmented cochain complex.

    Free ranks come from matrix ranks; torsion is read off the Smith normal
    form of the incoming coboundary.
    """
    top = K.dimension + 1  # largest face size
    sizes = range(0, top + 1)
    dims = {k: len(K.faces_of_size(k)) for k in sizes}
    ranks, torsion = {}, {}
    for k in range(0, top):
        snf = smith_normal_form(coboundary_matrix(K, k))
        ranks[k] = snf.rank
        torsion[k + 1] = [d for d in snf.diagonal if d > 1]
    table = CohomologyTable()
    for k in sizes:
        free = dims[k] - ranks.get(k, 0) - ranks.get(k - 1, 0)
        table[k - 1] = AbelianGroup.from_cyclic(free, torsion.get(k, []))
    return table


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``-1 + f_0 - f_1 + ...``."""
    return sum(n if k % 2 else -n for k, n in enumerate(K.f_vector()))


def is_pseudomanifold(K: SimplicialComplex) -> bool:
    """Pure, and every codimension-one face lies in exactly two facets."""
    d = K.dimension + 1
    if any(popcount(f) != d for f in K.maximal):
        return False
    if d == 0:
        return True
    counts = {}
    for f in K.maximal:
        for v in vertices_of(f):
            g = f & ~(1 << (v - 1))
            counts[g] = counts.get(g, 0) + 1
    return all(c == 2 for c in counts.values())


def relabel(K: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Image of ``K`` under vertex ``i -> perm[i - 1]``."""
    faces = [[perm[v - 1] for v in vertices_of(f)] for f in K.maximal]
    return SimplicialComplex.from_maximal_faces(K.m, faces)
