"""Integral cohomology of moment-angle complexes ``Z_K``.

Two independent routes are provided:

* :func:`hochster_cohomology` sums the reduced cohomology of all full
  subcomplexes ``K(I)`` with a degree shift of ``|I| + 1``;
* :class:`KoszulModel` works in the finite differential graded algebra
  ``Λ[u_1..u_m] ⊗ Z[K] / (v_i^2, u_i v_i)`` with ``du_i = v_i``, which also
  carries the ring structure and Massey products.

A monomial ``u_σ v_τ`` is the pair of bitmasks ``(σ, τ)`` with ``σ ∩ τ = ∅``
and ``τ`` a face of ``K``; the u's are written in increasing order. Its
multidegree is ``σ ∪ τ`` and its total degree ``|σ| + 2|τ|``. Every
computation splits into blocks by multidegree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from . import linalg
from .linalg import AbelianGroup, CochainCohomology
from .simplicial import (
    CohomologyTable,
    SimplicialComplex,
    full_subcomplex,
    mask_of,
    popcount,
    reduced_cohomology,
    subsets_by_size,
    vertices_of,
)


class ProductNonzero(ValueError):
    """A Massey product was requested for classes with a nonzero product."""

    def __init__(self, pair: str):
        super().__init__(f"the product {pair} is not zero in cohomology")
        self.pair = pair


class CocycleParseError(ValueError):
    pass


# --------------------------------------------------------------------------
# monomial calculus


def _shuffle_sign(s1: int, s2: int) -> int:
    """Sign of reordering ``u_{s1} u_{s2}`` into increasing order."""
    inversions = 0
    rest = s2
    while rest:
        low = rest & -rest
        inversions += popcount(s1 & ~((low << 1) - 1))
        rest ^= low
    return -1 if inversions % 2 else 1


def monomial_degree(mono) -> int:
    sigma, tau = mono
    return popcount(sigma) + 2 * popcount(tau)


def _add_term(out: dict, mono, coeff: int) -> None:
    c = out.get(mono, 0) + coeff
    if c:
        out[mono] = c
    else:
        out.pop(mono, None)


def differential(K: SimplicialComplex, cochain: dict) -> dict:
    """``d(u_σ v_τ) = Σ_{i ∈ σ} (-1)^{#(σ below i)} u_{σ∖i} v_{τ∪i}``."""
    out = {}
    for (sigma, tau), coeff in cochain.items():
        rest = sigma
        while rest:
            bit = rest & -rest
            rest ^= bit
            t2 = tau | bit
            if not K.is_face(t2):
                continue
            sign = -1 if popcount(sigma & (bit - 1)) % 2 else 1
            _add_term(out, (sigma & ~bit, t2), sign * coeff)
    return out


def multiply(K: SimplicialComplex, x: dict, y: dict) -> dict:
    """Product in the reduced model; ``u_i^2 = v_i^2 = u_i v_i = 0``."""
    out = {}
    for (s1, t1), c1 in x.items():
        for (s2, t2), c2 in y.items():
            if (s1 | t1) & (s2 | t2):
                continue
            tau = t1 | t2
            if not K.is_face(tau):
                continue
            _add_term(out, (s1 | s2, tau), _shuffle_sign(s1, s2) * c1 * c2)
    return out


def split_blocks(cochain: dict) -> dict:
    """Multidegree ``σ ∪ τ`` -> the part of ``cochain`` living there."""
    out = {}
    for (sigma, tau), c in cochain.items():
        out.setdefault(sigma | tau, {})[(sigma, tau)] = c
    return out


def render_monomial(mono) -> str:
    sigma, tau = mono
    s = "".join(f"u_{i}" for i in vertices_of(sigma))
    s += "".join(f"v_{i}" for i in vertices_of(tau))
    return s or "1"


def render_cochain(cochain: dict) -> str:
    """Text in u/v notation, e.g. ``u_2u_5u_7v_8 + u_2u_7u_8v_5``."""
    if not cochain:
        return "0"
    terms = sorted(cochain.items(), key=lambda kv: _mono_key(kv[0]))
    parts = []
    for k, (mono, c) in enumerate(terms):
        body = render_monomial(mono)
        mag = "" if abs(c) == 1 else str(abs(c))
        if body == "1":
            body, mag = str(abs(c)), ""
        if k == 0:
            parts.append(("-" if c < 0 else "") + mag + body)
        else:
            parts.append((" - " if c < 0 else " + ") + mag + body)
    return "".join(parts)


def _mono_key(mono):
    sigma, tau = mono
    return (vertices_of(sigma | tau), vertices_of(sigma), vertices_of(tau))


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*((?:[uv]_?\{?\d+\}?)*|1)\s*")
_VAR = re.compile(r"([uv])_?\{?(\d+)\}?")


def parse_cochain(text: str, m: int) -> dict:
    """Parse u/v notation; the u's may come in any order (signs follow).

    Monomials that vanish in the reduced model (repeated index) are dropped.
    Raises :class:`CocycleParseError` on malformed input.
    """
    s = text.replace("−", "-").replace(" ", "")
    if not s:
        raise CocycleParseError("empty cochain")
    out = {}
    pos = 0
    first = True
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if mt is None or mt.end() == pos:
            raise CocycleParseError(f"cannot parse {text!r} at position {pos}")
        sign, num, body = mt.groups()
        if not sign and not first:
            raise CocycleParseError(f"missing operator in {text!r}")
        if not body:
            if not num:
                raise CocycleParseError(f"missing monomial in {text!r}")
            # a bare integer is a multiple of the unit
            body = "1"
        first = False
        coeff = int(num) if num else 1
        if sign == "-":
            coeff = -coeff
        if body == "1":
            _add_term(out, (0, 0), coeff)
            pos = mt.end()
            continue
        us, vs = [], []
        for kind, idx in _VAR.findall(body):
            i = int(idx)
            if not 1 <= i <= m:
                raise CocycleParseError(f"index {i} outside 1..{m}")
            (us if kind == "u" else vs).append(i)
        sign_u = 1
        for a in range(len(us)):
            for b in range(a + 1, len(us)):
                if us[a] > us[b]:
                    sign_u = -sign_u
        used = us + vs
        if len(set(used)) == len(used):
            _add_term(out, (mask_of(us), mask_of(vs)), sign_u * coeff)
        pos = mt.end()
    return out


# --------------------------------------------------------------------------
# classes


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """A cocycle of the Koszul model of ``complex``, standing for its class."""

    complex: SimplicialComplex
    terms: tuple  # ((sigma, tau), coeff) pairs, sorted

    @classmethod
    def from_cochain(cls, K: SimplicialComplex, cochain: dict) -> "CohomologyClass":
        items = tuple(sorted(((m, c) for m, c in cochain.items() if c), key=lambda kv: _mono_key(kv[0])))
        return cls(K, items)

    @classmethod
    def parse(cls, K: SimplicialComplex, text: str) -> "CohomologyClass":
        return cls.from_cochain(K, parse_cochain(text, K.m))

    @property
    def cochain(self) -> dict:
        return dict(self.terms)

    @property
    def degree(self) -> Optional[int]:
        degs = {monomial_degree(m) for m, _ in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous cochain")
        return degs.pop() if degs else None

    @property
    def multidegree_support(self) -> frozenset:
        return frozenset(s | t for (s, t), _ in self.terms)

    @property
    def is_zero_cochain(self) -> bool:
        return not self.terms

    def is_cocycle(self) -> bool:
        return not differential(self.complex, self.cochain)

    def __str__(self) -> str:
        return render_cochain(self.cochain)

    def __repr__(self) -> str:
        return f"[{self}]"


# --------------------------------------------------------------------------
# the Koszul model, block by block


@dataclass(eq=False)
class KoszulBlock:
    """The multidegree-``I`` summand: monomials ``u_{I∖τ} v_τ`` with ``τ ⊆ I``."""

    K: SimplicialComplex
    I: int
    faces: dict = field(default_factory=dict)  # t -> sorted list of tau masks
    d: dict = field(default_factory=dict)  # t -> matrix (faces t -> faces t+1)
    _cohomology: dict = field(default_factory=dict)

    def __post_init__(self):
        sub = [f for f in self.K.faces if f & ~self.I == 0]
        top = max(popcount(f) for f in sub)
        for t in range(top + 1):
            self.faces[t] = sorted((f for f in sub if popcount(f) == t), key=vertices_of)
        for t in range(top + 1):
            self.d[t] = self._matrix(t)

    @property
    def size(self) -> int:
        return popcount(self.I)

    def degree(self, t: int) -> int:
        return self.size + t

    def monomial(self, tau: int):
        return (self.I & ~tau, tau)

    def basis(self, t: int) -> list:
        return [self.monomial(tau) for tau in self.faces.get(t, [])]

    def _matrix(self, t: int) -> np.ndarray:
        src = self.faces.get(t, [])
        dst = self.faces.get(t + 1, [])
        row = {f: i for i, f in enumerate(dst)}
        M = np.zeros((len(dst), len(src)), dtype=object)
        for c, tau in enumerate(src):
            img = differential(self.K, {self.monomial(tau): 1})
            for (_, t2), coeff in img.items():
                M[row[t2], c] = coeff
        return M

    def vector(self, cochain: dict, t: int) -> np.ndarray:
        index = {tau: i for i, tau in enumerate(self.faces.get(t, []))}
        v = np.zeros(len(index), dtype=object)
        for (sigma, tau), c in cochain.items():
            if (sigma | tau) != self.I or tau not in index:
                raise ValueError("cochain is not in this block and degree")
            v[index[tau]] = c
        return v

    def cochain(self, vec, t: int) -> dict:
        return {self.monomial(tau): int(c) for tau, c in zip(self.faces.get(t, []), vec) if c}

    def cohomology(self, t: int) -> CochainCohomology:
        if t not in self._cohomology:
            n_t = len(self.faces.get(t, []))
            d_in = self.d[t - 1] if t - 1 in self.d else np.zeros((n_t, 0), dtype=object)
            d_out = self.d[t] if t in self.d else np.zeros((0, n_t), dtype=object)
            self._cohomology[t] = linalg.cochain_cohomology(
                d_in, d_out, n_t, preferred=self._candidates(d_out, n_t)
            )
        return self._cohomology[t]

    @staticmethod
    def _candidates(d_out: np.ndarray, n: int):
        # single monomials first, then a sparse kernel basis
        for i in reversed(range(n)):
            e = np.zeros(n, dtype=object)
            e[i] = 1
            yield e
        Z = linalg.kernel_basis(d_out)
        cols = [Z[:, j] for j in range(Z.shape[1])]
        cols.sort(key=lambda v: sum(1 for x in v if x))
        yield from cols

    def groups(self) -> CohomologyTable:
        table = CohomologyTable()
        for t in self.faces:
            table[self.degree(t)] = self.cohomology(t).group
        return table


class KoszulModel:
    """Cohomology ring of ``Z_K`` through the reduced Koszul model."""

    def __init__(self, K: SimplicialComplex):
        self.K = K
        self._blocks = {}

    def block(self, I) -> KoszulBlock:
        mask = I if isinstance(I, int) else mask_of(I)
        if mask not in self._blocks:
            self._blocks[mask] = KoszulBlock(self.K, mask)
        return self._blocks[mask]

    def _locate(self, mono):
        sigma, tau = mono
        blk = self.block(sigma | tau)
        return blk, popcount(tau)

    def generators(self, degree: Optional[int] = None, I=None) -> list:
        """Generator classes, one per cyclic summand, ordered by multidegree."""
        masks = [I if isinstance(I, int) else mask_of(I)] if I is not None else subsets_by_size(self.K.m)
        out = []
        for mask in masks:
            blk = self.block(mask)
            for t in blk.faces:
                if degree is not None and blk.degree(t) != degree:
                    continue
                cc = blk.cohomology(t)
                for g in cc.generators:
                    out.append(CohomologyClass.from_cochain(self.K, blk.cochain(g, t)))
        return out

    def coordinates(self, x) -> dict:
        """Per-block coordinates of a cocycle in the fixed generators."""
        cochain = x.cochain if isinstance(x, CohomologyClass) else x
        out = {}
        for mask, part in split_blocks(cochain).items():
            blk = self.block(mask)
            by_t = {}
            for (s, t), c in part.items():
                by_t.setdefault(popcount(t), {})[(s, t)] = c
            for t, piece in by_t.items():
                coords = blk.cohomology(t).coordinates(blk.vector(piece, t))
                if any(coords):
                    out[(mask, t)] = coords
        return out

    def is_zero_class(self, x) -> bool:
        return not self.coordinates(x)

    def reduce(self, x) -> dict:
        """Canonical representative: the same combination of generators."""
        out = {}
        for (mask, t), coords in self.coordinates(x).items():
            blk = self.block(mask)
            vec = blk.cohomology(t).represent(coords)
            for mono, c in blk.cochain(vec, t).items():
                _add_term(out, mono, c)
        return out

    def equal_classes(self, x, y) -> bool:
        cx = x.cochain if isinstance(x, CohomologyClass) else x
        cy = y.cochain if isinstance(y, CohomologyClass) else y
        diff = dict(cx)
        for mono, c in cy.items():
            _add_term(diff, mono, -c)
        return self.is_zero_class(diff)

    def equal_up_to_sign(self, x, y) -> bool:
        cy = y.cochain if isinstance(y, CohomologyClass) else y
        neg = {mono: -c for mono, c in cy.items()}
        return self.equal_classes(x, y) or self.equal_classes(x, neg)

    def coboundary_preimage(self, cochain: dict) -> Optional[dict]:
        """Some ``e`` with ``de == cochain``, or ``None``."""
        out = {}
        for mask, part in split_blocks(cochain).items():
            blk = self.block(mask)
            by_t = {}
            for (s, t), c in part.items():
                by_t.setdefault(popcount(t), {})[(s, t)] = c
            for t, piece in by_t.items():
                vec = blk.vector(piece, t)
                if t == 0:
                    return None
                y = blk.cohomology(t).preimage(vec)
                if y is None:
                    return None
                for mono, c in blk.cochain(y, t - 1).items():
                    _add_term(out, mono, c)
        return out

    def groups(self) -> CohomologyTable:
        table = CohomologyTable()
        for mask in subsets_by_size(self.K.m):
            for deg, g in self.block(mask).groups().items():
                table[deg] = table[deg] + g
        return table


@lru_cache(maxsize=32)
def koszul_model(K: SimplicialComplex) -> KoszulModel:
    return KoszulModel(K)


# --------------------------------------------------------------------------
# Hochster decomposition


@dataclass
class CohomologyReport:
    """Additive cohomology of ``Z_K`` plus the bigraded Betti table."""

    m: int
    groups: CohomologyTable
    bigraded: dict  # (i, 2j) -> rank of Tor^{-i, 2j}
    provenance: list  # (I as tuple, degree, AbelianGroup) for nonzero pieces
    generators: dict = field(default_factory=dict)  # degree -> [CohomologyClass]

    @property
    def top_degree(self) -> int:
        nz = [k for k, g in self.groups.items() if not g.is_trivial]
        return max(nz) if nz else 0

    @property
    def betti(self) -> list:
        return [self.groups[k].free_rank for k in range(self.top_degree + 1)]

    @property
    def torsion(self) -> dict:
        return {k: g.torsion for k, g in sorted(self.groups.items()) if g.torsion}

    def to_json(self) -> dict:
        return {
            "betti": self.betti,
            "groups": [
                {"degree": k, "free_rank": self.groups[k].free_rank, "torsion": list(self.groups[k].torsion)}
                for k in range(self.top_degree + 1)
            ],
            "bigraded": [
                {"i": i, "2j": j2, "rank": r} for (i, j2), r in sorted(self.bigraded.items())
            ],
            "generators": [
                {
                    "degree": deg,
                    "cocycle": str(cls),
                    "multidegree": sorted(vertices_of(next(iter(cls.multidegree_support)))),
                }
                for deg in sorted(self.generators)
                for cls in self.generators[deg]
            ],
        }


def _reduced_of_subcomplex(K: SimplicialComplex, I: int) -> CohomologyTable:
    return reduced_cohomology(full_subcomplex(K, I))


def hochster_cohomology(
    K: SimplicialComplex,
    reduced: Optional[Callable] = None,
    mapper: Callable = map,
    with_generators: bool = False,
) -> CohomologyReport:
    """``H^k(Z_K) = ⊕_I H̃^{k-|I|-1}(K(I))`` over all ``I ⊆ [m]``.

    ``reduced(K, I)`` computes the reduced cohomology of ``K(I)``; ``mapper``
    may be a parallel, order-preserving ``map``. Subsets are visited by size
    and then lexicographically, and results are merged in that order.
    """
    reduced = reduced or _reduced_of_subcomplex
    subsets = list(subsets_by_size(K.m))
    tables = mapper(reduced, [K] * len(subsets), subsets)
    groups = CohomologyTable()
    bigraded = {}
    provenance = []
    for I, table in zip(subsets, tables):
        j = popcount(I)
        for p, g in sorted(table.items()):
            if g.is_trivial:
                continue
            k = p + j + 1
            groups[k] = groups[k] + g
            provenance.append((vertices_of(I), k, g))
            if g.free_rank:
                key = (j - p - 1, 2 * j)
                bigraded[key] = bigraded.get(key, 0) + g.free_rank
    report = CohomologyReport(K.m, groups, bigraded, provenance)
    if with_generators:
        model = koszul_model(K)
        for deg in range(report.top_degree + 1):
            gens = model.generators(deg)
            if gens:
                report.generators[deg] = gens
    return report


def koszul_cohomology(K: SimplicialComplex, I) -> KoszulBlock:
    """The multidegree-``I`` block; see :meth:`KoszulBlock.groups`."""
    return koszul_model(K).block(I)


def cup_product(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Product of classes, returned in canonical form (zero iff no terms)."""
    if x.complex != y.complex:
        raise ValueError("classes live on different complexes")
    K = x.complex
    prod = multiply(K, x.cochain, y.cochain)
    return CohomologyClass.from_cochain(K, koszul_model(K).reduce(prod))


def poincare_duality_check(report: CohomologyReport, m: int, n: int) -> bool:
    """Free ranks are symmetric about the middle of ``0..m+n``."""
    top = m + n
    if report.top_degree > top:
        return False
    b = [report.groups[k].free_rank for k in range(top + 1)]
    return all(b[k] == b[top - k] for k in range(top + 1))


@dataclass
class CrossCheck:
    ok: bool
    mismatches: list  # (I, degree, from Hochster, from Koszul)

    def __bool__(self) -> bool:
        return self.ok


def cross_check_hochster_koszul(K: SimplicialComplex) -> CrossCheck:
    """Compare both routes block by block and in aggregate."""
    model = koszul_model(K)
    mismatches = []
    for I in subsets_by_size(K.m):
        simp = _reduced_of_subcomplex(K, I)
        kosz = model.block(I).groups()
        shift = popcount(I) + 1
        degrees = {p + shift for p in simp} | set(kosz)
        for k in sorted(degrees):
            a, b = simp[k - shift], kosz[k]
            if a != b:
                mismatches.append((vertices_of(I), k, a, b))
    hoch = hochster_cohomology(K).groups
    agg = model.groups()
    for k in sorted(set(hoch) | set(agg)):
        if hoch[k] != agg[k]:
            mismatches.append((None, k, hoch[k], agg[k]))
    return CrossCheck(not mismatches, mismatches)


# --------------------------------------------------------------------------
# Massey triple products


@dataclass
class MasseyResult:
    defined: bool
    representative: Optional[CohomologyClass] = None
    trivial: Optional[bool] = None
    e: Optional[CohomologyClass] = None
    f: Optional[CohomologyClass] = None
    nonzero_products: tuple = ()


def _sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for mono, c in y.items():
        _add_term(out, mono, -c)
    return out


def massey_representative(K: SimplicialComplex, a: dict, c: dict, e: dict, f: dict) -> dict:
    """``a·f + (-1)^{|a|+1} e·c`` (a cocycle when ``de = ab``, ``df = bc``)."""
    deg_a = monomial_degree(next(iter(a))) if a else 0
    rep = multiply(K, a, f)
    sign = -1 if deg_a % 2 == 0 else 1
    for mono, coeff in multiply(K, e, c).items():
        _add_term(rep, mono, sign * coeff)
    return rep


def massey_indeterminacy(K: SimplicialComplex, a: dict, b: dict, c: dict) -> list:
    """Cochains generating ``a·H + H·c`` (as cocycles) in the target degree."""
    model = koszul_model(K)
    deg = lambda x: monomial_degree(next(iter(x))) if x else 0
    da, db, dc = deg(a), deg(b), deg(c)
    gens = []
    for g in model.generators(db + dc - 1):
        p = multiply(K, a, g.cochain)
        if p:
            gens.append(p)
    for g in model.generators(da + db - 1):
        p = multiply(K, g.cochain, c)
        if p:
            gens.append(p)
    return gens


def _in_subgroup(K: SimplicialComplex, target: dict, extra: list) -> bool:
    """Is ``target`` in ``span(extra) + coboundaries``?"""
    model = koszul_model(K)
    # union blocks touched together so membership splits into components
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def key(mono):
        return (mono[0] | mono[1], popcount(mono[1]))

    for mono in target:
        find(key(mono))
    for g in extra:
        ks = [key(mono) for mono in g]
        for k in ks[1:]:
            parent[find(k)] = find(ks[0])
        find(ks[0])
    comps = {}
    for k in list(parent):
        comps.setdefault(find(k), []).append(k)
    for root, members in comps.items():
        members = sorted(members)
        offset, index = 0, {}
        for mask, t in members:
            blk = model.block(mask)
            for tau in blk.faces.get(t, []):
                index[(mask & ~tau, tau)] = offset
                offset += 1
        cols = []
        for mask, t in members:
            blk = model.block(mask)
            if t - 1 in blk.d:
                D = blk.d[t - 1]
                for j in range(D.shape[1]):
                    col = np.zeros(offset, dtype=object)
                    for tau, val in zip(blk.faces[t], D[:, j]):
                        if val:
                            col[index[(mask & ~tau, tau)]] = val
                    cols.append(col)
        for g in extra:
            if find(key(next(iter(g)))) != root:
                continue
            col = np.zeros(offset, dtype=object)
            for mono, val in g.items():
                col[index[mono]] = val
            cols.append(col)
        vec = np.zeros(offset, dtype=object)
        for mono, val in target.items():
            if find(key(mono)) == root:
                vec[index[mono]] = val
        if not any(vec):
            continue
        G = np.array(cols, dtype=object).T if cols else np.zeros((offset, 0), dtype=object)
        if not linalg.lattice_membership(vec, G):
            return False
    return True


def massey_triple(
    a: CohomologyClass, b: CohomologyClass, c: CohomologyClass, strict: bool = False
) -> MasseyResult:
    """Triple Massey product ``<a, b, c>``.

    When both products vanish, solves ``de = ab`` and ``df = bc`` over the
    integers, forms ``a·f + (-1)^{|a|+1} e·c`` and decides whether the coset
    ``rep + a·H + H·c`` contains zero.

    Raises:
        ValueError: an argument is not a cocycle.
        ProductNonzero: with ``strict=True``, when ``ab`` or ``bc`` is nonzero.
    """
    K = a.complex
    if not (b.complex == K and c.complex == K):
        raise ValueError("classes live on different complexes")
    for name, x in (("a", a), ("b", b), ("c", c)):
        if not x.is_cocycle():
            raise ValueError(f"{name} = {x} is not a cocycle")
    model = koszul_model(K)
    ab = multiply(K, a.cochain, b.cochain)
    bc = multiply(K, b.cochain, c.cochain)
    bad = tuple(name for name, p in (("ab", ab), ("bc", bc)) if not model.is_zero_class(p))
    if bad:
        if strict:
            raise ProductNonzero(bad[0])
        return MasseyResult(defined=False, nonzero_products=bad)
    e = model.coboundary_preimage(ab)
    f = model.coboundary_preimage(bc)
    rep = massey_representative(K, a.cochain, c.cochain, e, f)
    if differential(K, rep):
        raise AssertionError("Massey representative is not a cocycle")
    extra = massey_indeterminacy(K, a.cochain, b.cochain, c.cochain)
    trivial = _in_subgroup(K, rep, extra)
    return MasseyResult(
        defined=True,
        representative=CohomologyClass.from_cochain(K, rep),
        trivial=trivial,
        e=CohomologyClass.from_cochain(K, e),
        f=CohomologyClass.from_cochain(K, f),
    )
