"""End_K(T) as a finite-dimensional algebra: structure constants, radical, quiver, Cartan matrix.

Basis elements are homotopy classes of maps T_i -> T_j. The product a * b of
a : T_i -> T_j and b : T_j -> T_k is "first a, then b", i.e. b o a; this is the
multiplication of End(T)^op. With this convention e_i E e_j is Hom_K(T_i, T_j)
and an arrow i -> j of the quiver is an irreducible map T_i -> T_j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import floor, log

import numpy as np
import sympy

from . import fp
from .algebra import BlockParams, Quiver, polymatmul
from .tilt import (
    ChainMap,
    HomK,
    HomLayout,
    TiltComponent,
    compose_chain_maps,
    hom_space,
    identity_map,
    is_chain_map,
)

__all__ = [
    "EndoAlgebra",
    "compose_chain_maps",
    "endomorphism_algebra",
    "radical",
    "quiver_of_endo",
    "cartan_matrix",
    "GenerationReport",
    "generation_report",
    "generated_subspace",
    "nilpotency_index",
    "radical_power",
]


def _maps_batch(layout: HomLayout, vecs: np.ndarray) -> dict[int, np.ndarray]:
    full = layout.to_full(np.asarray(vecs, dtype=np.int64))
    out = {}
    for k in layout.blocks:
        shape = layout.shape(k)
        n = int(np.prod(shape))
        o = layout.full_offsets[k]
        out[k] = full[:, o: o + n].reshape((len(vecs),) + shape)
    return out


def _vecs_from_batch(layout: HomLayout, maps: dict[int, np.ndarray], n: int) -> np.ndarray:
    full = np.zeros((n, layout.full_size), dtype=np.int64)
    for k in layout.blocks:
        if k in maps:
            o = layout.full_offsets[k]
            full[:, o: o + int(np.prod(layout.shape(k)))] = maps[k].reshape(n, -1)
    return full[:, layout.coords]


class EndoAlgebra:
    def __init__(self, T: list[TiltComponent]):
        self.T = T
        self.params: BlockParams = T[0].params
        self.r = len(T)
        p = self.params.p
        self.p = p
        self.homs: dict[tuple[int, int], HomK] = {}
        self.layouts: dict[tuple[int, int], HomLayout] = {}
        self.offsets: dict[tuple[int, int], int] = {}
        pos = 0
        for i in range(self.r):
            for j in range(self.r):
                self.homs[i, j] = hom_space(T[i].complex, T[j].complex)
                self.layouts[i, j] = HomLayout(T[i].complex, T[j].complex)
                self.offsets[i, j] = pos
                pos += self.homs[i, j].dim
        self.dim = pos
        self._products: dict[tuple[int, int, int], np.ndarray] = {}
        self._rep_maps: dict[tuple[int, int], dict[int, np.ndarray]] = {}
        self.idempotents = [self.class_of(identity_map(c.complex), i, i) for i, c in enumerate(T)]
        self._sig = {c.complex.signature(): n for n, c in enumerate(T)}

    # -- blocks
    def n(self, i: int, j: int) -> int:
        return self.homs[i, j].dim

    def block(self, vec: np.ndarray, i: int, j: int) -> np.ndarray:
        o = self.offsets[i, j]
        return vec[..., o: o + self.n(i, j)]

    def embed(self, block: np.ndarray, i: int, j: int) -> np.ndarray:
        out = np.zeros(np.shape(block)[:-1] + (self.dim,), dtype=np.int64)
        o = self.offsets[i, j]
        out[..., o: o + self.n(i, j)] = block
        return out

    def basis(self) -> list[tuple[int, int, ChainMap]]:
        out = []
        for i in range(self.r):
            for j in range(self.r):
                L = self.layouts[i, j]
                for v in self.homs[i, j].rep_vectors:
                    out.append((i, j, ChainMap(self.T[i].complex, self.T[j].complex, L.to_maps(v))))
        return out

    def locate(self, f: ChainMap) -> tuple[int, int]:
        return self._sig[f.source.signature()], self._sig[f.target.signature()]

    def class_of(self, f: ChainMap, i: int | None = None, j: int | None = None) -> np.ndarray:
        """Global coordinate vector of the homotopy class of f."""
        if i is None:
            i, j = self.locate(f)
        if not is_chain_map(f):
            raise ValueError("not a chain map")
        c = self.homs[i, j].classes(self.layouts[i, j].from_maps(f.maps))
        return self.embed(c, i, j)

    # -- multiplication
    def _reps(self, i: int, j: int) -> dict[int, np.ndarray]:
        if (i, j) not in self._rep_maps:
            self._rep_maps[i, j] = _maps_batch(self.layouts[i, j], self.homs[i, j].rep_vectors)
        return self._rep_maps[i, j]

    def products(self, i: int, j: int, k: int) -> np.ndarray:
        """c[a, b, :] = class of (rep a of T_i->T_j) then (rep b of T_j->T_k)."""
        key = (i, j, k)
        if key in self._products:
            return self._products[key]
        na, nb, nc = self.n(i, j), self.n(j, k), self.n(i, k)
        out = np.zeros((na, nb, nc), dtype=np.int64)
        if na and nb and nc:
            A, B = self._reps(i, j), self._reps(j, k)
            Lik = self.layouts[i, k]
            comp = {}
            for deg in Lik.blocks:
                if deg in A and deg in B:
                    blocks = np.stack([polymatmul(A[deg], B[deg][b], self.p) for b in range(nb)], axis=1)
                    comp[deg] = blocks.reshape((na * nb,) + blocks.shape[2:])
            vecs = _vecs_from_batch(Lik, comp, na * nb)
            out = self.homs[i, k].classes(vecs).reshape(na, nb, nc) % self.p
        self._products[key] = out
        return out

    def mult(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """a * b = first a, then b."""
        out = np.zeros(self.dim, dtype=np.int64)
        for i in range(self.r):
            for j in range(self.r):
                ab = self.block(a, i, j)
                if not ab.any():
                    continue
                for k in range(self.r):
                    bb = self.block(b, j, k)
                    if not bb.any():
                        continue
                    c = np.einsum("x,y,xyz->z", ab, bb, self.products(i, j, k))
                    o = self.offsets[i, k]
                    out[o: o + len(c)] += c
        return out % self.p

    def structure_constants(self) -> np.ndarray:
        """Dense tensor C[x, y, z]: e_x * e_y = sum_z C[x, y, z] e_z."""
        C = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i in range(self.r):
            for j in range(self.r):
                for k in range(self.r):
                    P = self.products(i, j, k)
                    if P.size:
                        oa, ob, oc = self.offsets[i, j], self.offsets[j, k], self.offsets[i, k]
                        C[oa: oa + P.shape[0], ob: ob + P.shape[1], oc: oc + P.shape[2]] = P
        return C

    def right_regular(self, C: np.ndarray | None = None) -> np.ndarray:
        """R[a] with rows x -> x * e_a; a -> R[a] is multiplicative: R[a*b] = R[a] R[b]."""
        C = self.structure_constants() if C is None else C
        return np.transpose(C, (1, 0, 2)).copy()


def endomorphism_algebra(T: list[TiltComponent], hom_tables=None) -> EndoAlgebra:
    """Assemble End_K(T)^op. Hom tables are cached inside ``tilt``; the argument is accepted for symmetry."""
    return EndoAlgebra(T)


# ---------------------------------------------------------------- radical

def _power_traces(M: np.ndarray, e: int, mod: int) -> np.ndarray:
    """Tr(M[b]^e) mod ``mod`` for a stack of matrices, by repeated squaring in float64.

    Entries stay below ``mod`` so every product is an exact integer in float64
    for the sizes used here.
    """
    n = M.shape[-1]
    if n * float(mod) ** 2 >= 2**52:
        raise OverflowError("matrix too large for exact float arithmetic")
    result = np.broadcast_to(np.eye(n), M.shape).copy()
    base = M.astype(np.float64) % mod
    while e:
        if e & 1:
            result = np.matmul(result, base) % mod
        e >>= 1
        if e:
            base = np.matmul(base, base) % mod
    return np.trace(result, axis1=-2, axis2=-1).astype(np.int64) % mod


def radical_of_matrix_algebra(basis_mats: np.ndarray, R: np.ndarray, p: int) -> np.ndarray:
    """Radical of the algebra with basis ``basis_mats`` (n x N x N matrices mod p), via trace forms.

    ``R[a]`` is the matrix of the basis element a; the product of elements with
    coordinate rows c, d has matrix sum c_a R[a] times sum d_b R[b]. The
    iteration: I_{-1} = A, I_i = {a in I_{i-1} : g_i(a b) = 0 for all b}, where
    g_i(a) = Tr(lift(a)^(p^i)) / p^i mod p. The last ideal is the radical.
    """
    n = basis_mats.shape[0]
    N = basis_mats.shape[1]
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    levels = floor(log(N, p) + 1e-9) if N > 1 else 0
    V = np.eye(n, dtype=np.int64)
    for i in range(levels + 1):
        if V.shape[0] == 0:
            break
        mod = p ** (i + 1)
        G = np.zeros((V.shape[0], n), dtype=np.int64)
        elems = np.einsum("va,aij->vij", V, basis_mats) % p
        if i == 0:
            G = np.einsum("vij,bji->vb", elems, basis_mats) % p
            coeffs = fp.left_nullspace(G, p)
            V = fp.row_basis(coeffs @ V % p, p) if coeffs.shape[0] else np.zeros((0, n), dtype=np.int64)
            continue
        for v in range(V.shape[0]):
            prods = np.matmul(elems[v][None].astype(np.float64), basis_mats.astype(np.float64)) % p
            tr = _power_traces(prods, p**i, mod)
            if np.any(tr % (p**i)):
                raise ArithmeticError("trace not divisible by p^i: input is not an algebra")
            G[v] = (tr // p**i) % p
        coeffs = fp.left_nullspace(G, p)
        V = fp.row_basis(coeffs @ V % p, p) if coeffs.shape[0] else np.zeros((0, n), dtype=np.int64)
    return V


def _local_radical(E: EndoAlgebra, i: int) -> np.ndarray:
    """Non-units of e_i E e_i: elements with nilpotent left multiplication (block coordinates)."""
    p = E.p
    P = E.products(i, i, i)
    n = P.shape[0]
    one = E.block(E.idempotents[i], i, i)
    # left multiplication by a: x -> a * x, matrix rows indexed by x
    Lmats = np.transpose(P, (0, 1, 2))  # L[a][x, z] = P[a, x, z]
    lam = np.zeros(n, dtype=np.int64)
    for a in range(n):
        found = None
        for c in range(p):
            M = (Lmats[a] - c * np.eye(n, dtype=np.int64)) % p
            Q = np.eye(n, dtype=np.int64)
            for _ in range(n):
                Q = Q @ M % p
            if not Q.any():
                found = c
                break
        if found is None:
            raise ArithmeticError("local endomorphism ring has a non-split residue field")
        lam[a] = found
    if int(lam @ one % p) != 1:
        raise ArithmeticError("identity does not map to 1 in the residue field")
    return fp.nullspace(lam[None, :], p)


@dataclass
class Radical:
    blocks: dict[tuple[int, int], np.ndarray]
    method: str

    def dims(self) -> dict[tuple[int, int], int]:
        return {k: v.shape[0] for k, v in self.blocks.items()}

    @property
    def dim(self) -> int:
        return sum(self.dims().values())


def radical(E: EndoAlgebra, method: str = "trace") -> Radical:
    """Jacobson radical, block by block.

    ``trace``: off-diagonal blocks e_i E e_j (i != j; the T_i are pairwise
    non-isomorphic indecomposables) plus the trace-form radical of each corner
    e_i E e_i. ``trace-full``: the trace-form iteration on the right regular
    representation of the whole algebra. ``local``: off-diagonal blocks plus the
    non-units of each corner, found by nilpotency of left multiplication.
    """
    p = E.p
    blocks = {}
    if method == "trace-full":
        C = E.structure_constants()
        R = E.right_regular(C)
        V = radical_of_matrix_algebra(R, R, p)
        for i in range(E.r):
            for j in range(E.r):
                blocks[i, j] = fp.row_basis(E.block(V, i, j), p) if E.n(i, j) else np.zeros((0, 0), dtype=np.int64)
        # the radical is spanned by its block components
        assert sum(b.shape[0] for b in blocks.values()) == V.shape[0]
    elif method in ("trace", "local"):
        for i in range(E.r):
            for j in range(E.r):
                if i != j:
                    blocks[i, j] = np.eye(E.n(i, j), dtype=np.int64)
                elif method == "local":
                    blocks[i, i] = _local_radical(E, i)
                else:
                    R = np.transpose(E.products(i, i, i), (1, 0, 2)).copy()
                    blocks[i, i] = radical_of_matrix_algebra(R, R, p)
    else:
        raise ValueError(f"unknown radical method {method}")
    return Radical(blocks, method)


def radical_power(E: EndoAlgebra, rad: Radical, cur: dict | None = None) -> dict[tuple[int, int], np.ndarray]:
    """Block bases of rad * cur (cur defaults to rad), i.e. the next radical power."""
    p = E.p
    cur = rad.blocks if cur is None else cur
    out = {}
    for i in range(E.r):
        for k in range(E.r):
            rows = []
            for j in range(E.r):
                A, B = rad.blocks[i, j], cur[j, k]
                if A.shape[0] == 0 or B.shape[0] == 0 or E.n(i, k) == 0:
                    continue
                P = E.products(i, j, k)
                rows.append(np.einsum("ax,by,xyz->abz", A, B, P).reshape(-1, E.n(i, k)) % p)
            if rows:
                out[i, k] = fp.row_basis(np.vstack(rows), p)
            else:
                out[i, k] = np.zeros((0, E.n(i, k)), dtype=np.int64)
    return out


def nilpotency_index(E: EndoAlgebra, rad: Radical, limit: int | None = None) -> int | None:
    """Smallest n with rad^n = 0, or None if not reached within ``limit`` steps."""
    limit = E.dim + 1 if limit is None else limit
    cur = rad.blocks
    for n in range(1, limit + 1):
        if all(b.shape[0] == 0 for b in cur.values()):
            return n
        cur = radical_power(E, rad, cur)
    return None


def quiver_of_endo(E: EndoAlgebra, rad: Radical | None = None) -> Quiver:
    """mult[i][j] = dim e_i (rad / rad^2) e_j = number of irreducible maps T_i -> T_j."""
    rad = radical(E) if rad is None else rad
    sq = radical_power(E, rad)
    M = np.zeros((E.r, E.r), dtype=int)
    for (i, j), b in rad.blocks.items():
        M[i, j] = b.shape[0] - sq[i, j].shape[0]
    return Quiver.from_matrix(M)


def cartan_matrix(E: EndoAlgebra) -> np.ndarray:
    """C[i][j] = dim Hom_K(T_i, T_j)."""
    return np.array([[E.n(i, j) for j in range(E.r)] for i in range(E.r)], dtype=int)


def det(M) -> int:
    return int(sympy.Matrix(np.asarray(M, dtype=int).tolist()).det())


# ---------------------------------------------------------------- generation by catalog maps

@dataclass
class GenerationEntry:
    i: int
    j: int
    full: int
    generated: int

    @property
    def equal(self) -> bool:
        return self.full == self.generated


@dataclass
class GenerationReport:
    entries: dict[tuple[int, int], GenerationEntry] = field(default_factory=dict)
    word_length: int = 0
    spans: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return all(e.equal for e in self.entries.values())

    def missing(self) -> list[GenerationEntry]:
        return [e for e in self.entries.values() if not e.equal]


def generation_report(E: EndoAlgebra, maps: list[ChainMap]) -> GenerationReport:
    """Span of all products of the given maps and the identities, grown to a fixpoint.

    Words are extended on the right by one generator per round; the round count
    at which nothing new appears is reported as the word length.
    """
    p = E.p
    gens: dict[tuple[int, int], list[np.ndarray]] = {}
    for f in maps:
        i, j = E.locate(f)
        gens.setdefault((i, j), []).append(E.block(E.class_of(f, i, j), i, j))
    for i in range(E.r):
        gens.setdefault((i, i), []).append(E.block(E.idempotents[i], i, i))
    G = {k: fp.row_basis(np.array(v), p) for k, v in gens.items()}
    span = {k: v.copy() for k, v in G.items()}
    frontier = dict(span)
    rounds = 1
    while frontier:
        new_front = {}
        for (i, j), W in frontier.items():
            for k in range(E.r):
                g = G.get((j, k))
                if g is None or g.shape[0] == 0 or W.shape[0] == 0 or E.n(i, k) == 0:
                    continue
                prod = np.einsum("ax,by,xyz->abz", W, g, E.products(i, j, k)).reshape(-1, E.n(i, k)) % p
                old = span.get((i, k), np.zeros((0, E.n(i, k)), dtype=np.int64))
                grown = fp.row_basis(np.vstack([old, prod]), p)
                if grown.shape[0] > old.shape[0]:
                    span[i, k] = grown
                    new_front[i, k] = grown
        frontier = new_front
        if frontier:
            rounds += 1
    rep = GenerationReport(word_length=rounds, spans=span)
    for i in range(E.r):
        for j in range(E.r):
            got = span.get((i, j))
            rep.entries[i, j] = GenerationEntry(i, j, E.n(i, j), 0 if got is None else got.shape[0])
    return rep


def generated_subspace(E: EndoAlgebra, maps: list[ChainMap], i: int, j: int) -> GenerationEntry:
    return generation_report(E, maps).entries[i, j]
