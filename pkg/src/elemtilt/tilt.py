"""Two-term complexes of projectives, chain maps, and Hom in the homotopy category.

A complex is a dict degree -> tuple of projective indices, with differentials
d^n : C^n -> C^{n+1} stored as polynomial matrices (see ``algebra``). A chain
map f : C -> D is a dict of degreewise matrices satisfying

    d_C^n f^{n+1} = f^n d_D^n        (maps compose left to right)

and it is null-homotopic when f^n = d_C^n s^{n+1} + s^n d_D^{n-1} for some
s^n : C^n -> D^{n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy

from . import fp
from .algebra import (
    BlockParams,
    Element,
    monomial_string,
    mult_operator,
    polymatmul,
    routing_mask,
)


# ---------------------------------------------------------------- complexes

class Complex:
    def __init__(self, params: BlockParams, terms: dict[int, tuple[int, ...]], diffs: dict[int, np.ndarray] | None = None):
        self.params = params
        self.terms = {k: tuple(v) for k, v in sorted(terms.items()) if len(v)}
        p = params.p
        self.diffs: dict[int, np.ndarray] = {}
        for k, d in (diffs or {}).items():
            d = np.asarray(d, dtype=np.int64) % p
            if d.shape != (len(self.term(k)), len(self.term(k + 1)), p, p):
                raise ValueError(f"differential in degree {k} has shape {d.shape}")
            if d.size and d.any():
                self.diffs[k] = d

    def term(self, k: int) -> tuple[int, ...]:
        return self.terms.get(k, ())

    def diff(self, k: int) -> np.ndarray:
        if k in self.diffs:
            return self.diffs[k]
        p = self.params.p
        return np.zeros((len(self.term(k)), len(self.term(k + 1)), p, p), dtype=np.int64)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def shift(self, n: int) -> "Complex":
        """C[n] with C[n]^k = C^{k+n} and differential (-1)^n d."""
        sign = -1 if n % 2 else 1
        terms = {k - n: v for k, v in self.terms.items()}
        diffs = {k - n: sign * d for k, d in self.diffs.items()}
        return Complex(self.params, terms, diffs)

    def rotate(self, c: int) -> "Complex":
        r = self.params.r
        terms = {k: tuple((i + c) % r for i in v) for k, v in self.terms.items()}
        return Complex(self.params, terms, dict(self.diffs))

    def signature(self) -> tuple:
        return (
            tuple(self.terms.items()),
            tuple((k, d.tobytes()) for k, d in sorted(self.diffs.items())),
        )

    def anchor(self) -> int:
        return self.terms[self.degrees[0]][0] if self.terms else 0

    def check(self) -> bool:
        """d^n d^{n+1} = 0 and every entry respects idempotent routing."""
        p = self.params.p
        for k, d in self.diffs.items():
            src, tgt = self.term(k), self.term(k + 1)
            for a, i in enumerate(src):
                for b, j in enumerate(tgt):
                    if np.any(d[a, b][~routing_mask(self.params, i, j)]):
                        return False
            if np.any(polymatmul(d, self.diff(k + 1), p)):
                return False
        return True


@dataclass(frozen=True)
class TiltComponent:
    """Stalk P_i in degree 0, two-term Q_i -> P_i in degrees 0, 1, or P_i alone in degree 1.

    ``slots`` names the deg0 summands: "s" for a stalk, "u"/"v" for the summands
    generated by x^k and y^l in a two-term component.
    """

    index: int
    deg0: tuple[int, ...]
    deg1: tuple[int, ...]
    d: np.ndarray
    slots: tuple[str, ...]
    params: BlockParams

    @cached_property
    def complex(self) -> Complex:
        terms = {0: self.deg0, 1: self.deg1}
        return Complex(self.params, terms, {0: self.d} if self.deg0 and self.deg1 else {})

    @property
    def kind(self) -> str:
        if not self.deg1:
            return "stalk"
        return "two-term" if self.deg0 else "degree-one stalk"

    def slot(self, name: str) -> int:
        return self.slots.index(name)

    def has(self, name: str) -> bool:
        return name in self.slots

    @property
    def double(self) -> bool:
        return self.slots == ("u", "v")

    def describe(self) -> str:
        if self.kind == "stalk":
            return f"T{self.index}: P{self.deg0[0]} (stalk, degree 0)"
        if self.kind == "degree-one stalk":
            return f"T{self.index}: 0 --> P{self.deg1[0]} (stalk, degree 1)"
        src = "(+)".join(f"P{i}" for i in self.deg0)
        entries = ";".join(element_string(self.params, self.d[a, 0]) for a in range(len(self.deg0)))
        return f"T{self.index}: {src} --({entries})--> P{self.deg1[0]}"


def element_string(params: BlockParams, arr: np.ndarray, base: int | None = None) -> str:
    arr = np.asarray(arr) % params.p
    terms = []
    for a, b in zip(*np.nonzero(arr)):
        c = int(arr[a, b])
        m = monomial_string(int(a), int(b), base)
        terms.append(m if c == 1 else f"{c}*{m}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------- arcs and the tilting complex

@dataclass(frozen=True)
class Arc:
    J: tuple[int, ...]
    u: int
    v: int
    r: int

    @property
    def j(self) -> int:
        return len(self.J) + 1

    def k(self, t: int) -> int:
        """Distance from u, in 1..j-1."""
        return self.J.index(t % self.r) + 1

    def l(self, t: int) -> int:
        """Distance to v, in 1..j-1."""
        return self.j - self.k(t)


@dataclass(frozen=True)
class ArcDecomposition:
    params: BlockParams
    I0: tuple[int, ...]
    arcs: tuple[Arc, ...]
    intervals: tuple[tuple[int, ...], ...]

    def arc_of(self, t: int) -> Arc:
        for arc in self.arcs:
            if t % self.params.r in arc.J:
                return arc
        raise KeyError(f"{t} lies in I0")

    def interval_ending(self, u: int) -> tuple[int, ...]:
        return next(iv for iv in self.intervals if iv[-1] == u)

    def interval_starting(self, v: int) -> tuple[int, ...]:
        return next(iv for iv in self.intervals if iv[0] == v)

    @property
    def m(self) -> int:
        return len(self.arcs)


def _cyclic_runs(members: set[int], r: int) -> list[tuple[int, ...]]:
    """Maximal cyclic runs of consecutive residues inside ``members``, each listed clockwise."""
    starts = sorted(t for t in members if (t - 1) % r not in members)
    runs = []
    for s in starts:
        run = [s]
        while (run[-1] + 1) % r in members:
            run.append((run[-1] + 1) % r)
        runs.append(tuple(run))
    return runs


def validate_i0(params: BlockParams, I0) -> tuple[int, ...]:
    vals = sorted({int(i) % params.r for i in I0})
    if len(vals) != len(list(I0)) or any(not 0 <= int(i) < params.r for i in I0):
        raise ValueError(f"I0 must list distinct residues in [0, {params.r})")
    if not vals:
        raise ValueError("I0 must be nonempty")
    if len(vals) == params.r:
        raise ValueError("I0 must be a proper subset of the residues")
    return tuple(vals)


def arc_decomposition(params: BlockParams, I0) -> ArcDecomposition:
    I0 = validate_i0(params, I0)
    r = params.r
    inside = set(I0)
    outside = set(range(r)) - inside
    arcs = tuple(
        Arc(J, (J[0] - 1) % r, (J[-1] + 1) % r, r) for J in _cyclic_runs(outside, r)
    )
    return ArcDecomposition(params, I0, arcs, tuple(_cyclic_runs(inside, r)))


@dataclass(frozen=True)
class MinimalKernel:
    t: int
    basis: tuple[tuple[int, int], ...]
    generators: tuple[tuple[int, int], ...]


def minimal_kernel(params: BlockParams, I0, t: int) -> MinimalKernel:
    """Submodule of P_t spanned by the monomials whose top index lies in I0.

    Monomial spans are submodules as soon as they are closed under
    multiplication by x and y, so the submodule generated by those monomials is
    their upward closure; generators are the divisibility-minimal ones.
    """
    p, r = params.p, params.r
    I0 = set(validate_i0(params, I0))
    if t % r in I0:
        raise ValueError(f"t={t} lies in I0")
    seeds = [(a, b) for a in range(p) for b in range(p) if (t - a + b) % r in I0]
    gens = sorted(
        {(a, b) for a, b in seeds if not any((c, d) != (a, b) and c <= a and d <= b for c, d in seeds)}
    )
    basis = sorted({(a, b) for a in range(p) for b in range(p) if any(c <= a and d <= b for c, d in gens)})
    return MinimalKernel(t % r, tuple(basis), tuple(gens))


def stalk(params: BlockParams, i: int, degree: int = 0) -> TiltComponent:
    p = params.p
    if degree == 0:
        return TiltComponent(i, (i,), (), np.zeros((1, 0, p, p), dtype=np.int64), ("s",), params)
    return TiltComponent(i, (), (i,), np.zeros((0, 1, p, p), dtype=np.int64), (), params)


def build_tilting_complex(params: BlockParams, I0) -> list[TiltComponent]:
    arcs = arc_decomposition(params, I0)
    p, r = params.p, params.r
    comps = []
    for t in range(r):
        if t in arcs.I0:
            comps.append(stalk(params, t))
            continue
        arc = arcs.arc_of(t)
        kern = minimal_kernel(params, arcs.I0, t)
        # generic presentation: one summand per generator, x-powers first
        gens = sorted(kern.generators, key=lambda ab: (ab[1], ab[0]))
        slots, deg0 = [], []
        d = np.zeros((len(gens), 1, p, p), dtype=np.int64)
        for n, (a, b) in enumerate(gens):
            if a and b:
                raise AssertionError(f"mixed kernel generator x^{a} y^{b} in P{t}")
            slots.append("u" if a else "v")
            deg0.append((t - a + b) % r)
            d[n, 0, a, b] = 1
        # closed form from the arc data
        k, l = arc.k(t), arc.l(t)
        expect = []
        if k <= p - 1:
            expect.append(("u", arc.u, (k, 0)))
        if l <= p - 1:
            expect.append(("v", arc.v, (0, l)))
        got = [(s, q, g) for s, q, g in zip(slots, deg0, gens)]
        if got != expect:
            raise AssertionError(f"kernel presentation of P{t} disagrees with arc form: {got} vs {expect}")
        if not gens:
            comps.append(stalk(params, t, degree=1))
        else:
            comps.append(TiltComponent(t, tuple(deg0), (t,), d, tuple(slots), params))
    return comps


def stalk_complex(params: BlockParams) -> list[TiltComponent]:
    """All components stalks in degree 0: the trivial tilt A itself."""
    return [stalk(params, t) for t in range(params.r)]


def diagram_case(p: int, j: int) -> int:
    if j > 2 * (p - 1):
        return 1
    if j > p - 1:
        return 2
    return 3


# ---------------------------------------------------------------- Hom spaces

class HomLayout:
    """Coordinates of degreewise maps C -> D (or C -> D shifted by ``offset``).

    With offset 0 this parametrises candidate chain maps; with offset -1 it
    parametrises homotopies s^k : C^k -> D^{k-1}.
    """

    def __init__(self, C: Complex, D: Complex, offset: int = 0):
        self.C, self.D, self.offset = C, D, offset
        p = C.params.p
        self.blocks = []
        self.full_offsets = {}
        pos = 0
        masked = []
        for k in sorted(set(C.terms) | {n - offset for n in D.terms}):
            src, tgt = C.term(k), D.term(k + offset)
            if not src or not tgt:
                continue
            self.blocks.append(k)
            self.full_offsets[k] = pos
            for a, i in enumerate(src):
                for b, j in enumerate(tgt):
                    mask = routing_mask(C.params, i, j).reshape(-1)
                    masked.append(pos + np.flatnonzero(mask))
                    pos += p * p
        self.full_size = pos
        self.coords = np.concatenate(masked) if masked else np.zeros(0, dtype=np.int64)
        self.size = len(self.coords)

    def shape(self, k: int) -> tuple[int, int, int, int]:
        p = self.C.params.p
        return len(self.C.term(k)), len(self.D.term(k + self.offset)), p, p

    def to_full(self, vec: np.ndarray) -> np.ndarray:
        full = np.zeros(vec.shape[:-1] + (self.full_size,), dtype=np.int64)
        full[..., self.coords] = vec
        return full

    def from_maps(self, maps: dict[int, np.ndarray]) -> np.ndarray:
        full = np.zeros(self.full_size, dtype=np.int64)
        for k in self.blocks:
            if k in maps:
                m = np.asarray(maps[k], dtype=np.int64)
                n = int(np.prod(self.shape(k)))
                full[self.full_offsets[k]: self.full_offsets[k] + n] = m.reshape(-1)
        vec = full[self.coords]
        spill = full.copy()
        spill[self.coords] = 0
        if spill.any():
            raise ValueError("map has entries violating idempotent routing")
        return vec % self.C.params.p

    def to_maps(self, vec: np.ndarray) -> dict[int, np.ndarray]:
        full = self.to_full(np.asarray(vec, dtype=np.int64))
        out = {}
        for k in self.blocks:
            n = int(np.prod(self.shape(k)))
            out[k] = full[self.full_offsets[k]: self.full_offsets[k] + n].reshape(self.shape(k))
        return out


def _left_operator(A: np.ndarray, n_cols: int, p: int) -> np.ndarray:
    """Matrix of Y -> A Y on row-vectorised Y of shape (J, n_cols, p, p)."""
    I, J = A.shape[:2]
    op = mult_operator(np.swapaxes(A, 0, 1), p).reshape(J, p * p, I, p * p)
    full = np.einsum("cmaz,bB->cbmaBz", op, np.eye(n_cols, dtype=np.int64))
    return full.reshape(J * n_cols * p * p, I * n_cols * p * p)


def _right_operator(B: np.ndarray, n_rows: int, p: int) -> np.ndarray:
    """Matrix of X -> X B on row-vectorised X of shape (n_rows, J, p, p)."""
    return np.kron(np.eye(n_rows, dtype=np.int64), mult_operator(B, p))


class HomK:
    """Hom_K(C, D): chain maps modulo null-homotopic ones, with a representative basis."""

    def __init__(self, C: Complex, D: Complex):
        self.C, self.D = C, D
        p = C.params.p
        self.p = p
        self.layout = HomLayout(C, D)
        self.Z = self._chain_maps()
        self.B = self._null_homotopic()
        self.raw_dim = self.Z.shape[0]
        self.null_dim = self.B.shape[0]
        self.dim = self.raw_dim - self.null_dim
        self.rep_vectors = fp.extend_basis(self.B, self.Z, p)
        assert self.rep_vectors.shape[0] == self.dim
        self._coords = fp.Coordinates(np.vstack([self.B, self.rep_vectors]), p)

    def _constraint_matrix(self) -> np.ndarray:
        """Rows: layout coordinates; columns: entries of d_C f - f d_D in every degree."""
        C, D, L, p = self.C, self.D, self.layout, self.p
        blocks = []
        for k in sorted(set(C.terms) | set(D.terms) | {n - 1 for n in D.terms}):
            rows_out, cols_out = len(C.term(k)), len(D.term(k + 1))
            if not rows_out or not cols_out:
                continue
            M = np.zeros((L.full_size, rows_out * cols_out * p * p), dtype=np.int64)
            if k + 1 in L.full_offsets and k in C.diffs:
                op = _left_operator(C.diff(k), cols_out, p)
                o = L.full_offsets[k + 1]
                M[o: o + op.shape[0]] += op
            if k in L.full_offsets and k in D.diffs:
                op = _right_operator(D.diff(k), rows_out, p)
                o = L.full_offsets[k]
                M[o: o + op.shape[0]] -= op
            blocks.append(M)
        if not blocks:
            return np.zeros((L.size, 0), dtype=np.int64)
        return np.hstack(blocks)[L.coords] % p

    def _chain_maps(self) -> np.ndarray:
        M = self._constraint_matrix()
        if M.shape[1] == 0:
            return np.eye(self.layout.size, dtype=np.int64)
        return fp.left_nullspace(M, self.p)

    def _homotopy_matrix(self) -> np.ndarray:
        """Rows: homotopy coordinates; columns: layout coordinates of d s + s d."""
        C, D, L, p = self.C, self.D, self.layout, self.p
        S = HomLayout(C, D, offset=-1)
        if S.size == 0:
            return np.zeros((0, L.size), dtype=np.int64)
        M = np.zeros((S.full_size, L.full_size), dtype=np.int64)
        for k in L.blocks:
            rows_out, cols_out = len(C.term(k)), len(D.term(k))
            o_f = L.full_offsets[k]
            n_f = rows_out * cols_out * p * p
            if k + 1 in S.full_offsets and k in C.diffs:
                op = _left_operator(C.diff(k), cols_out, p)
                o = S.full_offsets[k + 1]
                M[o: o + op.shape[0], o_f: o_f + n_f] += op
            if k in S.full_offsets and (k - 1) in D.diffs:
                op = _right_operator(D.diff(k - 1), rows_out, p)
                o = S.full_offsets[k]
                M[o: o + op.shape[0], o_f: o_f + n_f] += op
        return M[S.coords][:, L.coords] % p

    def _null_homotopic(self) -> np.ndarray:
        H = self._homotopy_matrix()
        if H.shape[0] == 0:
            return np.zeros((0, self.layout.size), dtype=np.int64)
        return fp.row_basis(H, self.p)

    def classes(self, vecs: np.ndarray) -> np.ndarray:
        """Coordinates of chain-map vectors modulo null-homotopy, in the rep basis."""
        c = self._coords(np.asarray(vecs, dtype=np.int64))
        return c[..., self.null_dim:]

    def is_null(self, vec: np.ndarray) -> bool:
        vec = np.asarray(vec, dtype=np.int64) % self.p
        if self.B.shape[0] == 0:
            return not vec.any()
        return fp.rank(np.vstack([self.B, vec[None, :]]), self.p) == self.null_dim

    def is_cycle(self, vec: np.ndarray) -> bool:
        if self.Z.shape[0] == 0:
            return not np.asarray(vec).any()
        return bool(self._z_coords().contains(vec)[0])

    @cached_property
    def _zc(self):
        return fp.Coordinates(fp.row_basis(self.Z, self.p), self.p)

    def _z_coords(self):
        return self._zc


_HOM_CACHE: dict[tuple, HomK] = {}


def _hom_space(C: Complex, D: Complex) -> HomK:
    c = C.anchor()
    Cn, Dn = C.rotate(-c), D.rotate(-c)
    key = (C.params, Cn.signature(), Dn.signature())
    hom = _HOM_CACHE.get(key)
    if hom is None:
        hom = HomK(Cn, Dn)
        _HOM_CACHE[key] = hom
    return hom


def clear_cache() -> None:
    _HOM_CACHE.clear()


def _as_complex(X) -> Complex:
    return X.complex if isinstance(X, TiltComponent) else X


# ---------------------------------------------------------------- chain maps

class ChainMap:
    def __init__(self, source, target, maps: dict[int, np.ndarray] | None = None):
        self.source = _as_complex(source)
        self.target = _as_complex(target)
        p = self.source.params.p
        self.maps: dict[int, np.ndarray] = {}
        for k, m in (maps or {}).items():
            m = np.asarray(m, dtype=np.int64) % p
            want = (len(self.source.term(k)), len(self.target.term(k)), p, p)
            if m.shape != want:
                raise ValueError(f"degree {k} block has shape {m.shape}, expected {want}")
            self.maps[k] = m

    @property
    def params(self) -> BlockParams:
        return self.source.params

    def component(self, k: int) -> np.ndarray:
        if k in self.maps:
            return self.maps[k]
        p = self.params.p
        return np.zeros((len(self.source.term(k)), len(self.target.term(k)), p, p), dtype=np.int64)

    def then(self, other: "ChainMap") -> "ChainMap":
        return compose_chain_maps(self, other)

    def _combine(self, other: "ChainMap", sign: int) -> "ChainMap":
        if self.source.signature() != other.source.signature() or self.target.signature() != other.target.signature():
            raise ValueError("chain maps have different source or target")
        degs = set(self.maps) | set(other.maps)
        return ChainMap(self.source, self.target, {k: self.component(k) + sign * other.component(k) for k in degs})

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rmul__(self, c: int):
        return ChainMap(self.source, self.target, {k: c * m for k, m in self.maps.items()})

    def vector(self) -> np.ndarray:
        return HomLayout(self.source, self.target).from_maps(self.maps)

    def is_zero(self) -> bool:
        return all(not m.any() for m in self.maps.values())

    def describe(self) -> str:
        lines = []
        for k in sorted(self.maps):
            m = self.maps[k]
            if not m.any():
                continue
            for a, i in enumerate(self.source.term(k)):
                for b, j in enumerate(self.target.term(k)):
                    if m[a, b].any():
                        lines.append(f"f{k}[P{i}->P{j}] = {element_string(self.params, m[a, b])}")
        return "; ".join(lines) if lines else "0"


def identity_map(X) -> ChainMap:
    C = _as_complex(X)
    p = C.params.p
    maps = {}
    for k, idx in C.terms.items():
        m = np.zeros((len(idx), len(idx), p, p), dtype=np.int64)
        for a in range(len(idx)):
            m[a, a, 0, 0] = 1
        maps[k] = m
    return ChainMap(C, C, maps)


def compose_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """First f, then g."""
    if f.target.signature() != g.source.signature():
        raise ValueError("middle complexes differ")
    p = f.params.p
    maps = {}
    for k in f.source.terms:
        if k in f.target.terms and k in g.target.terms:
            maps[k] = polymatmul(f.component(k), g.component(k), p)
    return ChainMap(f.source, g.target, maps)


def is_chain_map(f: ChainMap) -> bool:
    C, D, p = f.source, f.target, f.params.p
    for k in set(C.terms) | set(D.terms):
        for n in (k,):
            src = C.term(n)
            for a, i in enumerate(src):
                for b, j in enumerate(D.term(n)):
                    if np.any(f.component(n)[a, b][~routing_mask(f.params, i, j)]):
                        return False
    for k in set(C.terms) | {n - 1 for n in D.terms}:
        if not C.term(k) or not D.term(k + 1):
            continue
        lhs = polymatmul(C.diff(k), f.component(k + 1), p)
        rhs = polymatmul(f.component(k), D.diff(k), p)
        if np.any((lhs - rhs) % p):
            return False
    return True


def chain_map_space(Ti, Tj) -> list[ChainMap]:
    C, D = _as_complex(Ti), _as_complex(Tj)
    hom = _hom_space(C, D)
    L = HomLayout(C, D)
    return [ChainMap(C, D, L.to_maps(z)) for z in hom.Z]


def null_homotopic_subspace(Ti, Tj) -> list[ChainMap]:
    C, D = _as_complex(Ti), _as_complex(Tj)
    hom = _hom_space(C, D)
    L = HomLayout(C, D)
    return [ChainMap(C, D, L.to_maps(b)) for b in hom.B]


@dataclass(frozen=True)
class HomKSpace:
    dim: int
    raw_dim: int
    null_dim: int
    reps: tuple[ChainMap, ...]


def hom_K(Ti, Tj) -> HomKSpace:
    C, D = _as_complex(Ti), _as_complex(Tj)
    hom = _hom_space(C, D)
    L = HomLayout(C, D)
    reps = tuple(ChainMap(C, D, L.to_maps(v)) for v in hom.rep_vectors)
    return HomKSpace(hom.dim, hom.raw_dim, hom.null_dim, reps)


def hom_dim(Ti, Tj) -> int:
    return _hom_space(_as_complex(Ti), _as_complex(Tj)).dim


def hom_space(Ti, Tj) -> HomK:
    """The cached quotient-space object (vectors in the rotation-normalised layout)."""
    return _hom_space(_as_complex(Ti), _as_complex(Tj))


def is_null_homotopic(f: ChainMap) -> bool:
    if not is_chain_map(f):
        raise ValueError("not a chain map")
    return _hom_space(f.source, f.target).is_null(f.vector())


def class_of(f: ChainMap) -> np.ndarray:
    """Coordinates of the homotopy class of f in the representative basis."""
    if not is_chain_map(f):
        raise ValueError("not a chain map")
    return _hom_space(f.source, f.target).classes(f.vector())


# ---------------------------------------------------------------- tilting check

@dataclass(frozen=True)
class TiltingReport:
    shift_failures: tuple[tuple[int, int, int, int], ...]  # (i, j, n, dim) with Hom(T_i, T_j[n]) != 0
    k0_matrix: tuple[tuple[int, ...], ...]
    k0_det: int
    note: str = (
        "Hom(T, T[n]) = 0 is checked exactly for n = +-1; |n| >= 2 is vacuous because the "
        "complexes have length two. Generation is certified only through the K0 class "
        "matrix being unimodular, which is necessary but not sufficient."
    )

    @property
    def shifts_vanish(self) -> bool:
        return not self.shift_failures

    @property
    def k0_unimodular(self) -> bool:
        return abs(self.k0_det) == 1

    @property
    def passed(self) -> bool:
        return self.shifts_vanish and self.k0_unimodular


def k0_matrix(T: list[TiltComponent]) -> np.ndarray:
    r = len(T)
    M = np.zeros((r, r), dtype=int)
    for row, comp in enumerate(T):
        for i in comp.deg0:
            M[row, i] += 1
        for i in comp.deg1:
            M[row, i] -= 1
    return M


def verify_tilting(T: list[TiltComponent]) -> TiltingReport:
    for comp in T:
        degs = comp.complex.degrees
        assert not degs or degs[-1] - degs[0] <= 1, "components must have length at most two"
    failures = []
    for a, Ti in enumerate(T):
        for b, Tj in enumerate(T):
            for n in (1, -1):
                dim = hom_dim(Ti.complex, Tj.complex.shift(n))
                if dim:
                    failures.append((a, b, n, dim))
    M = k0_matrix(T)
    det = int(sympy.Matrix(M).det())
    return TiltingReport(tuple(failures), tuple(tuple(int(v) for v in row) for row in M), det)
