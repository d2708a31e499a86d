"""The basic algebra A(p, r): x, y with x^p = y^p = 0, xy = yx, routed by r idempotents.

P_t = A e_t has basis x^a y^b e_t (0 <= a, b < p). The simple on top of that
monomial is t - a + b mod r, so x moves P_t -> P_{t+1} and y moves P_t -> P_{t-1}.

Internally an element of P_t is a (p, p) integer array indexed [a, b]. A map
between direct sums of projectives is an array of shape (n_src, n_tgt, p, p)
holding one element per (source, target) pair. Maps compose left to right:
``polymatmul(f, g)`` is "first f, then g".
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class BlockParams:
    p: int
    r: int

    def ovr(self, n: int) -> int:
        return n % self.r

    @property
    def residues(self) -> range:
        return range(self.r)


def make_algebra(p: int, r: int) -> BlockParams:
    if not isinstance(p, (int, np.integer)) or not isinstance(r, (int, np.integer)):
        raise TypeError("p and r must be integers")
    if p == 2:
        raise ValueError("p must be odd (got p=2)")
    if not _is_prime(p):
        raise ValueError(f"p must be prime (got p={p})")
    if r < 2:
        raise ValueError(f"r must be at least 2 (got r={r})")
    if gcd(p, r) != 1:
        raise ValueError(f"p divides r (p={p}, r={r}); need gcd(p, r) = 1")
    return BlockParams(int(p), int(r))


def residue_sub(n: int, params: BlockParams) -> int:
    return n % params.r


# ---------------------------------------------------------------- monomials

@dataclass(frozen=True, order=True)
class Monomial:
    a: int
    b: int
    t: int

    def top(self, params: BlockParams) -> int:
        return (self.t - self.a + self.b) % params.r

    def __str__(self) -> str:
        return monomial_string(self.a, self.b, self.t)


def monomial_string(a: int, b: int, t: int | None = None) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    if t is not None:
        parts.append(f"e_{t}")
    return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class Element:
    """F_p-combination of monomials of one projective P_base."""

    base: int
    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def build(cls, params: BlockParams, base: int, terms: Mapping[tuple[int, int], int] | Iterable):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            if a >= params.p or b >= params.p:
                continue
            acc[(a, b)] = (acc.get((a, b), 0) + c) % params.p
        base = base % params.r
        ts = tuple((Monomial(a, b, base), c) for (a, b), c in sorted(acc.items()) if c)
        return cls(base, ts)

    @classmethod
    def from_array(cls, params: BlockParams, base: int, arr: np.ndarray) -> "Element":
        arr = np.asarray(arr) % params.p
        return cls.build(params, base, {(int(a), int(b)): int(arr[a, b]) for a, b in zip(*np.nonzero(arr))})

    def to_array(self, params: BlockParams) -> np.ndarray:
        out = np.zeros((params.p, params.p), dtype=np.int64)
        for m, c in self.terms:
            out[m.a, m.b] = c
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "Element", params: BlockParams) -> "Element":
        if self.base != other.base and self.terms and other.terms:
            raise ValueError("cannot add elements of different projectives")
        base = self.base if self.terms else other.base
        acc = [((m.a, m.b), c) for m, c in self.terms + other.terms]
        return Element.build(params, base, acc)

    def scale(self, c: int, params: BlockParams) -> "Element":
        return Element.build(params, self.base, [((m.a, m.b), c * k) for m, k in self.terms])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.terms:
            out.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(out)


def multiply(m1: Element, m2: Element, params: BlockParams) -> Element:
    """Product m1 * m2 where m1 lives in e_i A e_k and m2 in e_k A e_l.

    A pair of monomials contributes only when the base of the left one equals
    the top index of the right one; otherwise that pair routes to zero.
    """
    acc: dict[tuple[int, int], int] = {}
    for n1, c1 in m1.terms:
        for n2, c2 in m2.terms:
            if n1.t != n2.top(params):
                continue
            a, b = n1.a + n2.a, n1.b + n2.b
            if a >= params.p or b >= params.p:
                continue
            acc[(a, b)] = (acc.get((a, b), 0) + c1 * c2) % params.p
    return Element.build(params, m2.base, acc)


# ---------------------------------------------------------------- Hom(P_i, P_k)

@dataclass(frozen=True, order=True)
class HomGenerator:
    """Homogeneous map P_i -> P_k sending e_i to x^s (xy)^q e_k (kind X) or y^s (xy)^q e_k (kind Y)."""

    kind: str
    i: int
    k: int
    s: int
    q: int

    @property
    def exponents(self) -> tuple[int, int]:
        if self.kind == "X":
            return self.s + self.q, self.q
        return self.q, self.s + self.q

    def element(self, params: BlockParams) -> Element:
        return Element.build(params, self.k, {self.exponents: 1})

    def __str__(self) -> str:
        a, b = self.exponents
        return f"{monomial_string(a, b)}: P{self.i} -> P{self.k}"


def normal_form(params: BlockParams, i: int, k: int, a: int, b: int) -> HomGenerator | None:
    """The generator with exponents (a, b) from P_i to P_k, or None if it vanishes."""
    if a >= params.p or b >= params.p:
        return None
    if (a - b - (k - i)) % params.r:
        raise ValueError(f"x^{a} y^{b} does not route P{i} -> P{k}")
    if a >= b:
        return HomGenerator("X", i % params.r, k % params.r, a - b, b)
    return HomGenerator("Y", i % params.r, k % params.r, b - a, a)


@dataclass(frozen=True)
class HomSpace:
    i: int
    k: int
    basis: tuple[HomGenerator, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def hom_basis(params: BlockParams, i: int, k: int) -> HomSpace:
    p, r = params.p, params.r
    i, k = i % r, k % r
    gens = []
    for kind, s0 in (("X", (k - i) % r), ("Y", (i - k) % r)):
        h = 0
        while s0 + h * r <= p - 1:
            s = s0 + h * r
            for q in range(p - s):
                if kind == "Y" and s == 0:
                    continue  # (xy)^q already listed as kind X
                gens.append(HomGenerator(kind, i, k, s, q))
            h += 1
    return HomSpace(i, k, tuple(gens))


def routing_mask(params: BlockParams, i: int, k: int) -> np.ndarray:
    """Boolean (p, p) mask of monomials x^a y^b allowed in Hom(P_i, P_k)."""
    a = np.arange(params.p)
    return ((a[:, None] - a[None, :] - (k - i)) % params.r) == 0


def compose_hom(params: BlockParams, g1, g2) -> dict[HomGenerator, int]:
    """First g1 : P_i -> P_k, then g2 : P_k -> P_l, as a combination of generators."""
    c1 = _as_combination(g1)
    c2 = _as_combination(g2)
    out: dict[HomGenerator, int] = {}
    for h1, a1 in c1.items():
        for h2, a2 in c2.items():
            if h1.k != h2.i:
                raise ValueError(f"middle residues differ: P{h1.k} vs P{h2.i}")
            e1, e2 = h1.exponents, h2.exponents
            g = normal_form(params, h1.i, h2.k, e1[0] + e2[0], e1[1] + e2[1])
            if g is None:
                continue
            out[g] = (out.get(g, 0) + a1 * a2) % params.p
    return {g: c for g, c in sorted(out.items()) if c}


def _as_combination(g) -> dict[HomGenerator, int]:
    if isinstance(g, HomGenerator):
        return {g: 1}
    return dict(g)


# ---------------------------------------------------------------- polynomial-matrix kernels

def mono(params: BlockParams, a: int, b: int, c: int = 1) -> np.ndarray:
    out = np.zeros((params.p, params.p), dtype=np.int64)
    if a < params.p and b < params.p and a >= 0 and b >= 0:
        out[a, b] = c % params.p
    return out


@lru_cache(maxsize=None)
def mul_tensor(p: int) -> np.ndarray:
    """M[n, m, z] = 1 when monomial n times monomial m is monomial z (flat p*p index)."""
    M = np.zeros((p * p, p * p, p * p), dtype=np.int64)
    for a in range(p):
        for b in range(p):
            for c in range(p - a):
                for d in range(p - b):
                    M[a * p + b, c * p + d, (a + c) * p + (b + d)] = 1
    return M


def mult_operator(entries: np.ndarray, p: int) -> np.ndarray:
    """For a map B of shape (J, K, p, p), the (J p^2, K p^2) matrix of X -> X * B on rows."""
    J, K = entries.shape[:2]
    flat = entries.reshape(J, K, p * p)
    op = np.einsum("jkn,nmz->jmkz", flat, mul_tensor(p), optimize=True)
    return op.reshape(J * p * p, K * p * p) % p


def polymatmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Product of polynomial matrices: (..., I, J, p, p) x (J, K, p, p) -> (..., I, K, p, p).

    Loops over the nonzero coefficients of the sparser factor and adds shifted
    copies of the other one, which is fast for the monomial-heavy maps used here.
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    I, J = A.shape[-4:-2]
    J2, K = B.shape[:2]
    if J != J2:
        raise ValueError(f"inner sizes differ: {J} vs {J2}")
    out = np.zeros(A.shape[:-4] + (I, K, p, p), dtype=np.int64)
    if J == 0:
        return out
    for j, k, a, b in zip(*np.nonzero(B % p)):
        c = B[j, k, a, b]
        out[..., :, k, a:, b:] += c * A[..., :, j, : p - a, : p - b]
    return out % p


# ---------------------------------------------------------------- quivers

@dataclass(frozen=True)
class Quiver:
    """mult[i][j] counts arrows i -> j."""

    n: int
    mult: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, M) -> "Quiver":
        M = np.asarray(M, dtype=int)
        return cls(M.shape[0], tuple(tuple(int(v) for v in row) for row in M))

    def arrows(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for i, row in enumerate(self.mult) for j, c in enumerate(row) if c]

    @property
    def total(self) -> int:
        return sum(c for _, _, c in self.arrows())


def quiver_of_block(params: BlockParams) -> Quiver:
    """Arrows t -> t+1 (x) and t -> t-1 (y); read off degree-one monomials."""
    r = params.r
    M = np.zeros((r, r), dtype=int)
    for t in range(r):
        M[t, (t + 1) % r] += 1
        M[t, (t - 1) % r] += 1
    return Quiver.from_matrix(M)


def mckay_quiver(r: int, a: int = 1) -> Quiver:
    """McKay graph of C_r for the character chi = theta_a + theta_{-a}, by character arithmetic.

    Arrows j -> i counted by (theta_i, chi theta_j) with the usual inner product.
    """
    zeta = np.exp(2j * np.pi / r)
    g = np.arange(r)
    theta = np.array([zeta ** (i * g) for i in range(r)])
    chi = theta[a % r] + theta[(-a) % r]
    M = np.zeros((r, r), dtype=int)
    for i in range(r):
        for j in range(r):
            ip = np.sum(np.conj(theta[i]) * chi * theta[j]) / r
            M[j, i] = int(round(ip.real))
    return Quiver.from_matrix(M)


def block_cartan(params: BlockParams) -> np.ndarray:
    """C[i][k] = dim Hom(P_i, P_k)."""
    r = params.r
    return np.array([[hom_basis(params, i, k).dim for k in range(r)] for i in range(r)], dtype=int)


# ---------------------------------------------------------------- group algebra link

def _order_mod(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def eigen_generators(p: int, r: int, action_exponent: int) -> tuple[np.ndarray, np.ndarray]:
    """Radical generators of F_p[C_p] x F_p[C_p] that are eigenvectors for C_r.

    The C_r generator acts on the first factor by c -> c^lam and on the second by
    d -> d^(lam^-1). Both returned vectors are sum_k k^-1 c^k (index = power, entry
    0 is the constant term); conjugation scales x by lam and y by lam^-1.
    """
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime (got {p})")
    if (p - 1) % r:
        raise ValueError(f"r={r} does not divide p-1={p - 1}: no r-th roots of unity in F_{p}")
    lam = action_exponent % p
    if lam == 0 or _order_mod(lam, p) != r:
        raise ValueError(f"{action_exponent} is not a primitive {r}-th root of unity mod {p}")
    x = np.zeros(p, dtype=np.int64)
    for k in range(1, p):
        x[k] = pow(k, -1, p)
    return x, x.copy()


def act(coeffs: np.ndarray, exponent: int, p: int) -> np.ndarray:
    """Apply c -> c^exponent to an element of F_p[C_p]."""
    out = np.zeros(p, dtype=np.int64)
    for k, c in enumerate(coeffs):
        out[(k * exponent) % p] += c
    return out % p
