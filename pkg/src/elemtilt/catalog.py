"""Named chain maps between components of T(I0), with their applicability predicates.

Every constructor takes a site (residues, side, exponents) and free scalars,
checks its predicate and returns an explicit ChainMap. ``applicable_ids``
enumerates candidate sites and keeps the ones whose predicate holds, so the
predicates live in exactly one place.

Notation for one arc: J = (u+1, ..., v-1), j = |J| + 1, and for t in J
k(t) = t - u, l(t) = v - t. T_t has a u-summand iff k <= p-1 and a v-summand
iff l <= p-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .algebra import BlockParams, HomGenerator, hom_basis, mono
from .tilt import (
    Arc,
    ArcDecomposition,
    ChainMap,
    TiltComponent,
    arc_decomposition,
    build_tilting_complex,
    diagram_case,
    is_chain_map,
    is_null_homotopic,
)

TAGS = (
    "Adjacent", "Gamma", "EpsilonU", "EpsilonV", "MuU", "NuV", "Xi1", "Xi2",
    "B1", "B2", "C1", "C2", "C3", "D1", "D2", "D3", "E1", "E2", "E3", "E4", "E5",
    # additions: long stalk maps of Diagrams 1-2, jump maps of Diagram 3, the xy
    # loop on an isolated stalk, the two relation-bearing combinations, and the
    # projections of a two-term component onto its own summands
    "LongU", "LongV", "Jump", "StalkLoop", "B1B2", "C2Comb", "ProjU", "ProjV",
    # extended list only: single-slot maps between a stalk and a two-term component
    "StalkIn", "StalkOut",
)


class Inapplicable(ValueError):
    pass


@dataclass(frozen=True)
class CatalogMapId:
    tag: str
    site: tuple[tuple[str, object], ...]
    coeffs: tuple[tuple[str, int], ...] = ()

    def get(self, name: str, default=None):
        return dict(self.site).get(name, default)

    def coeff(self, name: str, default: int = 1) -> int:
        return dict(self.coeffs).get(name, default)

    def __str__(self) -> str:
        site = ",".join(f"{k}={v}" for k, v in self.site)
        co = ",".join(f"{k}={v}" for k, v in self.coeffs)
        return f"{self.tag}[{site}]" + (f"{{{co}}}" if co else "")


@dataclass(frozen=True)
class CatalogInstance:
    id: CatalogMapId
    map: ChainMap
    expect_null: bool
    notes: tuple[tuple[str, object], ...] = ()


def mid(tag: str, coeffs: dict | None = None, **site) -> CatalogMapId:
    return CatalogMapId(tag, tuple(site.items()), tuple((coeffs or {}).items()))


# ---------------------------------------------------------------- context

class _Ctx:
    def __init__(self, params: BlockParams, I0):
        self.params = params
        self.arcs: ArcDecomposition = arc_decomposition(params, I0)
        self.T: list[TiltComponent] = build_tilting_complex(params, I0)

    def arc(self, first: int) -> Arc:
        for a in self.arcs.arcs:
            if a.J[0] == first:
                return a
        raise Inapplicable(f"no arc starting at {first}")

    def P(self, a: int, b: int, c: int = 1) -> np.ndarray:
        return mono(self.params, a, b, c)

    def map(self, src: int, tgt: int, f0: dict, f1: np.ndarray | None = None) -> ChainMap:
        """Chain map T_src -> T_tgt from slot-named degree-0 entries and a degree-1 entry."""
        p = self.params.p
        S, D = self.T[src], self.T[tgt]
        m0 = np.zeros((len(S.deg0), len(D.deg0), p, p), dtype=np.int64)
        for (a, b), e in f0.items():
            m0[S.slot(a), D.slot(b)] += e
        maps = {0: m0}
        if f1 is not None and np.any(f1):
            if not (S.deg1 and D.deg1):
                raise AssertionError("degree-one entry between components without degree one")
            maps[1] = np.asarray(f1, dtype=np.int64).reshape(1, 1, p, p)
        return ChainMap(S.complex, D.complex, maps)


@lru_cache(maxsize=256)
def _context(params: BlockParams, I0: tuple[int, ...]) -> _Ctx:
    return _Ctx(params, I0)


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise Inapplicable(what)


def _in_arc(arc: Arc, t: int) -> None:
    _need(t in arc.J, f"t={t} must lie in the arc {arc.J}")


# ---------------------------------------------------------------- A: adjacent and stalk maps

def _alpha(ctx: _Ctx, arc: Arc, t: int, tt: int):
    """Adjacent map T_t -> T_tt for neighbours in the arc (either direction)."""
    p, T = ctx.params.p, ctx.T
    _in_arc(arc, t)
    _in_arc(arc, tt)
    fwd = arc.k(tt) == arc.k(t) + 1
    _need(fwd or arc.k(tt) == arc.k(t) - 1, "alpha needs adjacent residues")
    S, D = T[t], T[tt]
    f0 = {}
    if S.has("u") and D.has("u"):
        f0[("u", "u")] = ctx.P(0, 0) if fwd else ctx.P(1, 1)
    if S.has("v") and D.has("v"):
        f0[("v", "v")] = ctx.P(1, 1) if fwd else ctx.P(0, 0)
    f1 = ctx.P(1, 0) if fwd else ctx.P(0, 1)
    if S.double and D.double:
        tag = "Xi1" if fwd else "Xi2"
    elif S.double and not fwd and D.slots == ("u",):
        tag = "MuU"
    elif S.double and fwd and D.slots == ("v",):
        tag = "NuV"
    else:
        tag = "Adjacent"
    return tag, ctx.map(t, tt, f0, f1)


def build_alpha(ctx, s, c):
    arc = ctx.arc(s["arc"])
    tag, f = _alpha(ctx, arc, s["t"], s["tt"])
    return f, False, {"tag": tag}


def build_pi(ctx, s, c):
    arc = ctx.arc(s["arc"])
    side = s["side"]
    t = arc.J[0] if side == "u" else arc.J[-1]
    w = arc.u if side == "u" else arc.v
    return ctx.map(t, w, {(side, "s"): ctx.P(0, 0)}), False, {}


def build_epsilon(ctx, s, c):
    """Stalk P_u -> T_{u+min(p-1, j-1)} with (xy, -x^j); dually P_v with (-y^j, xy)."""
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    side, j = s["side"], arc.j
    reach = min(p - 1, j - 1)
    if side == "u":
        t, w = arc.J[reach - 1], arc.u
        f0 = {("s", "u"): ctx.P(1, 1)}
        if ctx.T[t].has("v"):
            f0[("s", "v")] = ctx.P(j, 0, -1)
    else:
        t, w = arc.J[-reach], arc.v
        f0 = {("s", "v"): ctx.P(1, 1)}
        if ctx.T[t].has("u"):
            f0[("s", "u")] = ctx.P(0, j, -1)
    want = ("Epsilon" if j <= p else "Long") + side.upper()
    return ctx.map(w, t, f0), False, {"tag": want}


def build_jump(ctx, s, c):
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    _need(arc.j <= p - 1, "jump maps need j <= p-1")
    if s["side"] == "u":
        return ctx.map(arc.u, arc.v, {("s", "s"): ctx.P(arc.j, 0)}), False, {}
    return ctx.map(arc.v, arc.u, {("s", "s"): ctx.P(0, arc.j)}), False, {}


def build_proj(ctx, s, c):
    """Projection of T_t onto its own u- (or v-) summand, a map to the stalk P_u (or P_v)."""
    arc = ctx.arc(s["arc"])
    t, side = s["t"], s["side"]
    _in_arc(arc, t)
    _need(ctx.T[t].has(side), f"T_{t} has no {side}-summand")
    w = arc.u if side == "u" else arc.v
    return ctx.map(t, w, {(side, "s"): ctx.P(0, 0)}), False, {}


# ---------------------------------------------------------------- interval maps

def build_gamma(ctx, s, c):
    r = ctx.params.r
    a, b = s["src"], s["tgt"]
    I0 = set(ctx.arcs.I0)
    _need(a in I0 and b in I0, "gamma joins two residues of I0")
    if (b - a) % r == 1:
        e = ctx.P(1, 0)
    elif (a - b) % r == 1:
        e = ctx.P(0, 1)
    else:
        raise Inapplicable("gamma joins adjacent residues")
    return ctx.map(a, b, {("s", "s"): e}), False, {}


def build_stalk_loop(ctx, s, c):
    w = s["w"]
    _need(any(iv == (w,) for iv in ctx.arcs.intervals), "xy loop needs an isolated stalk")
    return ctx.map(w, w, {("s", "s"): ctx.P(1, 1)}), False, {}


def build_e5(ctx, s, c):
    p, r = ctx.params.p, ctx.params.r
    _need(ctx.arcs.m > 1, "E5 needs more than one arc")
    _need(r < p, "E5 needs r < p")
    iv = next((iv for iv in ctx.arcs.intervals if iv[0] == s["first"]), None)
    _need(iv is not None, "E5 site must be an I0 interval")
    first, last = iv[0], iv[-1]
    n = (first - last) % r
    _need(n < p, "E5 needs the wrap-around exponent below p")
    if s["side"] == "x":
        return ctx.map(last, first, {("s", "s"): ctx.P(n, 0)}), False, {}
    return ctx.map(first, last, {("s", "s"): ctx.P(0, n)}), False, {}


# ---------------------------------------------------------------- B, C, D: self-maps of double components

def _double(ctx, arc, t):
    _in_arc(arc, t)
    _need(ctx.T[t].double, f"T_{t} must have two summands")


def _b1(ctx, arc, t, d0):
    k, l, j = arc.k(t), arc.l(t), arc.j
    return {("u", "u"): ctx.P(l, l, -d0), ("u", "v"): ctx.P(j, 0, d0)}


def _b2(ctx, arc, t, c0):
    k, l, j = arc.k(t), arc.l(t), arc.j
    return {("v", "u"): ctx.P(0, j, c0), ("v", "v"): ctx.P(k, k, -c0)}


def build_b(ctx, s, c, which):
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    t = s["t"]
    _double(ctx, arc, t)
    _need(arc.j <= p - 1, "B maps need j <= p-1")
    f0 = _b1(ctx, arc, t, c.get("d0", 1)) if which == 1 else _b2(ctx, arc, t, c.get("c0", 1))
    return ctx.map(t, t, f0), False, {}


def build_b1b2(ctx, s, c):
    """B.1 + B.2 with c0 = -d0, taken literally (no degree matching)."""
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    t = s["t"]
    _double(ctx, arc, t)
    _need(arc.j <= p - 1, "B maps need j <= p-1")
    d0 = c.get("d0", 1)
    f0 = _b1(ctx, arc, t, d0)
    for key, e in _b2(ctx, arc, t, -d0).items():
        f0[key] = f0.get(key, 0) + e
    return ctx.map(t, t, f0), True, {"k": arc.k(t), "l": arc.l(t)}


def build_c1(ctx, s, c):
    """(xy)^q on a component with a single summand; null once q reaches the presentation exponent."""
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, side, q = s["t"], s["side"], s["q"]
    _in_arc(arc, t)
    _need(ctx.T[t].slots == (side,), f"T_{t} must have the single summand {side}")
    _need(1 <= q <= p - 1, "q in 1..p-1")
    e = ctx.P(q, q)
    f = ctx.map(t, t, {(side, side): e}, e)
    k = arc.k(t) if side == "u" else arc.l(t)
    return f, q >= k, {"threshold_presentation": k, "threshold_complement": r - k}


def build_c2(ctx, s, c):
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    t, q = s["t"], s["q"]
    _double(ctx, arc, t)
    _need(1 <= q <= p - 1, "q in 1..p-1")
    e = ctx.P(q, q)
    return ctx.map(t, t, {("u", "u"): e, ("v", "v"): e}, e), False, {}


def build_c2comb(ctx, s, c):
    """The combination of B.1, B.2 and C.2 with h0 = c0 + d0."""
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    t, q = s["t"], s["q"]
    _double(ctx, arc, t)
    k, l, j = arc.k(t), arc.l(t), arc.j
    c0, d0 = c.get("c0", 1), c.get("d0", 1)
    _need(q >= l or d0 == 0, "d0 must vanish when q < v-t")
    _need(q >= k or c0 == 0, "c0 must vanish when q < t-u")
    h0 = c.get("h0", c0 + d0)
    f0 = {
        ("u", "u"): ctx.P(q, q, h0 - d0),
        ("v", "v"): ctx.P(q, q, h0 - c0),
    }
    if d0:
        f0[("u", "v")] = ctx.P(q - l + j, q - l, d0)
    if c0:
        f0[("v", "u")] = ctx.P(q - k, q - k + j, c0)
    return ctx.map(t, t, f0, ctx.P(q, q, h0)), h0 == c0 + d0, {}


def _max_h(base: int, r: int, p: int) -> int:
    h = 0
    while base + (h + 1) * r <= p - 1:
        h += 1
    return h


def build_c3(ctx, s, c):
    """T_t -> T_tt swapping summands: y^(r-j+hr)(xy)^q on u->v or x^(r-j+hr)(xy)^q on v->u."""
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, tt, side = s["t"], s["tt"], s["side"]
    _double(ctx, arc, t)
    _double(ctx, arc, tt)
    base = r - arc.j
    _need(base <= p - 1, "C3 needs r - j < p")
    h = _max_h(base, r, p)
    n = base + h * r
    if side == "y":
        q = max(0, p - n - arc.l(tt))
        _need(n + q <= p - 1, "C3 entry vanishes")
        f0 = {("u", "v"): ctx.P(q, n + q)}
    else:
        q = max(0, p - n - arc.k(tt))
        _need(n + q <= p - 1, "C3 entry vanishes")
        f0 = {("v", "u"): ctx.P(n + q, q)}
    return ctx.map(t, tt, f0), False, {"h": h, "q": q, "n": n}


def build_d12(ctx, s, c, which):
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t = s["t"]
    _need(r < p, "D maps need r < p")
    _double(ctx, arc, t)
    e = ctx.P(r, 0) if which == 1 else ctx.P(0, r)
    return ctx.map(t, t, {("u", "u"): e, ("v", "v"): e}, e), False, {}


def build_d3(ctx, s, c):
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, side = s["t"], s["side"]
    j = arc.j
    _need(r == 2 * j and r < p, "D3 needs r = 2j < p")
    _double(ctx, arc, t)
    h = (p - 1) // r
    n = h * r
    k, l = arc.k(t), arc.l(t)
    if side == "x":
        _need(n + k >= p, "D3 x-part needs hr + (t-u) >= p")
        return ctx.map(t, t, {("v", "u"): ctx.P(n - j + l, l)}, ctx.P(n, 0)), False, {"h": h}
    _need(n + l >= p, "D3 y-part needs hr + (v-t) >= p")
    return ctx.map(t, t, {("u", "v"): ctx.P(k, n - j + k)}, ctx.P(0, n)), False, {"h": h}


# ---------------------------------------------------------------- E: one vertical term zero

def build_e1(ctx, s, c):
    """f0 = 0, f1 = x^(tt-t)(xy)^e with e = max(0, p - (tt-u)); dually with y."""
    arc, p = ctx.arc(s["arc"]), ctx.params.p
    t, tt, side = s["t"], s["tt"], s["side"]
    _in_arc(arc, t)
    _in_arc(arc, tt)
    _need(arc.j > p, "E1 needs j > p")
    if side == "u":
        _need(ctx.T[t].slots == ("u",), f"T_{t} must have the single summand u")
        _need(arc.k(tt) >= arc.k(t), "E1 needs t before tt")
        e = max(0, p - arc.k(tt))
        n = arc.k(tt) - arc.k(t)
        _need(n + e <= p - 1, "E1 entry vanishes")
        return ctx.map(t, tt, {}, ctx.P(n + e, e)), False, {"e": e}
    _need(ctx.T[tt].slots == ("v",), f"T_{tt} must have the single summand v")
    _need(arc.k(tt) >= arc.k(t), "E1 needs t before tt")
    e = max(0, p - arc.l(t))
    n = arc.k(tt) - arc.k(t)
    _need(n + e <= p - 1, "E1 entry vanishes")
    return ctx.map(tt, t, {}, ctx.P(e, n + e)), False, {"e": e}


def build_e2(ctx, s, c):
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, w, side = s["t"], s["w"], s["side"]
    _in_arc(arc, t)
    _need(arc.j > p, "E2 needs j > p")
    if side == "u":
        _need(w in ctx.arcs.interval_ending(arc.u), "w must lie in the interval ending at u")
        _need(ctx.T[t].slots == ("u",), f"T_{t} must have the single summand u")
        dist = (t - w) % r
        _need(dist <= p, "E2 needs t - w <= p")
        return ctx.map(w, t, {("s", "u"): ctx.P((arc.u - w) % r + p - dist, p - dist)}), False, {}
    _need(w in ctx.arcs.interval_starting(arc.v), "w must lie in the interval starting at v")
    _need(ctx.T[t].slots == ("v",), f"T_{t} must have the single summand v")
    dist = (w - t) % r
    _need(dist <= p, "E2 needs w - t <= p")
    return ctx.map(w, t, {("s", "v"): ctx.P(p - dist, (w - arc.v) % r + p - dist)}), False, {}


def build_e3(ctx, s, c):
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, tt, side, h = s["t"], s["tt"], s["side"], s["h"]
    _double(ctx, arc, t)
    _double(ctx, arc, tt)
    _need(h >= 1 and h * r < p, "E3 needs 1 <= h, hr < p")
    n = h * r
    if side == "u":
        _need(n + arc.k(tt) >= p, "E3 needs hr + (tt-u) >= p")
        return ctx.map(t, tt, {("u", "u"): ctx.P(n, 0)}), False, {}
    _need(n + arc.l(tt) >= p, "E3 needs hr + (v-tt) >= p")
    return ctx.map(t, tt, {("v", "v"): ctx.P(0, n)}), False, {}


def build_e4(ctx, s, c):
    arc, p, r = ctx.arc(s["arc"]), ctx.params.p, ctx.params.r
    t, side, h = s["t"], s["side"], s["h"]
    _double(ctx, arc, t)
    _need(h >= 1 and h * r < p, "E4 needs 1 <= h, hr < p")
    n = h * r
    if side == "u":
        _need(n + arc.k(t) >= p, "E4 needs hr + (t-u) >= p")
        return ctx.map(arc.u, t, {("s", "u"): ctx.P(n, 0)}), False, {}
    _need(n + arc.l(t) >= p, "E4 needs hr + (v-t) >= p")
    return ctx.map(arc.v, t, {("s", "v"): ctx.P(0, n)}), False, {}


def _slot_map(ctx, s, into: bool):
    arc = ctx.arc(s["arc"])
    t, w, side = s["t"], s["w"], s["side"]
    _in_arc(arc, t)
    _need(w in ctx.arcs.I0, f"w={w} must lie in I0")
    _need(ctx.T[t].has(side), f"T_{t} has no {side}-summand")
    slot = arc.u if side == "u" else arc.v
    src, tgt = (w, slot) if into else (slot, w)
    gen = HomGenerator(s["kind"], src, tgt, s["s"], s["q"])
    a, b = gen.exponents
    _need((a - b - (tgt - src)) % ctx.params.r == 0, "generator does not route between the summands")
    _need(a < ctx.params.p and b < ctx.params.p, "generator vanishes")
    key = ("s", side) if into else (side, "s")
    f = ctx.map(w, t, {key: ctx.P(a, b)}) if into else ctx.map(t, w, {key: ctx.P(a, b)})
    _need(is_chain_map(f), "not a chain map")
    _need(not is_null_homotopic(f), "null-homotopic")
    return f, False, {}


def build_stalk_in(ctx, s, c):
    """P_w -> T_t through one degree-0 summand, with the least (xy)-power that is well defined."""
    f, null, notes = _slot_map(ctx, s, True)
    if s["q"] > 0:
        try:
            _slot_map(ctx, {**s, "q": s["q"] - 1}, True)
        except Inapplicable:
            pass
        else:
            raise Inapplicable("a smaller (xy)-power is already well defined")
    return f, null, notes


def build_stalk_out(ctx, s, c):
    """T_t -> P_w out of one degree-0 summand by a generator without (xy)-factor."""
    _need(s["q"] == 0, "StalkOut uses q = 0")
    return _slot_map(ctx, s, False)


def _stalk_candidates(ctx: _Ctx, arc: Arc) -> list[CatalogMapId]:
    out = []
    for t in arc.J:
        for side in ctx.T[t].slots:
            slot = arc.u if side == "u" else arc.v
            for w in ctx.arcs.I0:
                for g in hom_basis(ctx.params, w, slot).basis:
                    out.append(mid("StalkIn", arc=arc.J[0], t=t, w=w, side=side, kind=g.kind, s=g.s, q=g.q))
                for g in hom_basis(ctx.params, slot, w).basis:
                    if g.q == 0 and not (w == slot and g.s == 0):  # the projections are ProjU/ProjV
                        out.append(mid("StalkOut", arc=arc.J[0], t=t, w=w, side=side, kind=g.kind, s=g.s, q=0))
    return out


# ---------------------------------------------------------------- registry

_BUILDERS: dict[str, Callable] = {
    "alpha": build_alpha,
    "Adjacent": build_alpha,
    "Xi1": build_alpha,
    "Xi2": build_alpha,
    "MuU": build_alpha,
    "NuV": build_alpha,
    "EpsilonU": build_epsilon,
    "EpsilonV": build_epsilon,
    "LongU": build_epsilon,
    "LongV": build_epsilon,
    "Jump": build_jump,
    "ProjU": build_proj,
    "ProjV": build_proj,
    "Gamma": build_gamma,
    "StalkLoop": build_stalk_loop,
    "E5": build_e5,
    "B1": lambda ctx, s, c: build_b(ctx, s, c, 1),
    "B2": lambda ctx, s, c: build_b(ctx, s, c, 2),
    "B1B2": build_b1b2,
    "C1": build_c1,
    "C2": build_c2,
    "C2Comb": build_c2comb,
    "C3": build_c3,
    "D1": lambda ctx, s, c: build_d12(ctx, s, c, 1),
    "D2": lambda ctx, s, c: build_d12(ctx, s, c, 2),
    "D3": build_d3,
    "E1": build_e1,
    "E2": build_e2,
    "E3": build_e3,
    "E4": build_e4,
    "StalkIn": build_stalk_in,
    "StalkOut": build_stalk_out,
}


def _build(ctx: _Ctx, mid_: CatalogMapId) -> CatalogInstance:
    site = dict(mid_.site)
    coeffs = dict(mid_.coeffs)
    if mid_.tag == "Adjacent" and site.get("kind") == "pi":
        f, null, notes = build_pi(ctx, site, coeffs)
    elif mid_.tag in ("ProjU", "ProjV"):
        f, null, notes = build_proj(ctx, {**site, "side": mid_.tag[-1].lower()}, coeffs)
    else:
        builder = _BUILDERS.get(mid_.tag)
        if builder is None:
            raise Inapplicable(f"unknown tag {mid_.tag}")
        f, null, notes = builder(ctx, site, coeffs)
    want = notes.pop("tag", mid_.tag)
    if want != mid_.tag:
        raise Inapplicable(f"site carries tag {want}, not {mid_.tag}")
    return CatalogInstance(mid_, f, null, tuple(notes.items()))


def build_map(params: BlockParams, I0, id: CatalogMapId) -> CatalogInstance:
    ctx = _context(params, tuple(sorted(I0)))
    return _build(ctx, id)


def _candidates(ctx: _Ctx, arc: Arc) -> list[CatalogMapId]:
    """Every site that might carry a catalog map on this arc; predicates prune later."""
    p, r = ctx.params.p, ctx.params.r
    a0 = arc.J[0]
    J = arc.J
    out: list[CatalogMapId] = []
    for i in range(len(J) - 1):
        for t, tt in ((J[i], J[i + 1]), (J[i + 1], J[i])):
            tag, _ = _alpha(ctx, arc, t, tt)
            out.append(mid(tag, arc=a0, t=t, tt=tt))
    for side in "uv":
        out.append(mid("Adjacent", arc=a0, kind="pi", side=side))
        eps_tag = ("Epsilon" if arc.j <= p else "Long") + side.upper()
        out.append(mid(eps_tag, arc=a0, side=side))
        out.append(mid("Jump", arc=a0, side=side))
    for t in J:
        out.append(mid("B1", arc=a0, t=t))
        out.append(mid("B2", arc=a0, t=t))
        out.append(mid("B1B2", {"d0": 1}, arc=a0, t=t))
        for q in range(1, p):
            for side in "uv":
                out.append(mid("C1", arc=a0, t=t, side=side, q=q))
            out.append(mid("C2", arc=a0, t=t, q=q))
            c0 = 1 if q >= arc.k(t) else 0
            d0 = 1 if q >= arc.l(t) else 0
            if c0 or d0:
                out.append(mid("C2Comb", {"h0": c0 + d0, "c0": c0, "d0": d0}, arc=a0, t=t, q=q))
        out.append(mid("D1", arc=a0, t=t))
        out.append(mid("D2", arc=a0, t=t))
        for side in ("x", "y"):
            out.append(mid("D3", arc=a0, t=t, side=side))
        for tt in J:
            for side in ("x", "y"):
                out.append(mid("C3", arc=a0, t=t, tt=tt, side=side))
            for side in "uv":
                out.append(mid("E1", arc=a0, t=t, tt=tt, side=side))
            for h in range(1, (p - 1) // r + 1):
                for side in "uv":
                    out.append(mid("E3", arc=a0, t=t, tt=tt, side=side, h=h))
        for side, iv in (("u", ctx.arcs.interval_ending(arc.u)), ("v", ctx.arcs.interval_starting(arc.v))):
            for w in iv:
                out.append(mid("E2", arc=a0, t=t, w=w, side=side))
        for h in range(1, (p - 1) // r + 1):
            for side in "uv":
                out.append(mid("E4", arc=a0, t=t, side=side, h=h))
    return out


def _interval_candidates(ctx: _Ctx) -> list[CatalogMapId]:
    r = ctx.params.r
    out = []
    for iv in ctx.arcs.intervals:
        for a, b in zip(iv, iv[1:]):
            out.append(mid("Gamma", src=a, tgt=b))
            out.append(mid("Gamma", src=b, tgt=a))
        if len(iv) == 1:
            out.append(mid("StalkLoop", w=iv[0]))
        out.append(mid("E5", first=iv[0], side="x"))
        out.append(mid("E5", first=iv[0], side="y"))
    return out


def _applicable(ctx: _Ctx, cands: list[CatalogMapId]) -> list[CatalogMapId]:
    keep = []
    for c in cands:
        try:
            _build(ctx, c)
        except Inapplicable:
            continue
        keep.append(c)
    return keep


def applicable_ids(params: BlockParams, I0, arc: Arc | int | None = None, extended: bool = False) -> list[CatalogMapId]:
    """Catalog ids for one arc (given as an Arc or its first residue), or all arcs plus I0 intervals.

    The projections ProjU/ProjV are listed only with ``extended=True``.
    """
    ctx = _context(params, tuple(sorted(I0)))
    if arc is None:
        ids = []
        for a in ctx.arcs.arcs:
            ids += _candidates(ctx, a)
        ids += _interval_candidates(ctx)
    else:
        first = arc.J[0] if isinstance(arc, Arc) else arc
        ids = _candidates(ctx, ctx.arc(first))
    if extended:
        arcs = ctx.arcs.arcs if arc is None else [ctx.arc(first)]
        for a in arcs:
            for t in a.J:
                ids.append(mid("ProjU", arc=a.J[0], t=t))
                ids.append(mid("ProjV", arc=a.J[0], t=t))
            ids += _stalk_candidates(ctx, a)
    return _applicable(ctx, list(dict.fromkeys(ids)))


def catalog_instances(params: BlockParams, I0, extended: bool = False) -> list[CatalogInstance]:
    ctx = _context(params, tuple(sorted(I0)))
    return [_build(ctx, c) for c in applicable_ids(params, I0, extended=extended)]


# ---------------------------------------------------------------- verification

@dataclass(frozen=True)
class InstanceVerdict:
    id: CatalogMapId
    chain: bool
    null: bool | None
    expect_null: bool
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return self.chain and self.null == self.expect_null


@dataclass
class CatalogReport:
    params: BlockParams
    I0: tuple[int, ...]
    verdicts: list[InstanceVerdict] = field(default_factory=list)

    @property
    def failures(self) -> list[InstanceVerdict]:
        return [v for v in self.verdicts if not v.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def c1_threshold_agreement(self) -> dict[str, tuple[int, int]]:
        """For C1 instances: (agreements, total) of each candidate null-homotopy threshold."""
        agree = {"presentation": 0, "complement": 0}
        total = 0
        for v in self.verdicts:
            if v.id.tag != "C1" or v.null is None:
                continue
            n = dict(v.notes)
            q = v.id.get("q")
            total += 1
            agree["presentation"] += (q >= n["threshold_presentation"]) == v.null
            agree["complement"] += (q >= n["threshold_complement"]) == v.null
        return {k: (a, total) for k, a in agree.items()}


def verify_catalog(params: BlockParams, I0, extended: bool = False) -> CatalogReport:
    report = CatalogReport(params, tuple(sorted(I0)))
    for inst in catalog_instances(params, I0, extended=extended):
        chain = is_chain_map(inst.map)
        null = is_null_homotopic(inst.map) if chain else None
        report.verdicts.append(InstanceVerdict(inst.id, chain, null, inst.expect_null, inst.notes))
    return report
