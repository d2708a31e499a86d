"""Command-line front end.

Every command validates p, r and I0 first; invalid input exits with 2, a failed
verification with 1, success with 0. Output is built from sorted data only, so
identical inputs give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from .algebra import BlockParams, Quiver, block_cartan, make_algebra, quiver_of_block
from .catalog import catalog_instances, verify_catalog
from .endo import (
    cartan_matrix,
    det,
    endomorphism_algebra,
    generation_report,
    quiver_of_endo,
)
from .tilt import arc_decomposition, build_tilting_complex, element_string, hom_K, verify_tilting

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InvalidInput(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int
    r: int
    i0: tuple[int, ...]
    command: str
    fmt: str = "table"
    out: str | None = None
    verbose: bool = False
    extended: bool = False

    @property
    def params(self) -> BlockParams:
        return make_algebra(self.p, self.r)


# ---------------------------------------------------------------- serialisation

def quiver_json(q: Quiver, p: int, r: int, i0=()) -> dict:
    return {
        "p": p,
        "r": r,
        "i0": list(i0),
        "vertices": q.n,
        "arrows": [{"from": a, "to": b, "count": c} for a, b, c in q.arrows()],
    }


def quiver_dot(q: Quiver, name: str = "Q", labels: dict | None = None) -> str:
    """Parallel edges for multiplicity; each edge is labelled by its position among its siblings."""
    lines = [f"digraph {name} {{"]
    for v in range(q.n):
        lines.append(f'  {v} [label="{v}"];')
    for a, b, c in q.arrows():
        for k in range(c):
            lab = labels.get((a, b, k), f"{a}->{b}#{k + 1}") if labels else f"{a}->{b}#{k + 1}"
            lines.append(f'  {a} -> {b} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_table(q: Quiver) -> str:
    return _matrix_table(np.array(q.mult), "from\\to")


def _matrix_table(M, corner: str = "") -> str:
    M = np.asarray(M)
    w = max(len(corner), max((len(str(v)) for v in M.flat), default=1), len(str(M.shape[1] - 1)))
    head = corner.rjust(w) + " " + " ".join(str(j).rjust(w) for j in range(M.shape[1]))
    rows = [str(i).rjust(w) + " " + " ".join(str(int(v)).rjust(w) for v in row) for i, row in enumerate(M)]
    return "\n".join([head] + rows) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def write_output(text: str, path: str | None) -> None:
    """Write to stdout, or atomically to ``path`` via a temporary file in the same directory."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".elemtilt-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- commands

def _tilting(cfg: RunConfig):
    params = cfg.params
    return params, build_tilting_complex(params, cfg.i0)


def cmd_block_quiver(cfg: RunConfig) -> tuple[str, int]:
    q = quiver_of_block(cfg.params)
    if cfg.fmt == "json":
        return _dumps(quiver_json(q, cfg.p, cfg.r)), EXIT_OK
    if cfg.fmt == "dot":
        labels = {}
        for a, b, _ in q.arrows():
            labels[(a, b, 0)] = "x" if (b - a) % cfg.r == 1 else "y"
            if cfg.r == 2:
                labels[(a, b, 1)] = "y"
        return quiver_dot(q, "block", labels), EXIT_OK
    return quiver_table(q), EXIT_OK


def cmd_tilt(cfg: RunConfig) -> tuple[str, int]:
    params, T = _tilting(cfg)
    if cfg.fmt == "json":
        comps = []
        for c in T:
            comps.append({
                "index": c.index,
                "kind": c.kind,
                "deg0": list(c.deg0),
                "deg1": list(c.deg1),
                "differential": [element_string(params, c.d[a, 0], c.deg1[0]) for a in range(len(c.deg0))]
                if c.kind == "two-term" else [],
            })
        return _dumps({"p": cfg.p, "r": cfg.r, "i0": list(cfg.i0), "components": comps}), EXIT_OK
    return "\n".join(c.describe() for c in T) + "\n", EXIT_OK


def cmd_homdims(cfg: RunConfig) -> tuple[str, int]:
    _, T = _tilting(cfg)
    r = cfg.r
    dims = np.zeros((r, r), dtype=int)
    raw = np.zeros_like(dims)
    null = np.zeros_like(dims)
    for i in range(r):
        for j in range(r):
            h = hom_K(T[i], T[j])
            dims[i, j], raw[i, j], null[i, j] = h.dim, h.raw_dim, h.null_dim
    if cfg.fmt == "json":
        obj = {"p": cfg.p, "r": r, "i0": list(cfg.i0), "dims": dims.tolist()}
        if cfg.verbose:
            obj["raw"] = raw.tolist()
            obj["null"] = null.tolist()
        return _dumps(obj), EXIT_OK
    text = "hom_K dims\n" + _matrix_table(dims)
    if cfg.verbose:
        text += "chain maps\n" + _matrix_table(raw) + "null-homotopic\n" + _matrix_table(null)
    return text, EXIT_OK


def cmd_catalog_verify(cfg: RunConfig) -> tuple[str, int]:
    params, _ = _tilting(cfg)
    rep = verify_catalog(params, cfg.i0, extended=cfg.extended)
    verdicts = [
        {"id": str(v.id), "chain": v.chain, "null": v.null, "expect_null": v.expect_null, "ok": v.ok}
        for v in rep.verdicts
    ]
    code = EXIT_OK if rep.passed else EXIT_FAIL
    if cfg.fmt == "json":
        obj = {"p": cfg.p, "r": cfg.r, "i0": list(cfg.i0), "passed": rep.passed, "verdicts": verdicts}
        return _dumps(obj), code
    lines = [f"{'ok  ' if v['ok'] else 'FAIL'} {v['id']}" for v in verdicts if cfg.verbose or not v["ok"]]
    lines.append(f"{len(verdicts) - len(rep.failures)}/{len(verdicts)} instances as expected")
    return "\n".join(lines) + "\n", code


def cmd_catalog_list(cfg: RunConfig) -> tuple[str, int]:
    params, _ = _tilting(cfg)
    insts = catalog_instances(params, cfg.i0, extended=cfg.extended)
    rows = []
    for inst in insts:
        f = inst.map
        rows.append({
            "id": str(inst.id),
            "expect_null": inst.expect_null,
            "map": f.describe(),
        })
    if cfg.fmt == "json":
        return _dumps({"p": cfg.p, "r": cfg.r, "i0": list(cfg.i0), "instances": rows}), EXIT_OK
    return "\n".join(f"{row['id']}: {row['map']}" for row in rows) + "\n", EXIT_OK


def cmd_endo_quiver(cfg: RunConfig) -> tuple[str, int]:
    _, T = _tilting(cfg)
    q = quiver_of_endo(endomorphism_algebra(T))
    if cfg.fmt == "json":
        return _dumps(quiver_json(q, cfg.p, cfg.r, cfg.i0)), EXIT_OK
    if cfg.fmt == "dot":
        return quiver_dot(q, "endo"), EXIT_OK
    return quiver_table(q), EXIT_OK


def cmd_check_tilting(cfg: RunConfig) -> tuple[str, int]:
    params, T = _tilting(cfg)
    rep = verify_tilting(T)
    E = endomorphism_algebra(T)
    cartan_det = det(cartan_matrix(E))
    block_det = det(block_cartan(params))
    ok = rep.passed and cartan_det == block_det
    obj = {
        "p": cfg.p, "r": cfg.r, "i0": list(cfg.i0),
        "passed": ok,
        "shift_failures": [list(f) for f in rep.shift_failures],
        "k0_det": rep.k0_det,
        "cartan_det": cartan_det,
        "block_cartan_det": block_det,
    }
    if cfg.fmt == "json":
        return _dumps(obj), EXIT_OK if ok else EXIT_FAIL
    text = (
        f"Hom(T, T[+-1]) = 0: {'yes' if rep.shifts_vanish else 'no ' + str(rep.shift_failures)}\n"
        f"K0 determinant: {rep.k0_det}\n"
        f"det Cartan(End T) = {cartan_det}, det Cartan(A) = {block_det}\n"
        f"{'PASS' if ok else 'FAIL'}\n"
    )
    if cfg.verbose:
        text += rep.note + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_generation(cfg: RunConfig) -> tuple[str, int]:
    params, T = _tilting(cfg)
    E = endomorphism_algebra(T)
    maps = [inst.map for inst in catalog_instances(params, cfg.i0, extended=cfg.extended)]
    G = generation_report(E, maps)
    code = EXIT_OK if G.complete else EXIT_FAIL
    entries = [
        {"i": e.i, "j": e.j, "hom_K": e.full, "generated": e.generated, "equal": e.equal}
        for _, e in sorted(G.entries.items())
    ]
    if cfg.fmt == "json":
        obj = {"p": cfg.p, "r": cfg.r, "i0": list(cfg.i0), "complete": G.complete,
               "word_length": G.word_length, "pairs": entries}
        return _dumps(obj), code
    lines = [
        f"{e['i']} -> {e['j']}: {e['generated']}/{e['hom_K']}{'' if e['equal'] else '  MISSING'}"
        for e in entries if cfg.verbose or not e["equal"]
    ]
    lines.append(f"{'complete' if G.complete else 'incomplete'} (word length {G.word_length})")
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "quiver": cmd_block_quiver,
    "tilt": cmd_tilt,
    "homdims": cmd_homdims,
    "catalog-verify": cmd_catalog_verify,
    "catalog-list": cmd_catalog_list,
    "endo-quiver": cmd_endo_quiver,
    "check-tilting": cmd_check_tilting,
    "generation": cmd_generation,
}


# ---------------------------------------------------------------- parsing

def _parse_i0(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidInput(f"--i0 expects a comma list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--r", type=int, required=True, help="order of the cyclic group, coprime to p")
    common.add_argument("--i0", default=None, help="comma list of residues kept in degree 0")
    common.add_argument("--format", dest="fmt", choices=("json", "dot", "table"), default="table")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--out", default=None, help="write here (atomically) instead of stdout")
    common.add_argument("--extended", action="store_true",
                        help="add the projection and stalk-slot maps to the catalog")

    parser = argparse.ArgumentParser(prog="elemtilt", description="Elementary tilting complexes over A(p, r).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("quiver", "tilt", "homdims", "endo-quiver", "check-tilting", "generation"):
        sub.add_parser(name, parents=[common])
    cat = sub.add_parser("catalog")
    catsub = cat.add_subparsers(dest="action", required=True)
    catsub.add_parser("verify", parents=[common])
    catsub.add_parser("list", parents=[common])
    return parser


def validate(cfg: RunConfig) -> None:
    """All input checks happen here, before any computation."""
    params = make_algebra(cfg.p, cfg.r)
    if cfg.command != "quiver":
        if not cfg.i0:
            raise InvalidInput(f"{cfg.command} needs --i0")
        arc_decomposition(params, cfg.i0)
    if cfg.fmt == "dot" and cfg.command not in ("quiver", "endo-quiver"):
        raise InvalidInput("--format dot applies to quiver commands only")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, which already matches the contract
        return int(exc.code or 0)
    command = ns.command if ns.command != "catalog" else f"catalog-{ns.action}"
    try:
        cfg = RunConfig(ns.p, ns.r, _parse_i0(ns.i0), command, ns.fmt, ns.out, ns.verbose, ns.extended)
        validate(cfg)
    except ValueError as exc:
        print(f"elemtilt: {exc}", file=sys.stderr)
        return EXIT_INVALID
    text, code = COMMANDS[command](cfg)
    write_output(text, cfg.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
