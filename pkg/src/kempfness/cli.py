"""Command-line front end.

    kempfness validate --input cut_cube.json
    kempfness betti    --input cut_cube.json --format json
    kempfness ring     --input cut_cube.json --degree 3 --degree 5
    kempfness quadrics --input cut_cube.json --facet-order 1,2,3,4,5,6,7,8 --check
    kempfness massey   --input cut_cube.json u_1v_4 u_2v_5 u_3v_6

Exit codes: 0 success, 2 unreadable or invalid input, 3 the input is not a
simple polytope / simplicial fan, 4 a cocycle argument is not a cocycle.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import cohomology as coh
from . import fan as fanmod
from . import polytope as poly
from .cache import CachedReducedCohomology, default_cache_dir
from .simplicial import SimplicialComplex, vertices_of

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_COCYCLE = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    input: str
    kind: Optional[str] = None
    format: str = "text"
    tol: float = poly.RESIDUAL_TOL
    seed: int = 0
    jobs: int = 1
    facet_order: Optional[list] = None
    check: bool = False
    samples: int = 1000
    degrees: Optional[list] = None
    products: bool = False
    cocycles: tuple = ()
    cache: bool = True

    def __post_init__(self):
        if self.tol <= 0:
            raise CliError(EXIT_INPUT, "--tol must be positive")
        if self.jobs < 1:
            raise CliError(EXIT_INPUT, "--jobs must be at least 1")


@dataclass
class Loaded:
    kind: str
    complex: SimplicialComplex
    n: int
    complete: bool
    polytope: Optional[poly.HPolytope] = None
    fan: Optional[fanmod.Fan] = None


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc


def _load_raw(cfg: RunConfig):
    data = _read_json(cfg.input)
    if not isinstance(data, dict):
        raise CliError(EXIT_INPUT, "input must be a JSON object")
    kind = cfg.kind or ("polytope" if "A" in data else "fan")
    try:
        if kind == "polytope":
            return kind, poly.HPolytope.from_json(data)
        return kind, fanmod.Fan.from_json(data)
    except fanmod.NonSimplicialCone as exc:
        raise CliError(EXIT_HYPOTHESIS, f"not a simplicial fan: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, f"invalid {kind}: {exc}") from exc


def _load(cfg: RunConfig) -> Loaded:
    kind, obj = _load_raw(cfg)
    if kind == "polytope":
        if not poly.is_simple(obj):
            raise CliError(EXIT_HYPOTHESIS, "polytope is not simple")
        return Loaded(kind, poly.facet_nerve(obj), obj.n, True, polytope=obj)
    complete = fanmod.is_complete(obj, seed=cfg.seed)
    return Loaded(kind, fanmod.underlying_complex(obj), obj.n, complete, fan=obj)


def _report(cfg: RunConfig, K: SimplicialComplex, with_generators=False) -> coh.CohomologyReport:
    reduced = CachedReducedCohomology(default_cache_dir()) if cfg.cache else None
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            mapper = lambda f, *its: pool.map(f, *its, chunksize=16)
            return coh.hochster_cohomology(K, reduced, mapper, with_generators)
    return coh.hochster_cohomology(K, reduced, map, with_generators)


# --------------------------------------------------------------------------
# commands; each returns (json-able dict, list of text lines)


def cmd_validate(cfg: RunConfig):
    kind, obj = _load_raw(cfg)
    out = {"kind": kind}
    if kind == "polytope":
        P = obj
        out.update(m=P.m, n=P.n, simple=poly.is_simple(P), vertices=len(P.vertex_list))
        F = poly.normal_fan(P) if out["simple"] else None
    else:
        F = obj
        out.update(m=F.m, n=F.n, primitivized=F.primitivized)
    if F is not None:
        out.update(simplicial=True, regular=fanmod.is_regular(F), complete=fanmod.is_complete(F, seed=cfg.seed))
        try:
            g = fanmod.group_structure(F)
            out["G"] = {"rank": g.free_rank, "torsion": list(g.torsion)}
        except fanmod.RaysDoNotSpan:
            out["G"] = None
    else:
        out.update(simplicial=False)
    lines = [f"kind: {kind}"]
    for key in ("simple", "simplicial", "regular", "complete"):
        if key in out:
            lines.append(f"{key}: {str(out[key]).lower()}")
    lines.append(f"m={out['m']}, n={out['n']}")
    if out.get("G") is not None:
        tors = out["G"]["torsion"]
        lines.append(f"G: rank {out['G']['rank']}" + (f", torsion {tors}" if tors else ", no torsion"))
    elif "G" in out:
        lines.append("G: rays do not span N_R")
    summary = ", ".join(
        [f"simple: {str(out['simple']).lower()}" if "simple" in out else f"complete: {str(out.get('complete')).lower()}"]
        + [f"m={out['m']}, n={out['n']}"]
        + ([f"G: rank {out['G']['rank']}"] if out.get("G") else [])
    )
    return out, [summary, ""] + lines


def cmd_betti(cfg: RunConfig):
    L = _load(cfg)
    rep = _report(cfg, L.complex)
    out = rep.to_json()
    del out["generators"]
    out["m"], out["n"] = L.complex.m, L.n
    out["complete"] = L.complete
    if L.complete:
        out["poincare_duality"] = coh.poincare_duality_check(rep, L.complex.m, L.n)
    lines = [f"betti: ({', '.join(str(b) for b in rep.betti)})"]
    for k in range(rep.top_degree + 1):
        g = rep.groups[k]
        if not g.is_trivial:
            lines.append(f"H^{k} = {g}")
    if not rep.torsion:
        lines.append("torsion: none")
    lines.append("bigraded (-i, 2j): rank")
    for (i, j2), r in sorted(rep.bigraded.items()):
        lines.append(f"  ({-i}, {j2}): {r}")
    if L.complete:
        lines.append(f"poincare duality: {str(out['poincare_duality']).lower()}")
    return out, lines


def cmd_ring(cfg: RunConfig):
    L = _load(cfg)
    rep = _report(cfg, L.complex)
    model = coh.koszul_model(L.complex)
    degrees = cfg.degrees or list(range(rep.top_degree + 1))
    gens = {d: model.generators(d) for d in degrees}
    out = {
        "betti": rep.betti,
        "generators": [
            {"degree": d, "cocycle": str(c), "multidegree": list(vertices_of(next(iter(c.multidegree_support))))}
            for d in degrees
            for c in gens[d]
        ],
    }
    lines = []
    for d in degrees:
        lines.append(f"H^{d} = {rep.groups[d]}: {len(gens[d])} generators")
        lines.extend(f"  [{c}]" for c in gens[d])
    if cfg.products:
        table = []
        for i, d1 in enumerate(degrees):
            for d2 in degrees[i:]:
                for p, x in enumerate(gens[d1]):
                    for q, y in enumerate(gens[d2]):
                        if d1 == d2 and q < p:
                            continue
                        z = coh.cup_product(x, y)
                        if not z.is_zero_cochain:
                            table.append({"left": str(x), "right": str(y), "product": str(z)})
        out["products"] = table
        lines.append("nonzero products:")
        lines.extend(f"  [{t['left']}]·[{t['right']}] = [{t['product']}]" for t in table)
    return out, lines


def cmd_quadrics(cfg: RunConfig):
    kind, P = _load_raw(cfg)
    if kind != "polytope":
        raise CliError(EXIT_INPUT, "quadrics needs a polytope input")
    if not poly.is_simple(P):
        raise CliError(EXIT_HYPOTHESIS, "polytope is not simple")
    try:
        Q = poly.cokernel_matrix(P, cfg.facet_order)
    except poly.PolytopeError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from exc
    out = Q.to_json()
    out["equations"] = Q.render()
    out["moment_map_target"] = Q.constants()
    lines = ["C ="]
    lines.extend("  " + " ".join(f"{int(x):3d}" for x in row) for row in Q.C)
    lines.append(f"facet order: {','.join(map(str, Q.permutation))}")
    lines.append(f"Cb = ({', '.join(map(str, Q.constants()))})")
    lines.extend(Q.render())
    if cfg.check:
        pts = poly.sample_on_Z(P, cfg.samples, cfg.seed, Q)
        worst = max((p.max_residual for p in pts), default=0.0)
        full = sum(1 for p in pts if poly.jacobian_rank_check(p, Q, residual_tol=cfg.tol))
        rank = Q.C.shape[0]
        out["check"] = {
            "samples": len(pts),
            "max_residual": float(f"{worst:.3e}"),
            "residual_ok": worst < cfg.tol,
            "full_rank_points": full,
            "rank": rank,
        }
        cmp = "<" if worst < cfg.tol else ">="
        lines.append(
            f"max residual {worst:.3e} {cmp} {cfg.tol:g}, rank {rank}/{rank} at {full}/{len(pts)} points"
        )
    return out, lines


def cmd_massey(cfg: RunConfig):
    L = _load(cfg)
    K = L.complex
    classes = []
    for text in cfg.cocycles:
        try:
            x = coh.CohomologyClass.parse(K, text)
        except coh.CocycleParseError as exc:
            raise CliError(EXIT_COCYCLE, str(exc)) from exc
        if x.is_zero_cochain:
            raise CliError(EXIT_COCYCLE, f"{text!r} is the zero cochain")
        try:
            x.degree
        except ValueError as exc:
            raise CliError(EXIT_COCYCLE, f"{text!r} is not homogeneous") from exc
        if not x.is_cocycle():
            raise CliError(EXIT_COCYCLE, f"{text!r} is not a cocycle")
        classes.append(x)
    res = coh.massey_triple(*classes)
    out = {"defined": res.defined}
    if not res.defined:
        out["nonzero_products"] = list(res.nonzero_products)
        return out, [f"not defined: nonzero product(s) {', '.join(res.nonzero_products)}"]
    out.update(
        trivial=res.trivial,
        representative=str(res.representative),
        degree=res.representative.degree if not res.representative.is_zero_cochain else None,
        e=str(res.e),
        f=str(res.f),
    )
    verdict = "trivial" if res.trivial else "NON-trivial"
    lines = [
        f"defined, {verdict}, rep {_up_to_sign(res.representative)}",
        f"e = {res.e}",
        f"f = {res.f}",
    ]
    return out, lines


def _up_to_sign(x: coh.CohomologyClass) -> str:
    if x.is_zero_cochain:
        return "0"
    text = str(x)
    if len(x.terms) == 1:
        return "±" + text.lstrip("-")
    return f"±({text})"


COMMANDS = {
    "validate": cmd_validate,
    "betti": cmd_betti,
    "ring": cmd_ring,
    "quadrics": cmd_quadrics,
    "massey": cmd_massey,
}


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _parse_order(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad facet order {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kempfness", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="fan or polytope JSON file")
    common.add_argument("--kind", choices=["fan", "polytope"])
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--tol", type=float, default=poly.RESIDUAL_TOL)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--no-cache", dest="cache", action="store_false")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "ring":
            p.add_argument("--degree", type=int, action="append", dest="degrees")
            p.add_argument("--products", action="store_true")
        if name == "quadrics":
            p.add_argument("--facet-order", type=_parse_order)
            p.add_argument("--check", action="store_true")
            p.add_argument("--samples", type=int, default=1000)
        if name == "massey":
            p.add_argument("cocycles", nargs=3, metavar="COCYCLE")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(**{k: (tuple(v) if k == "cocycles" else v) for k, v in vars(args).items()})
        if cfg.facet_order is not None and sorted(cfg.facet_order) != list(range(1, len(cfg.facet_order) + 1)):
            raise CliError(EXIT_INPUT, "--facet-order must be a permutation of 1..m")
        out, lines = COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    if cfg.format == "json":
        sys.stdout.write(dump_json(out))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
