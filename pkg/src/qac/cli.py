"""Command-line entry point: fixtures, verification, mutation and l-weight tools."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .baxter import phi_n_check_sl2, verify_baxter_sl2, verify_mutation_identity
from .cartan import cartan_data
from .cluster import Seed, initial_seed, mutate_seq
from .errors import QacError
from .factorization import factorize, is_simple_product, multiply_factorization
from .fixtures import fixture_names, run_all, run_fixture
from .laurent import LPoly, parse_lpoly
from .lweights import LWeightMono, classify
from .qchar import kr_qchar_sl2, prefund_minus_qchar_sl2, prefund_plus_qchar_sl2
from .quiver import Quiver, Vertex, build_gamma_window


def _parse_vertex(text: str) -> Vertex:
    i, r = (int(x) for x in text.split(","))
    return Vertex(i, r)


def _parse_window(text: str) -> tuple[int, int]:
    lo, hi = (int(x) for x in text.split(","))
    return lo, hi


def _parse_seq(text: str) -> list[Vertex]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("()")
        if chunk:
            out.append(_parse_vertex(chunk))
    return out


def _seed_to_json(seed: Seed, kind: str, window: tuple[int, int]) -> dict:
    return {
        "cartan": kind,
        "window": list(window),
        "frozen": [f"{v.node},{v.shift}" for v in sorted(seed.quiver.frozen)],
        "attachments": {
            f"{v.node},{v.shift}": seed.attach[v].text() for v in sorted(seed.attach)
        },
    }


def _seed_from_json(data: dict) -> tuple[Seed, str]:
    cd = cartan_data(data["cartan"])
    vertices = [_parse_vertex(k) for k in data["attachments"]]
    frozen = [_parse_vertex(k) for k in data.get("frozen", [])]
    from .quiver import out_neighbors

    verts = set(vertices)
    arrows = [(v, w) for v in verts for w in out_neighbors(cd, v) if w in verts]
    quiver = Quiver(verts, arrows, frozen)
    attach = {
        _parse_vertex(k): parse_lpoly(poly, cd.n)
        for k, poly in data["attachments"].items()
    }
    return Seed(quiver, attach), data["cartan"]


def _emit(args, payload_json: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload_json, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_fixture(args) -> int:
    rep = run_fixture(args.name)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    else:
        print(rep.line())
        if rep.status != "pass":
            print(f"  lhs: {rep.lhs}\n  rhs: {rep.rhs}")
    return 0 if rep.status == "pass" else 1


def _cmd_verify_all(args) -> int:
    reports = run_all(args.seed, args.samples)
    failures = sum(1 for r in reports if r.status != "pass")
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        print(f"{len(reports) - failures}/{len(reports)} passed")
    return min(failures, 125)


def _cmd_quiver(args) -> int:
    cd = cartan_data(args.type)
    lo, hi = _parse_window(args.window)
    q = build_gamma_window(cd, _parse_vertex(args.base), lo, hi)
    print(q.dot_text() if args.dot else q.adjacency_text())
    return 0


def _cmd_seed(args) -> int:
    cd = cartan_data(args.type)
    lo, hi = _parse_window(args.window)
    q = build_gamma_window(cd, _parse_vertex(args.base), lo, hi)
    seed = initial_seed(q, n=cd.n)
    payload = _seed_to_json(seed, cd.kind, (lo, hi))
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_mutate(args) -> int:
    if args.seed:
        with open(args.seed) as fh:
            seed, kind = _seed_from_json(json.load(fh))
    else:
        if not (args.type and args.base and args.window):
            raise QacError("provide --seed FILE or --type/--base/--window")
        cd = cartan_data(args.type)
        lo, hi = _parse_window(args.window)
        q = build_gamma_window(cd, _parse_vertex(args.base), lo, hi)
        seed, kind = initial_seed(q, n=cd.n), cd.kind
    seed = mutate_seq(seed, _parse_seq(args.seq))
    payload = {
        "cartan": kind,
        "attachments": {
            f"{v.node},{v.shift}": seed.attach[v].text() for v in sorted(seed.attach)
        },
        "history": [v.text() for v in seed.history],
    }
    text = "\n".join(
        f"{v.text()} = {seed.attach[v].text()}" for v in sorted(seed.attach)
    )
    _emit(args, payload, text)
    return 0


def _cmd_qchar(args) -> int:
    if args.generator == "kr":
        c = kr_qchar_sl2(args.k, args.shift)
    else:
        gen = prefund_plus_qchar_sl2 if args.sign == "+" else prefund_minus_qchar_sl2
        c = gen(args.shift, args.depth)
    _emit(args, {"poly": c.text(), "depth": c.depth}, c.text())
    return 0


def _cmd_factorize(args) -> int:
    p = parse_lpoly(args.lweight, 1)
    psi = LWeightMono.from_monomial(p.sole_monomial())
    f = factorize(psi)
    payload = {
        "invertible": f"[{f.invertible}]",
        "strings": [{"start": s.start, "len": s.len} for s in f.strings],
        "halflines": [{"base": h.base} for h in f.halflines],
        "simple_as_tensor": is_simple_product(f.factors()),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_lweight(args) -> int:
    p = parse_lpoly(args.expr, 1)
    psi = LWeightMono.from_monomial(p.sole_monomial())
    print(classify(psi))
    return 0


def _cmd_verify(args) -> int:
    if args.what == "mutation":
        cd = cartan_data(args.type)
        v = _parse_vertex(args.vertex)
        half = 3 * 2 * cd.lacing
        window = build_gamma_window(cd, v, v.shift - half, v.shift + half)
        rep = verify_mutation_identity(cd, window, v)
    elif args.what == "baxter":
        rep = verify_baxter_sl2(args.k, args.shift)
    else:
        rep = phi_n_check_sl2(args.N)
    if rep.ok:
        print(rep.text())
        return 0
    print(json.dumps({"name": rep.name, "lhs": rep.lhs, "rhs": rep.rhs, "detail": rep.detail}, indent=2))
    return 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="qac", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixture", help="run one named fixture")
    p.add_argument("name", choices=fixture_names())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_fixture)

    p = sub.add_parser("verify-all", help="run every fixture plus seeded sweeps")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify_all)

    p = sub.add_parser("quiver", help="print a window in adjacency or DOT form")
    p.add_argument("--type", required=True)
    p.add_argument("--base", required=True, help="vertex i,r")
    p.add_argument("--window", required=True, help="bounds lo,hi")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=_cmd_quiver)

    p = sub.add_parser("seed", help="emit an initial seed as JSON")
    p.add_argument("--type", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_seed)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a seed")
    p.add_argument("--seed", help="seed JSON file")
    p.add_argument("--type")
    p.add_argument("--base")
    p.add_argument("--window")
    p.add_argument("--seq", required=True, help='e.g. "(1,0);(1,-2);(1,2)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("qchar", help="print a rank-one character generator")
    gsub = p.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("kr")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--shift", type=int, required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(fn=_cmd_qchar)
    g = gsub.add_parser("prefund")
    g.add_argument("--sign", choices=["+", "-"], required=True)
    g.add_argument("--shift", type=int, required=True)
    g.add_argument("--depth", type=int, required=True)
    g.add_argument("--json", action="store_true")
    g.set_defaults(fn=_cmd_qchar)

    p = sub.add_parser("factorize", help="factor a positive rank-one l-weight")
    p.add_argument("--lweight", required=True)
    p.set_defaults(fn=_cmd_factorize)

    p = sub.add_parser("lweight", help="l-weight utilities")
    lsub = p.add_subparsers(dest="lweight_cmd", required=True)
    l = lsub.add_parser("classify")
    l.add_argument("expr")
    l.set_defaults(fn=_cmd_lweight)

    p = sub.add_parser("verify", help="run one verification")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("mutation")
    v.add_argument("--type", required=True)
    v.add_argument("--vertex", required=True)
    v.set_defaults(fn=_cmd_verify)
    v = vsub.add_parser("baxter")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--shift", type=int, required=True)
    v.set_defaults(fn=_cmd_verify)
    v = vsub.add_parser("phi-n")
    v.add_argument("--N", type=int, required=True)
    v.set_defaults(fn=_cmd_verify)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except QacError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
