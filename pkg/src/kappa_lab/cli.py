"""Command-line entry point for the pinned-graph workbench.

Exit codes: 0 success, 2 validation failure, 1 internal error.
Structured output is JSON and is byte-identical across identical runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import admissibility, certificates, graph, measure
from .admissibility import ChoicePolicy


def _read_graph(path: str) -> graph.PinnedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph.parse_graph(fh.read())


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) + "\n" if args.format == "structured" else text
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _parse_dims(spec: str) -> list[int]:
    return [int(x) for x in spec.split(",") if x.strip()]


def _parse_generator(args) -> dict:
    gen = {"kind": args.generator, "dim": args.dim}
    if args.generator == "cantor-product":
        gen["ratio"] = args.ratio
        gen["levels"] = args.levels
    elif args.generator == "sphere":
        gen = {"kind": "sphere", "center": [0.0] * args.dim, "radius": args.radius}
    return gen


def cmd_validate(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        g = graph.parse_graph(text)
    except graph.GraphError as exc:
        _emit(args, {"valid": False, "violations": [{"code": type(exc).__name__, "message": str(exc)}]},
              f"invalid: {type(exc).__name__}: {exc}\n")
        return 2
    report = graph.validate(g)
    if report:
        _emit(args, {"valid": False, "violations": [v.to_dict() for v in report]},
              "".join(f"invalid: {v.code}: {v.message}\n" for v in report))
        return 2
    _emit(args, {"valid": True, "violations": []}, "valid\n")
    return 0


def cmd_kappa(args) -> int:
    g = _read_graph(args.input)
    k = admissibility.admissibility_number(g)
    trace = admissibility.run_k_algorithm(g, k)
    _emit(args, {"kappa": k, "witness_k": trace.k, "succeeded": trace.succeeded}, f"{k}\n")
    return 0


def cmd_order(args) -> int:
    g = _read_graph(args.input)
    k = admissibility.admissibility_number(g)
    trace = admissibility.run_k_algorithm(g, k)
    order = admissibility.construction_order_from_trace(g, trace)
    text = "order: " + " ".join(str(v) for v in order.order) + "\n"
    text += "back-degrees: " + " ".join(str(d) for d in order.back_degrees) + "\n"
    _emit(args, {"kappa": k, **order.to_dict()}, text)
    return 0


def cmd_certify(args) -> int:
    g = _read_graph(args.input)
    cert = certificates.schedule_for(g)
    report = certificates.threshold_table(cert.kappa, _parse_dims(args.dims))
    doc = certificates.certificate_document(cert, report)
    _emit(args, doc, certificates.render_plan(cert))
    return 0


def cmd_threshold(args) -> int:
    report = certificates.threshold_table(args.k, _parse_dims(args.dims))
    entries = report.effective()
    text = "".join(
        f"d={e.d}: {e.value}"
        f"{'' if e.valid else '  (no nontrivial result: d <= k)'}\n"
        for e in entries
    )
    _emit(args, {"k": report.k, "thresholds": [e.to_dict() for e in entries]}, text)
    return 0


def cmd_split(args) -> int:
    g = _read_graph(args.input)
    if args.cycle_at:
        a, b = (int(x) for x in args.cycle_at.split(","))
        c1, c2 = certificates.cycle_split(g, a, b)
        payload = {"chains": [graph.graph_to_dict(c) for c in (c1, c2)]}
        text = f"chain 1: {len(c1.edges)} edges; chain 2: {len(c2.edges)} edges\n"
    else:
        comps = certificates.component_split(g)
        kappas = [admissibility.admissibility_number(c) for c in comps]
        payload = {
            "components": [graph.graph_to_dict(c) for c in comps],
            "kappas": kappas,
            "kappa": max(kappas, default=0),
        }
        text = f"{len(comps)} component(s); kappa = {max(kappas, default=0)}\n"
    _emit(args, payload, text)
    return 0


def cmd_sample(args) -> int:
    cloud = measure.sample_cloud(_parse_generator(args), args.n, args.seed)
    dump = measure.cloud_dump(cloud)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump)
    else:
        sys.stdout.write(dump)
    return 0


def cmd_volume(args) -> int:
    g = _read_graph(args.graph)
    sample = measure.sample_config_images(g, args.phi, _parse_generator(args), args.n, args.seed)
    est = measure.estimate_image_volume(sample.image, args.delta)
    _emit(args, {"seed": args.seed, **est.to_dict()},
          f"delta={est.delta} N={est.n_cells} estimate={est.estimate} K={est.K}\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    static = os.environ.get("KAPPA_LAB_STATIC")
    if static is None and os.path.isdir("frontend/dist"):
        static = "frontend/dist"
    uvicorn.run(create_app(static_dir=static), host=args.bind, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kappa-lab", description="Pinned distance-graph workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, inp=True):
        if inp:
            sp.add_argument("--input", required=True, help="graph file (JSON or edge-list form)")
        sp.add_argument("--output", help="write output to this path instead of stdout")
        sp.add_argument("--format", choices=("text", "structured"), default="text")

    sp = sub.add_parser("validate", help="check a graph file against the pinned-graph invariants")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("kappa", help="compute the admissibility number")
    common(sp)
    sp.set_defaults(fn=cmd_kappa)

    sp = sub.add_parser("order", help="emit a construction order with back-degrees")
    common(sp)
    sp.set_defaults(fn=cmd_order)

    sp = sub.add_parser("certify", help="emit the star-decomposition certificate")
    common(sp)
    sp.add_argument("--dims", default="2,3,4", help="comma-separated ambient dimensions")
    sp.set_defaults(fn=cmd_certify)

    sp = sub.add_parser("threshold", help="dimensional threshold table for a budget k")
    common(sp, inp=False)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dims", required=True, help="comma-separated ambient dimensions")
    sp.set_defaults(fn=cmd_threshold)

    sp = sub.add_parser("split", help="split into components, or a cycle into two chains")
    common(sp)
    sp.add_argument("--cycle-at", help="two pins 'a,b' to split a cycle at")
    sp.set_defaults(fn=cmd_split)

    sp = sub.add_parser("sample", help="sample a reproducible point cloud")
    sp.add_argument("--generator", choices=("uniform-cube", "cantor-product", "sphere"), required=True)
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--ratio", type=float, default=1 / 3)
    sp.add_argument("--levels", type=int, default=12)
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output")
    sp.set_defaults(fn=cmd_sample)

    sp = sub.add_parser("volume", help="box-count the configuration image of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--phi", choices=measure.EDGE_VECTOR_KINDS, default="euclidean")
    sp.add_argument("--generator", choices=("uniform-cube", "cantor-product", "sphere"), required=True)
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--ratio", type=float, default=1 / 3)
    sp.add_argument("--levels", type=int, default=12)
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output")
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.set_defaults(fn=cmd_volume)

    sp = sub.add_parser("serve", help="start the local explorer API")
    sp.add_argument("--port", type=int, default=7474)
    sp.add_argument("--bind", default="127.0.0.1")
    sp.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    threads = os.environ.get("KAPPA_LAB_THREADS")
    if threads:
        # cap BLAS worker pools before numpy spins them up
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, threads)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except graph.GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
