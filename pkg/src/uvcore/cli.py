"""Batch front end: generate families, certify graph6 streams, check maps.

Input graphs arrive one graph6 record per line (file path or '-' for
stdin). Reports leave in input order regardless of --jobs, one JSON
object per line (or CSV with a versioned header comment), with a summary
footer. Per-line failures become error reports; the stream never aborts.
"""

import argparse
import json
import sys
from multiprocessing import Pool

from . import families
from .certify import (
    CertReport,
    augmented_graph,
    core_certificate,
    spectral_data,
)
from .errors import SizeBudgetExceeded, UvcoreError
from .graphs import parse_graph6, write_graph6
from .homs import (
    hamming_hom_exists,
    hamming_hom_map,
    kneser_hom_exists,
    kneser_hom_map,
    q_cube_core_classification,
    q_kneser_necessary,
    verify_homomorphism,
    VertexMap,
)

CSV_VERSION = "uvcore-certify-csv v1"
CSV_COLUMNS = [
    "id", "n", "degree", "srg", "tau", "d", "edges",
    "rank", "target", "verdict", "core", "reasons", "ms",
]


def _open_input(path):
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _open_output(path):
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="ascii")


def _report_dict(rep: CertReport):
    return {
        "id": rep.graph_id,
        "n": rep.n,
        "degree": rep.degree,
        "srg": list(rep.srg) if rep.srg else None,
        "tau": rep.tau,
        "d": rep.d,
        "edges": rep.edges,
        "rank": rep.rank,
        "target": rep.target,
        "verdict": rep.verdict,
        "core": rep.core,
        "reasons": list(rep.reasons),
        "ms": rep.ms,
    }


def _certify_line(args):
    index, line, vbudget, ebudget = args
    try:
        g = parse_graph6(line)
        if g.n > vbudget:
            raise SizeBudgetExceeded(
                "%d vertices exceeds budget %d" % (g.n, vbudget)
            )
        if g.edge_count() > ebudget:
            raise SizeBudgetExceeded(
                "%d edges exceeds budget %d" % (g.edge_count(), ebudget)
            )
        rep = core_certificate(g, graph_id=index)
        return index, _report_dict(rep), None
    except UvcoreError as exc:
        return index, None, {"error": exc.code, "index": index, "detail": str(exc)}


def _emit_jsonl(out, obj):
    out.write(json.dumps(obj, separators=(", ", ": ")))
    out.write("\n")


def _emit_csv_row(out, obj):
    row = []
    for col in CSV_COLUMNS:
        v = obj.get(col)
        if isinstance(v, list):
            v = ";".join(str(x) for x in v)
        row.append("" if v is None else str(v))
    out.write(",".join(row) + "\n")


def cmd_certify(ns):
    out = _open_output(ns.output)

    def tasks(f):
        index = 0
        for line in f:
            line = line.strip()
            if line:
                yield (index, line, ns.budget_vertices, ns.budget_edges)
                index += 1

    if ns.format == "csv":
        out.write("# %s\n" % CSV_VERSION)
        out.write(",".join(CSV_COLUMNS) + "\n")
    counts = {"total": 0, "tight": 0, "loose": 0, "certified_core": 0, "errors": 0}
    # stream: lines are consumed lazily and results come back in input
    # order (imap), so arbitrarily long lists run in bounded memory
    with _open_input(ns.input) as f:
        if ns.jobs > 1:
            pool = Pool(ns.jobs)
            results = pool.imap(_certify_line, tasks(f), chunksize=1)
        else:
            pool = None
            results = map(_certify_line, tasks(f))
        try:
            for _, rep, err in results:
                counts["total"] += 1
                if err is not None:
                    counts["errors"] += 1
                    if ns.format == "csv":
                        _emit_csv_row(out, {"id": err["index"], "core": "error",
                                            "reasons": [err["error"]]})
                    else:
                        _emit_jsonl(out, err)
                    continue
                if rep["verdict"] == "tight":
                    counts["tight"] += 1
                elif rep["verdict"] == "loose":
                    counts["loose"] += 1
                if rep["core"] == "certified":
                    counts["certified_core"] += 1
                if ns.format == "csv":
                    _emit_csv_row(out, rep)
                else:
                    _emit_jsonl(out, rep)
        finally:
            if pool is not None:
                pool.close()
                pool.join()
    if ns.format == "csv":
        out.write("# summary %s\n" % json.dumps(counts, sort_keys=True))
    else:
        _emit_jsonl(out, {"summary": counts})
    if out is not sys.stdout:
        out.close()
    return min(counts["errors"], 100)


def cmd_gen(ns):
    vb = ns.budget_vertices
    eb = ns.budget_edges
    fam = ns.family
    p = ns.params
    if fam == "kneser":
        g = families.kneser(p[0], p[1], vb, eb)
    elif fam == "q-kneser":
        g = families.q_kneser(p[0], p[1], p[2], vb, eb)
    elif fam == "hamming-h":
        g = families.hamming_h(p[0], p[1], vb, eb)
    elif fam == "hamming-h-prime":
        g = families.hamming_h_prime(p[0], p[1], vb, eb)
    elif fam == "q-cube":
        g = families.q_cube(p[0], p[1], vb, eb)
    elif fam == "cayley-z2":
        g = families.cayley_z2(p[0], p[1:], vb, eb)
    else:
        raise SystemExit("unknown family: %s" % fam)
    out = _open_output(ns.output)
    out.write(write_graph6(g).decode("ascii") + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_augment(ns):
    out = _open_output(ns.output)
    errors = 0
    with _open_input(ns.input) as f:
        for i, line in enumerate(s.strip() for s in f):
            if not line:
                continue
            try:
                g = parse_graph6(line)
                out.write(write_graph6(augmented_graph(g)).decode("ascii") + "\n")
            except UvcoreError as exc:
                errors += 1
                _emit_jsonl(out, {"error": exc.code, "index": i, "detail": str(exc)})
    if out is not sys.stdout:
        out.close()
    return min(errors, 100)


def cmd_spectra(ns):
    out = _open_output(ns.output)
    errors = 0
    with _open_input(ns.input) as f:
        for i, line in enumerate(s.strip() for s in f):
            if not line:
                continue
            try:
                sd = spectral_data(parse_graph6(line))
                _emit_jsonl(out, {"phi": list(sd.phi), "tau": sd.tau, "d": sd.d})
            except UvcoreError as exc:
                errors += 1
                _emit_jsonl(out, {"error": exc.code, "index": i, "detail": str(exc)})
    if out is not sys.stdout:
        out.close()
    return min(errors, 100)


def cmd_hom(ns):
    out = _open_output(ns.output)
    kind = ns.kind
    p = ns.params
    try:
        if kind == "kneser":
            obj = {"exists": kneser_hom_exists(p[0], p[1], p[2], p[3])}
        elif kind == "kneser-map":
            vm = kneser_hom_map(p[0], p[1], p[2])
            obj = {"source_n": vm.source_n, "target_n": vm.target_n,
                   "image": list(vm.image)}
        elif kind == "hamming":
            obj = {"exists": hamming_hom_exists(p[0], p[1], p[2], p[3])}
        elif kind == "hamming-map":
            vm = hamming_hom_map(p[0], p[1], p[2])
            obj = {"source_n": vm.source_n, "target_n": vm.target_n,
                   "image": list(vm.image)}
        elif kind == "q-kneser":
            obj = {"necessary_condition":
                   q_kneser_necessary(p[0], p[1], p[2], p[3], p[4], p[5])}
        elif kind == "q-cube-class":
            obj = {"case": q_cube_core_classification(p[0], p[1])}
        else:
            raise SystemExit("unknown hom check: %s" % kind)
    except UvcoreError as exc:
        _emit_jsonl(out, {"error": exc.code, "detail": str(exc)})
        if out is not sys.stdout:
            out.close()
        return 1
    _emit_jsonl(out, obj)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_hom_verify(ns):
    out = _open_output(ns.output)
    with open(ns.source, encoding="ascii") as f:
        g = parse_graph6(f.readline())
    with open(ns.target, encoding="ascii") as f:
        h = parse_graph6(f.readline())
    with open(ns.map, encoding="ascii") as f:
        image = json.load(f)
    try:
        vm = VertexMap(g.n, h.n, tuple(image))
        v = verify_homomorphism(g, h, vm)
        _emit_jsonl(out, {"is_hom": v.is_hom, "is_injective": v.is_injective,
                          "is_induced_embedding": v.is_induced_embedding})
        code = 0
    except UvcoreError as exc:
        _emit_jsonl(out, {"error": exc.code, "detail": str(exc)})
        code = 1
    if out is not sys.stdout:
        out.close()
    return code


def build_parser():
    ap = argparse.ArgumentParser(
        prog="uvcore",
        description="exact vector-coloring certificates and family generators",
    )
    ap.add_argument("--output", default=None, help="output path (default stdout)")
    ap.add_argument("--budget-vertices", type=int,
                    default=families.DEFAULT_VERTEX_BUDGET)
    ap.add_argument("--budget-edges", type=int,
                    default=families.DEFAULT_EDGE_BUDGET)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit one family member as graph6")
    g.add_argument("family", choices=[
        "kneser", "q-kneser", "hamming-h", "hamming-h-prime",
        "q-cube", "cayley-z2",
    ])
    g.add_argument("params", type=int, nargs="+")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("certify", help="certify a stream of graph6 lines")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    c.set_defaults(func=cmd_certify)

    a = sub.add_parser("augment", help="emit the inner-product augmentation")
    a.add_argument("input", nargs="?", default="-")
    a.set_defaults(func=cmd_augment)

    s = sub.add_parser("spectra", help="characteristic polynomial and tau, d")
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_spectra)

    h = sub.add_parser("hom", help="family homomorphism checks and maps")
    h.add_argument("kind", choices=[
        "kneser", "kneser-map", "hamming", "hamming-map",
        "q-kneser", "q-cube-class",
    ])
    h.add_argument("params", type=int, nargs="+")
    h.set_defaults(func=cmd_hom)

    hv = sub.add_parser("hom-verify", help="verify a user-supplied vertex map")
    hv.add_argument("--source", required=True, help="graph6 file (first line)")
    hv.add_argument("--target", required=True, help="graph6 file (first line)")
    hv.add_argument("--map", required=True,
                    help="JSON array mapping source index to target index")
    hv.set_defaults(func=cmd_hom_verify)
    return ap


def main(argv=None):
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
