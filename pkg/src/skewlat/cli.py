"""Command-line front end.

All machine-readable output goes to stdout as JSON with sorted keys;
human summaries go to stderr.  Exit codes: 0 success, 1 domain finding
(invalid algebra, failed --assert, discordant report), 2 usage or parse
error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as _catalog
from . import core, cosets, decompose, greens, laws, matrix_rings, varieties
from .errors import InternalInconsistency, SkewLatticeError

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _emit(obj):
    json.dump(obj, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _info(msg):
    print(msg, file=sys.stderr)


def _load_algebra(path):
    try:
        with open(path) as f:
            d = json.load(f)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}")
    try:
        return core.from_json_dict(d)
    except (KeyError, TypeError) as e:
        raise UsageError(f"{path} does not match the algebra format: {e}")


def _validated(path):
    s, names = _load_algebra(path)
    rep = core.validate(s.meet.entries, s.join.entries)
    if not rep.valid:
        raise SkewLatticeError(f"{path}: not a skew lattice: {rep.failures[0]}")
    return s, names


def cmd_validate(args):
    s, _ = _load_algebra(args.file)
    rep = core.validate(s.meet.entries, s.join.entries)
    _emit(rep.to_dict())
    _info(f"{args.file}: {'valid' if rep.valid else 'invalid'}")
    return EXIT_OK if rep.valid else EXIT_FINDING


def cmd_classify(args):
    s, _ = _validated(args.file)
    wanted = args.predicates.split(",") if args.predicates else None
    if wanted:
        unknown = [p for p in wanted if p not in varieties.PREDICATES]
        if unknown:
            raise UsageError(f"unknown predicates: {', '.join(unknown)}")
    out = varieties.classify(s, wanted).to_dict()
    _emit(out)
    _info(
        f"{args.file}: {sum(1 for v in out.values() if v['holds'])}"
        f"/{len(out)} predicates hold"
    )
    if args.assert_true:
        if args.assert_true not in out:
            raise UsageError(f"unknown predicate: {args.assert_true}")
        if not out[args.assert_true]["holds"]:
            _info(f"assertion failed: {args.assert_true} is false")
            return EXIT_FINDING
    return EXIT_OK


def cmd_greens(args):
    s, _ = _validated(args.file)
    d, leq = greens.dclass_order(s)
    boxes = greens.eggboxes(s)
    _emit(
        {
            "R": greens.green_R(s).to_json_blocks(),
            "L": greens.green_L(s).to_json_blocks(),
            "D": d.to_json_blocks(),
            "H": greens.green_H(s).to_json_blocks(),
            "dclass_leq": [[bool(v) for v in row] for row in leq],
            "eggboxes": [
                {
                    "dclass": sorted(b.dclass),
                    "rows": [list(r) for r in b.rows],
                    "cols": [list(c) for c in b.cols],
                    "grid": [list(r) for r in b.grid],
                }
                for b in boxes
            ],
        }
    )
    _info(f"{args.file}: {len(boxes)} D-classes")
    return EXIT_OK


def cmd_cosets(args):
    s, _ = _validated(args.file)
    pairs = cosets.comparable_pairs(s)
    _emit(
        [
            cosets.coset_system_to_json(cosets.flat_cosets(s, pair))
            for pair in pairs
        ]
    )
    _info(f"{args.file}: {len(pairs)} comparable D-class pairs")
    return EXIT_OK


def cmd_decompose(args):
    s, _ = _validated(args.file)
    dec = decompose.kimura(s)
    sec = decompose.find_lattice_section(s)
    _emit(
        {
            "kimura": decompose.kimura_to_json(dec),
            "sections": decompose.sections_to_json(sec),
        }
    )
    _info(
        f"{args.file}: factors of orders "
        f"{dec.left_factor.quotient.n} and {dec.right_factor.quotient.n} "
        f"over a base of order {dec.base.quotient.n}"
    )
    return EXIT_OK


def _cached_catalog(order, method, workers):
    cache_dir = os.environ.get("SKEWLAT_CACHE_DIR")
    if cache_dir:
        slot = os.path.join(cache_dir, f"{method}-order{order}")
        if os.path.exists(os.path.join(slot, "index.json")):
            return _catalog.load_catalog(slot)
        cat = _catalog.enumerate_catalog(order, method=method, workers=workers)
        _catalog.save_catalog(cat, slot)
        return cat
    return _catalog.enumerate_catalog(order, method=method, workers=workers)


def cmd_enumerate(args):
    method = "naive-oracle" if args.oracle else "pruned-search"
    cat = _cached_catalog(args.order, method, args.workers)
    if args.out:
        _catalog.save_catalog(cat, args.out)
    _emit(
        {
            "order": cat.order,
            "provenance": cat.provenance,
            "count": len(cat.algebras),
            "algebras": [core.to_json_dict(s) for s in cat.algebras],
        }
    )
    _info(
        f"order {cat.order}: {len(cat.algebras)} algebras "
        f"up to isomorphism ({cat.provenance})"
    )
    return EXIT_OK


def _parse_pairs(text):
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"expected 'x,y' pairs separated by ';': {text!r}")
        out.append((int(parts[0]), int(parts[1])))
    return out


def cmd_matrix(args):
    dims = tuple(int(x) for x in args.dims.split(","))
    if len(dims) != 3:
        raise UsageError("--dims must give three block sizes, e.g. 1,1,1")
    if dims != (1, 1, 1):
        raise UsageError("scalar parameters require --dims 1,1,1")
    block = lambda v: ((v,),)
    if args.sweep:
        field = range(args.p)
        pairs = [(x, y) for x in field for y in field]
        a_params = pairs
        b_params = pairs
    else:
        a_params = _parse_pairs(args.a_params)
        b_params = _parse_pairs(args.b_params)
    a_params = [(block(x), block(y)) for x, y in a_params]
    b_params = [(block(x), block(y)) for x, y in b_params]
    build = (
        matrix_rings.primitive_right_handed
        if args.construction == "right"
        else matrix_rings.primitive_left_handed
    )
    msl = build(args.p, dims, a_params, b_params)
    report = matrix_rings.matrix_coset_remark_check(msl, dims)
    factored = 0
    for m in msl.elements:
        lo, hi = matrix_rings.triangular_factorization(m, dims)
        if lo @ hi != m:
            raise InternalInconsistency("triangular factorization mismatch")
        factored += 1
    _emit(
        {
            "model": msl.to_json_dict(),
            "coset_report": report.to_json_dict(),
            "factorizations_verified": factored,
        }
    )
    _info(
        f"GF({args.p}) {args.construction}-handed, blocks {dims}: "
        f"order {len(msl.elements)}, coset report {report.verdict}"
    )
    return EXIT_OK if report.verdict == "concordant" else EXIT_FINDING


def _verify_one(task):
    idx, tables, label, selected = task
    s = core.SkewLattice(*tables)
    return idx, [
        laws.ALL_LAW_CHECKS[name](s, label).to_json_dict() for name in selected
    ]


def cmd_verify(args):
    selected = (
        args.laws.split(",") if args.laws else sorted(laws.ALL_LAW_CHECKS)
    )
    unknown = [x for x in selected if x not in laws.ALL_LAW_CHECKS]
    if unknown:
        raise UsageError(f"unknown laws: {', '.join(unknown)}")

    algebras = []
    for path in args.files:
        s, _ = _validated(path)
        algebras.append((s, path))
    if args.catalog:
        cat = _catalog.load_catalog(args.catalog)
        for i, s in enumerate(cat.algebras):
            algebras.append((s, f"catalog-order{cat.order}-{i:04d}"))
    if args.order:
        for n in range(1, args.order + 1):
            cat = _cached_catalog(n, "pruned-search", args.workers)
            for i, s in enumerate(cat.algebras):
                algebras.append((s, f"order{n}-{i:04d}"))
    if not algebras:
        raise UsageError("nothing to verify: give files, --catalog, or --order")

    tasks = [
        (i, (s.meet.entries, s.join.entries), label, selected)
        for i, (s, label) in enumerate(algebras)
    ]
    if args.workers > 1 and len(tasks) > 1:
        from multiprocessing import Pool

        with Pool(args.workers) as pool:
            results = dict(pool.imap_unordered(_verify_one, tasks))
    else:
        results = dict(map(_verify_one, tasks))
    reports = [rep for i in range(len(tasks)) for rep in results[i]]

    _emit(reports)
    discordant = [r for r in reports if r["verdict"] != "concordant"]
    _info(
        f"{len(algebras)} algebras x {len(selected)} law families: "
        f"{len(reports) - len(discordant)} concordant, "
        f"{len(discordant)} discordant"
    )
    for r in discordant:
        _info(f"  discordant: {r['algebra']} / {r['law']}: {r['witness']}")
    return EXIT_FINDING if discordant else EXIT_OK


def cmd_export(args):
    s, names = _validated(args.file)
    if args.format == "dot":
        sys.stdout.write(greens.to_dot(s, names))
    else:
        sys.stdout.write(core.to_json(s, names))
    _info(f"{args.file}: exported as {args.format}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="skewlat", description="Compute with finite skew lattices."
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the skew-lattice axioms")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="evaluate the identity predicates")
    p.add_argument("file")
    p.add_argument("--predicates", help="comma-separated subset to report")
    p.add_argument(
        "--assert", dest="assert_true", help="exit 1 unless this predicate holds"
    )
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("greens", help="Green's relations and eggboxes")
    p.add_argument("file")
    p.set_defaults(fn=cmd_greens)

    p = sub.add_parser("cosets", help="coset systems of comparable D-classes")
    p.add_argument("file")
    p.set_defaults(fn=cmd_cosets)

    p = sub.add_parser("decompose", help="fibered-product decomposition")
    p.add_argument("file")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("enumerate", help="catalog all algebras of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument(
        "--oracle", action="store_true", help="use the naive full-scan method"
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="also save the catalog to this directory")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("matrix", help="matrix models over a prime field")
    p.add_argument("--p", type=int, required=True)
    p.add_argument(
        "--construction", choices=("right", "left"), default="right"
    )
    p.add_argument("--dims", default="1,1,1", help="three block sizes")
    p.add_argument(
        "--sweep",
        action="store_true",
        help="use every scalar parameter pair over the field",
    )
    p.add_argument("--a-params", help="upper-class pairs 'x,y;x,y;...'")
    p.add_argument("--b-params", help="lower-class pairs 'x,y;x,y;...'")
    p.set_defaults(fn=cmd_matrix)

    p = sub.add_parser("verify", help="run the law-concordance harness")
    p.add_argument("files", nargs="*")
    p.add_argument("--laws", help="comma-separated law families")
    p.add_argument("--catalog", help="saved catalog directory")
    p.add_argument(
        "--order", type=int, help="verify every catalog algebra up to this order"
    )
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export", help="write DOT or canonical JSON")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(fn=cmd_export)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        _info(f"error: {e}")
        return EXIT_USAGE
    except InternalInconsistency as e:
        _info(f"internal inconsistency: {e}")
        return EXIT_INTERNAL
    except SkewLatticeError as e:
        _info(f"error: {e}")
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
