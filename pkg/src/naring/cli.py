"""Command-line front end: every library operation with table or JSON output.

Exit codes: 0 success (or asserted-true), 1 asserted-false / refuted,
2 usage error, 3 cap exceeded, 4 I/O or parse error.
"""

import argparse
import json
import sys

from . import caps
from .corpus import (
    aggregate_ok,
    junit_xml,
    list_corpus,
    results_table,
    run_corpus,
)
from .elements import find_special, is_smarandache_element, quasi_regular_scan
from .identities import check_property, ring_identity, smarandache_ring_identity
from .magma import (
    classify,
    enumerate_substructures,
    from_json,
    from_text,
    holds_identity,
    jordan_loop,
    l_loop,
    smarandache_magma_check,
    z_groupoid,
)
from .report import PropertyReport
from .ring import envelope, parse_element, ring
from .substruct import enumerate_ideals, ideal_lattice, lattice_identity

_VARIANTS = {"z": "Z", "zs": "Zstar", "zss": "Zstarstar",
             "zsss": "Zstarstarstar"}


class _UsageError(Exception):
    pass


def _json_dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(args, obj, table_text):
    if args.format == "json":
        print(_json_dump(obj))
    else:
        print(table_text)


def _report_lines(rep):
    lines = [f"property     : {rep.property}",
             f"holds        : {rep.holds}"]
    if rep.witness is not None:
        w = rep.witness.to_json() if hasattr(rep.witness, "to_json") \
            else rep.witness
        lines.append(f"witness      : {w}")
    if rep.counterexample is not None:
        lines.append(f"counterexample: {rep.counterexample}")
    if rep.detail:
        lines.append(f"detail       : {rep.detail}")
    if rep.params:
        lines.append(f"params       : {rep.params}")
    lines.append(f"exhaustive   : {rep.exhaustive}")
    return "\n".join(lines)


def _add_common(p):
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--seedless", action="store_true",
                   help="reserved; no randomness exists and the flag is "
                        "rejected")
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit code reflects the boolean result")


def _add_magma_source(p):
    p.add_argument("--gen-loop", metavar="N,M")
    p.add_argument("--gen-groupoid", metavar="N,T,U,VARIANT")
    p.add_argument("--gen-jordan", metavar="P", type=int)
    p.add_argument("--table", metavar="FILE")


def _ints(text, count, what):
    parts = text.split(",")
    if len(parts) != count:
        raise _UsageError(f"{what} expects {count} comma-separated values")
    return parts


def _magma_from(args, positional_file=None):
    if getattr(args, "gen_loop", None):
        n, m = _ints(args.gen_loop, 2, "--gen-loop")
        return l_loop(int(n), int(m))
    if getattr(args, "gen_groupoid", None):
        n, t, u, var = _ints(args.gen_groupoid, 4, "--gen-groupoid")
        if var not in _VARIANTS:
            raise _UsageError("variant must be one of z, zs, zss, zsss")
        return z_groupoid(int(n), int(t), int(u), _VARIANTS[var])
    if getattr(args, "gen_jordan", None):
        return jordan_loop(args.gen_jordan)
    path = getattr(args, "table", None) or positional_file
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return from_json(text)
        return from_text(text)
    raise _UsageError("no magma given: use --gen-loop, --gen-groupoid, "
                      "--gen-jordan or a table file")


def _build_parser():
    top = argparse.ArgumentParser(prog="naring")
    sub = top.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="emit a Cayley table")
    gsub = gen.add_subparsers(dest="family", required=True)
    gl = gsub.add_parser("loop")
    gl.add_argument("--n", type=int, required=True)
    gl.add_argument("--m", type=int, required=True)
    _add_common(gl)
    gg = gsub.add_parser("groupoid")
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--t", type=int, required=True)
    gg.add_argument("--u", type=int, required=True)
    gg.add_argument("--variant", choices=tuple(_VARIANTS), default="z")
    _add_common(gg)
    gj = gsub.add_parser("jordan")
    gj.add_argument("--p", type=int, required=True)
    _add_common(gj)

    cl = sub.add_parser("classify", help="classify a magma")
    cl.add_argument("file", nargs="?")
    _add_magma_source(cl)
    _add_common(cl)

    mg = sub.add_parser("magma", help="magma-level checks")
    msub = mg.add_subparsers(dest="op", required=True)
    mc = msub.add_parser("check")
    mc.add_argument("identity")
    ms = msub.add_parser("subs")
    ms.add_argument("kind")
    mk = msub.add_parser("scheck")
    mk.add_argument("notion")
    for p in (mc, ms, mk):
        _add_magma_source(p)
        _add_common(p)

    rg = sub.add_parser("ring", help="magma-ring operations")
    rg.add_argument("--mod", type=int, default=None)
    _add_magma_source(rg)
    rsub = rg.add_subparsers(dest="op", required=True)
    for name in ("mul", "add", "circle"):
        p = rsub.add_parser(name)
        p.add_argument("exprs", nargs=2, metavar="EXPR")
        _add_common(p)
    rp = rsub.add_parser("pow")
    rp.add_argument("exprs", nargs=2, metavar=("EXPR", "N"))
    _add_common(rp)
    rf = rsub.add_parser("find")
    rf.add_argument("cls", metavar="CLASS")
    rf.add_argument("--smarandache", action="store_true")
    _add_common(rf)
    rq = rsub.add_parser("scan-qr")
    _add_common(rq)
    ri = rsub.add_parser("ideals")
    ri.add_argument("--lattice", action="store_true")
    ri.add_argument("--check", metavar="IDENTITIES")
    _add_common(ri)
    rc = rsub.add_parser("check")
    rc.add_argument("prop", metavar="PROPERTY")
    rc.add_argument("--param", action="append", default=[], metavar="K=V")
    rc.add_argument("--smarandache", action="store_true")
    _add_common(rc)
    re_ = rsub.add_parser("envelope")
    re_.add_argument("--base", metavar="SUBSET")
    _add_common(re_)

    co = sub.add_parser("corpus", help="the worked-example corpus")
    csub = co.add_subparsers(dest="op", required=True)
    cli_ = csub.add_parser("list")
    _add_common(cli_)
    cr = csub.add_parser("run")
    cr.add_argument("filter", nargs="?", default=None)
    cr.add_argument("--junit", metavar="FILE")
    _add_common(cr)
    return top


def _parse_params(pairs):
    out = {}
    for raw in pairs:
        if "=" not in raw:
            raise _UsageError(f"--param expects K=V, got {raw!r}")
        k, v = raw.split("=", 1)
        try:
            out[k] = int(v)
        except ValueError:
            out[k] = v
    return out


def _magma_json(m):
    return m.to_json()


def _do_gen(args):
    if args.family == "loop":
        m = l_loop(args.n, args.m)
    elif args.family == "groupoid":
        m = z_groupoid(args.n, args.t, args.u, _VARIANTS[args.variant])
    else:
        m = jordan_loop(args.p)
    _emit(args, _magma_json(m), m.to_text())
    return 0


def _do_classify(args):
    m = _magma_from(args, args.file)
    c = classify(m)
    doc = c.to_json()
    lines = [f"{k:<22}: {v}" for k, v in doc.items()]
    _emit(args, doc, "\n".join(lines))
    return 0


def _do_magma(args):
    m = _magma_from(args)
    if args.op == "check":
        rep = holds_identity(m, args.identity.replace("-", "_"))
    elif args.op == "scheck":
        rep = smarandache_magma_check(m, args.notion.replace("-", "_"))
    else:
        subs = enumerate_substructures(m, args.kind.replace("-", "_"))
        doc = [s.to_json() for s in subs]
        lines = [f"{len(subs)} substructure(s) of kind {args.kind}"]
        lines += [f"  {{{', '.join(s.member_labels())}}}" for s in subs]
        _emit(args, doc, "\n".join(lines))
        return 0 if (not args.assert_ or subs) else 1
    _emit(args, rep.to_json(), _report_lines(rep))
    if args.assert_:
        return 0 if rep.holds is True else 1
    return 0


def _ring_from(args):
    if args.mod is None:
        raise _UsageError("ring commands require --mod M")
    return ring(_magma_from(args), args.mod)


_FIND_ALIASES = {
    "zero_divisors": "zero_divisor", "idempotents": "idempotent",
    "units": "unit", "nilpotents": "nilpotent",
    "semi_idempotents": "semi_idempotent",
    "semi_nilpotents": "semi_nilpotent",
}

_S_FIND = {
    "zero_divisor": ("s_zero_divisor", "s_pseudo_zero_divisor",
                     "s_weak_zero_divisor"),
    "idempotent": ("s_idempotent",),
    "unit": ("s_unit",),
    "nilpotent": ("s_nilpotent",),
    "semi_idempotent": ("s_semi_idempotent",),
    "semi_nilpotent": ("s_semi_nilpotent",),
    "quasi_regular": ("s_quasi_regular",),
}


def _do_ring_find(args, r):
    cls = args.cls.replace("-", "_")
    cls = _FIND_ALIASES.get(cls, cls)
    if not args.smarandache:
        hits = find_special(r, cls, cap=args.cap)
        doc = [w.to_json() for w in hits]
        lines = [f"{len(hits)} element(s) in class {cls}"]
        lines += [f"  {w.subject}  {w.relations}" for w in hits]
        _emit(args, doc, "\n".join(lines))
        return 0 if (not args.assert_ or hits) else 1
    s_classes = _S_FIND.get(cls, (cls if cls.startswith("s_")
                                  else f"s_{cls}",))
    plain = find_special(r, cls, cap=args.cap) if cls in _FIND_ALIASES.values() \
        or cls in ("zero_divisor", "idempotent") else None
    candidates = [w.subject for w in plain] if plain is not None else None
    doc = []
    for s_class in s_classes:
        if candidates is None:
            from .elements import RingScan
            scan = RingScan(r, args.cap)
            pool = [scan.label(c) for c in range(1, scan.n)]
        else:
            pool = candidates
        for label in pool:
            x = parse_element(r, label)
            try:
                rep = is_smarandache_element(r, x, s_class, cap=args.cap)
            except ValueError:
                continue
            if rep.holds is True:
                entry = rep.to_json()
                entry["s_class"] = s_class
                doc.append(entry)
    lines = [f"{len(doc)} Smarandache witness(es) for class {cls}"]
    for entry in doc:
        wit = entry.get("witness") or {}
        lines.append(f"  [{entry['s_class']}] {wit.get('subject')} "
                     f"partners={wit.get('partners')}")
    _emit(args, doc, "\n".join(lines))
    return 0 if (not args.assert_ or doc) else 1


def _do_ring_check(args, r):
    name = args.prop.replace("-", "_")
    params = _parse_params(args.param)
    if args.smarandache and not name.startswith(("s_", "sna_")):
        name = f"s_{name}"
    last_err = None
    for fn in (ring_identity, smarandache_ring_identity, check_property):
        try:
            rep = fn(r, name, params=params or None, cap=args.cap)
            break
        except ValueError as exc:
            last_err = exc
            rep = None
    if rep is None:
        raise ValueError(f"unknown property {name!r}: {last_err}")
    _emit(args, rep.to_json(), _report_lines(rep))
    if args.assert_:
        return 0 if rep.holds is True else 1
    return 0


def _do_ring(args):
    r = _ring_from(args)
    if args.op in ("mul", "add", "circle", "pow"):
        x = parse_element(r, args.exprs[0])
        if args.op == "pow":
            n = int(args.exprs[1])
            out = x.power_left(n)
        else:
            y = parse_element(r, args.exprs[1])
            out = {"mul": lambda: x * y, "add": lambda: x + y,
                   "circle": lambda: x.circle(y)}[args.op]()
        doc = {"ring": r.descriptor(), "op": args.op,
               "result": out.text(), "code": out.encode()}
        _emit(args, doc, out.text())
        return 0
    if args.op == "find":
        return _do_ring_find(args, r)
    if args.op == "scan-qr":
        scan = quasi_regular_scan(r, cap=args.cap)
        doc = {
            "ring": r.descriptor(),
            "rqr_count": len(scan["rqr_set"]),
            "lqr_count": len(scan["lqr_set"]),
            "qr_count": len(scan["qr_set"]),
            "W_size": len(scan["W"]),
            "all_W_rqr": scan["all_W_rqr"],
        }
        lines = [f"{k:<12}: {v}" for k, v in doc.items() if k != "ring"]
        _emit(args, doc, "\n".join(lines))
        if args.assert_:
            return 0 if scan["all_W_rqr"] else 1
        return 0
    if args.op == "ideals":
        ideals = enumerate_ideals(r, cap=args.cap)
        doc = {"ring": r.descriptor(), "count": len(ideals),
               "ideals": [sorted(i.codes) for i in ideals]}
        lines = [f"{len(ideals)} ideal(s)"]
        lines += [f"  {{{', '.join(i.member_labels())}}}"
                  if len(i.codes) <= 16 else f"  <{len(i.codes)} elements>"
                  for i in ideals]
        ok = True
        if args.lattice or args.check:
            lat = ideal_lattice(r)
            doc["lattice"] = lat.to_json()
            lines.append(f"lattice: {len(lat)} node(s), "
                         f"{len(lat.hasse_edges())} covering edge(s)")
            if args.check:
                doc["checks"] = {}
                for which in args.check.split(","):
                    which = which.strip().replace("-", "_")
                    rep = lattice_identity(lat, which)
                    doc["checks"][which] = rep.to_json()
                    lines.append(f"  {which}: {rep.holds}")
                    ok = ok and rep.holds is True
        _emit(args, doc, "\n".join(lines))
        if args.assert_:
            return 0 if ok else 1
        return 0
    if args.op == "check":
        return _do_ring_check(args, r)
    if args.op == "envelope":
        base = None
        if args.base:
            base = [s.strip() for s in args.base.split(",")]
        env = envelope(r, base=base)
        doc = {"ring": r.descriptor(), "order": env.order,
               "is_loop": env.is_loop(),
               "commutative": env.is_commutative(),
               "magma": env.to_json()}
        lines = [f"order      : {env.order}",
                 f"is_loop    : {env.is_loop()}",
                 f"commutative: {env.is_commutative()}"]
        _emit(args, doc, "\n".join(lines))
        return 0
    raise _UsageError(f"unknown ring operation {args.op!r}")


def _do_corpus(args):
    if args.op == "list":
        items = list_corpus()
        doc = [i.to_json() for i in items]
        lines = [f"{len(items)} corpus item(s)"]
        lines += [f"  {i.id:<18} expected={i.expected_status}"
                  for i in items]
        _emit(args, doc, "\n".join(lines))
        return 0
    results = run_corpus(args.filter)
    doc = [r.to_json() for r in results]
    _emit(args, doc, results_table(results) if results else "no items match")
    if args.junit:
        with open(args.junit, "w", encoding="utf-8") as fh:
            fh.write(junit_xml(results))
    if args.assert_:
        return 0 if (results and aggregate_ok(results)) else 1
    return 0


def _dispatch(args):
    if getattr(args, "seedless", False):
        print("--seedless is reserved: this tool has no randomness",
              file=sys.stderr)
        return 2
    if getattr(args, "cap", None) is not None and args.cap < 1:
        raise _UsageError("--cap must be positive")
    if args.cmd == "gen":
        return _do_gen(args)
    if args.cmd == "classify":
        return _do_classify(args)
    if args.cmd == "magma":
        return _do_magma(args)
    if args.cmd == "ring":
        return _do_ring(args)
    if args.cmd == "corpus":
        return _do_corpus(args)
    raise _UsageError(f"unknown command {args.cmd!r}")


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return _dispatch(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except caps.CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError, KeyError, IndexError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
