"""Command line interface: ``hessdeform <group> <command> [options]``.

Every command can print a JSON envelope (``--json``)::

    {"command": ..., "inputs": {...}, "result": ..., "citations": [...], "status": ...}

Exit codes: 0 ok, 1 unresolved, 2 theorem violation, 64 usage error,
70 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, filtered, symcoh
from .bwb import bott_line, eweight_to_fundamental, weyl_dim
from .errors import InternalContradiction, RejectedInput, ResourceLimit, Unresolved
from .rootsys import (
    CartanType,
    build_root_system,
    distinguished_roots,
    format_root,
    subsystem_distinguished,
)
from . import typea
from .typea.scalars import INF, fmt

EXIT_OK = 0
EXIT_UNRESOLVED = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64
EXIT_RESOURCE = 70

STATUS_EXIT = {
    "ok": EXIT_OK,
    "conjecture-report": EXIT_OK,
    "unresolved": EXIT_UNRESOLVED,
    "theorem-violation": EXIT_VIOLATION,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def jsonable(x):
    """Recursively convert to JSON-native values; rationals become 'p/q' strings."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if isinstance(x, Fraction) or x is INF:
        return fmt(x)
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return int(x)
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    if hasattr(x, "item"):  # numpy scalar
        return jsonable(x.item())
    return str(x)


def dumps(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


def envelope(command, inputs, result, citations=(), status="ok"):
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "citations": list(citations),
        "status": status,
    }


# -- argument parsing helpers -------------------------------------------------

def _ints(text):
    try:
        return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _rs(args):
    try:
        return build_root_system(CartanType(args.type, args.rank))
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc


def _weight(args, rs):
    if getattr(args, "type_a_eweight", None):
        if rs.cartan_type.family != "A":
            raise UsageError("--type-a-eweight needs type A")
        e = _ints(args.type_a_eweight)
        if len(e) != rs.rank + 1:
            raise UsageError(f"expected {rs.rank + 1} e-coordinates")
        return eweight_to_fundamental(e)
    if args.weight is None:
        raise UsageError("give --weight or --type-a-eweight")
    w = _ints(args.weight)
    if len(w) != rs.rank:
        raise UsageError(f"expected {rs.rank} fundamental coordinates, got {len(w)}")
    return w


def _matrix(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix is not valid JSON: {exc}") from exc
    return data


def _type_inputs(args):
    return {"type": args.type, "rank": args.rank}


# -- commands -------------------------------------------------------------------

def cmd_rootsys_info(args):
    rs = _rs(args)
    d = distinguished_roots(rs)
    out = {
        "cartan_type": str(rs.cartan_type),
        "cartan_matrix": rs.cartan_matrix.tolist(),
        "num_positive_roots": rs.num_positive,
        "dimension": rs.dimension,
        "coxeter_number": rs.coxeter_number,
        "simple_root_norms": list(rs.simple_norms),
        "theta": format_root(rs.theta),
    }
    if d.delta0 is not None:
        out["delta0"] = [i + 1 for i in sorted(d.delta0)]
        out["boundary"] = [i + 1 for i in sorted(d.boundary)]
        sub = subsystem_distinguished(rs, d.delta0)
        out["theta0"] = format_root(sub.theta0)
        out["theta0_plus"] = format_root(sub.theta0_plus) if sub.theta0_plus else None
        out["theta0_plus_plus"] = format_root(sub.theta0_plus_plus) if sub.theta0_plus_plus else None
    if d.theta_plus is not None:
        out["theta_plus"] = format_root(d.theta_plus)
        out["k"] = d.k_index + 1
        out["theta_plus_plus"] = format_root(d.theta_plus_plus)
    if args.roots:
        out["positive_roots"] = [format_root(a) for a in rs.positive_roots]
    return envelope("rootsys info", _type_inputs(args), out)


def cmd_bwb_line(args):
    rs = _rs(args)
    lam = _weight(args, rs)
    res = bott_line(rs, lam)
    inputs = {**_type_inputs(args), "weight": list(lam)}
    return envelope("bwb line", inputs, res.to_json(), ["Borel-Weil-Bott theorem", "Weyl dimension formula"])


def cmd_bwb_dim(args):
    rs = _rs(args)
    lam = _weight(args, rs)
    inputs = {**_type_inputs(args), "weight": list(lam)}
    try:
        d = weyl_dim(rs, lam)
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    return envelope("bwb dim", inputs, {"dimension": d}, ["Weyl dimension formula"])


def _rows_json(table):
    return [
        {
            "alpha": format_root(r.alpha),
            "alpha_coords": list(r.alpha),
            "case": r.case_tag,
            "w": r.w_string(),
            "length": r.degree,
            "dominant_weight": list(r.dominant_weight),
            "ht_P": r.ht_p,
        }
        for r in table.rows
    ]


def cmd_tables_regular(args):
    rs = _rs(args)
    if rs.rank < 2:
        raise UsageError("tables need rank >= 2")
    reg = filtered.enumerate_regular(rs)
    sh = filtered.enumerate_regular_shift(rs)
    problems = filtered.verify_regular_table(rs, reg) + filtered.verify_regular_table(rs, sh)
    out = {"regular_alpha_plus_rho": _rows_json(reg), "regular_alpha_minus_theta_plus_rho": _rows_json(sh),
           "self_check_problems": problems}
    return envelope("tables regular", _type_inputs(args), out, ["Borel-Weil-Bott theorem"],
                    "theorem-violation" if problems else "ok")


def cmd_hess_deform(args, which):
    rs = _rs(args)
    fn = filtered.deformation_table_X if which == "x" else filtered.deformation_table_Y
    try:
        tab = fn(rs)
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    cite = ["deformations of codimension-one regular semisimple Hessenberg varieties",
            "Kodaira-Spencer surjectivity (assumed)"]
    return envelope(f"hess deform-{which}", _type_inputs(args), tab.to_json(), cite)


def cmd_hess_vanishing(args):
    rs = _rs(args)
    case = filtered.PARABOLIC if args.parabolic else filtered.BOREL
    try:
        prof = filtered.resolve_cohomology(rs, filtered.build_twisted_pair(rs, case))
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    status = "ok" if prof.exact else "unresolved"
    inputs = {**_type_inputs(args), "case": case}
    return envelope("hess vanishing", inputs, prof.to_json(), ["Borel-Weil-Bott theorem"], status)


def _config(text, allow_inf):
    try:
        return typea.parse_config(text, allow_inf=allow_inf)
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc


def cmd_typea_iso(args, flavor):
    allow_inf = flavor == "y"
    c1, c2 = _config(args.eigs, allow_inf), _config(args.eigs2, allow_inf)
    fn = typea.affine_equivalent if flavor == "x" else typea.mobius_equivalent
    hit = fn(c1, c2)
    result = {"equivalent": hit is not None}
    if hit is not None:
        m, p = hit
        result["map"] = m.to_json()
        result["permutation"] = typea.cycles(p)
        result["image_indices"] = [j + 1 for j in p]
    inputs = {"eigs": c1, "eigs2": c2}
    return envelope(f"typea iso{flavor}", inputs, result, ["isomorphism criterion for X(s) / Y(s) in type A"])


def cmd_typea_aut(args):
    c = _config(args.eigs, args.flavor == "y")
    rep = typea.aut_report(c, args.flavor)
    return envelope("typea aut", {"eigs": c, "flavor": args.flavor}, rep,
                    ["automorphism groups of X(s) and Y(s) in type A"])


def cmd_typea_canon(args):
    c = _config(args.eigs, args.flavor == "y")
    return envelope("typea canon", {"eigs": c, "flavor": args.flavor},
                    {"canonical_point": typea.canonical_point(c, args.flavor)})


def cmd_typea_charsearch(args):
    try:
        hits = typea.characterize_search(args.n, args.box, args.kmax)
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    from .typea.lemma import label_eweight

    result = {"weights": [list(h) for h in hits], "labels": [label_eweight(h) for h in hits]}
    return envelope("typea charsearch", {"n": args.n, "box": args.box, "kmax": args.kmax}, result,
                    ["Borel-Weil-Bott theorem"])


def cmd_typea_symmetrize(args):
    from .typea.linalg import to_fractions

    try:
        Q = typea.symmetrize(_matrix(args.matrix))
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    return envelope("typea symmetrize", {"matrix": _matrix(args.matrix)}, {"Q": to_fractions(Q)})


def cmd_typea_pencil(args):
    try:
        raw = typea.pencil_charpoly_raw(_matrix(args.a), _matrix(args.b))
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    from .typea.linalg import primitive

    return envelope("typea pencil", {"a": _matrix(args.a), "b": _matrix(args.b)},
                    {"coefficients": primitive(raw), "raw": raw, "order": "u^n, u^(n-1) v, ..., v^n"})


def _reports_status(reports):
    return "ok" if all(r.status == "ok" for r in reports) else "theorem-violation"


def _beta(args, rs):
    if args.beta is None:
        return None
    b = _ints(args.beta)
    if not rs.is_positive_root(b):
        raise UsageError(f"{b} is not a positive root of {rs.cartan_type}")
    return b


def cmd_symcoh(args):
    rs = _rs(args)
    cap = args.cap
    kind = args.symcmd
    inputs = {**_type_inputs(args), "n": args.n}
    try:
        if kind == "short":
            beta = _beta(args, rs)
            betas = [beta] if beta else [b for b in rs.positive_roots if rs.is_short[rs.index[b]]]
            reps = [r for b in betas for r in symcoh.check_short_all_alpha(rs, b, args.n, cap)]
            status = _reports_status(reps)
        elif kind == "long":
            beta = _beta(args, rs)
            betas = [beta] if beta else [b for b in rs.positive_roots if rs.is_long[rs.index[b]]]
            reps = [symcoh.check_long(rs, b, args.n, cap) for b in betas]
            status = _reports_status(reps)
        elif kind == "para":
            reps = [symcoh.check_parabolic_A(rs, args.n, cap)]
            status = _reports_status(reps)
        elif kind == "conjecture":
            reps = [symcoh.check_conjecture(rs, args.n, args.shift, cap)]
            status = "conjecture-report"
        else:
            res = symcoh.demazure_chi_rules(rs, args.trials, args.seed, max(args.n, 0), cap)
            reps = [r for v in res.values() for r in v]
            status = _reports_status(reps)
            inputs.update({"trials": args.trials, "seed": args.seed})
    except RejectedInput as exc:
        raise UsageError(str(exc)) from exc
    if args.beta:
        inputs["beta"] = list(_ints(args.beta))
    bad = [r for r in reps if r.status == "theorem-violation"]
    result = {"reports": [r.to_json() for r in (bad or reps)][:200], "checked": len(reps), "violations": len(bad)}
    return envelope(f"symcoh {kind}", inputs, result, ["Euler characteristics of S^n n^* on G/B"], status)


def cmd_verify_all(args):
    from .verify import run_all

    only = None
    if args.only:
        only = _ints(args.only)
        from .verify import CRITERIA

        unknown = [k for k in only if k not in CRITERIA]
        if unknown:
            raise UsageError(f"no criterion {unknown}; choose from {sorted(CRITERIA)}")
    results = run_all(args.max_rank, args.jobs, only)
    for r in results:
        print(r.line(), file=sys.stderr if args.json else sys.stdout)
    ok = all(r.passed for r in results)
    env = envelope("verify all", {"max_rank": args.max_rank, "jobs": args.jobs, "only": list(only or [])},
                   [r.to_json() for r in results], [], "ok" if ok else "theorem-violation")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(env) + "\n")
    return env


# -- parser -------------------------------------------------------------------

def _add_type(p):
    p.add_argument("--type", required=True, choices=list("ABCDEFG"), type=str.upper)
    p.add_argument("--rank", required=True, type=int)


def _add_json(p):
    p.add_argument("--json", action="store_true", help="print the JSON envelope")


def build_parser():
    parser = _Parser(prog="hessdeform", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"hessdeform {__version__}")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("rootsys").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("info")
    _add_type(p)
    p.add_argument("--roots", action="store_true", help="list the positive roots")
    _add_json(p)
    p.set_defaults(func=cmd_rootsys_info)

    g = groups.add_parser("bwb").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn in (("line", cmd_bwb_line), ("dim", cmd_bwb_dim)):
        p = g.add_parser(name)
        _add_type(p)
        p.add_argument("--weight", help="fundamental coordinates, e.g. --weight=-1,0")
        p.add_argument("--type-a-eweight", help="type A only: e-coordinates, e.g. 1,0,0,-1")
        _add_json(p)
        p.set_defaults(func=fn)

    g = groups.add_parser("tables").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("regular")
    _add_type(p)
    _add_json(p)
    p.set_defaults(func=cmd_tables_regular)

    g = groups.add_parser("hess").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for which in ("x", "y"):
        p = g.add_parser(f"deform-{which}")
        _add_type(p)
        _add_json(p)
        p.set_defaults(func=lambda a, w=which: cmd_hess_deform(a, w))
    p = g.add_parser("vanishing")
    _add_type(p)
    p.add_argument("--parabolic", action="store_true")
    _add_json(p)
    p.set_defaults(func=cmd_hess_vanishing)

    g = groups.add_parser("typea").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for flavor in ("x", "y"):
        p = g.add_parser(f"iso{flavor}")
        p.add_argument("--eigs", required=True)
        p.add_argument("--eigs2", required=True)
        _add_json(p)
        p.set_defaults(func=lambda a, f=flavor: cmd_typea_iso(a, f))
    for name, fn in (("aut", cmd_typea_aut), ("canon", cmd_typea_canon)):
        p = g.add_parser(name)
        p.add_argument("--eigs", required=True)
        p.add_argument("--flavor", choices=["x", "y"], type=str.lower, default="x")
        _add_json(p)
        p.set_defaults(func=fn)
    p = g.add_parser("charsearch")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--box", type=int, default=3)
    p.add_argument("--kmax", type=int, default=10)
    _add_json(p)
    p.set_defaults(func=cmd_typea_charsearch)
    p = g.add_parser("symmetrize")
    p.add_argument("--matrix", required=True, help='JSON rows, e.g. "[[0,1],[2,1]]"')
    _add_json(p)
    p.set_defaults(func=cmd_typea_symmetrize)
    p = g.add_parser("pencil")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_json(p)
    p.set_defaults(func=cmd_typea_pencil)

    g = groups.add_parser("symcoh").add_subparsers(dest="symcmd", required=True, parser_class=_Parser)
    for name in ("short", "long", "para", "conjecture", "demazure"):
        p = g.add_parser(name)
        _add_type(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--beta", help="positive root in simple-root coordinates, e.g. 1,1")
        p.add_argument("--cap", type=int, default=None, help="combinatorial cap (default from HESSDEFORM_CAP or 10^6)")
        if name == "conjecture":
            p.add_argument("--shift", type=int, default=None)
        if name == "demazure":
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
        _add_json(p)
        p.set_defaults(func=cmd_symcoh)

    g = groups.add_parser("verify").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("all")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--only", help="comma-separated criterion numbers (default: all)")
    p.add_argument("--out")
    _add_json(p)
    p.set_defaults(func=cmd_verify_all)
    return parser


def _render_human(env):
    res = env["result"]
    cmd = env["command"]
    lines = []
    if cmd == "tables regular":
        for key, title in (("regular_alpha_plus_rho", "alpha with alpha+rho regular"),
                           ("regular_alpha_minus_theta_plus_rho", "alpha with alpha-theta+rho regular")):
            lines.append(title)
            lines.append(f"  {'case':<6} {'alpha':<28} {'w':<16} {'l(w)':>4} {'ht_P':>5}  w(.)-rho")
            for r in res[key]:
                lines.append(f"  {r['case']:<6} {r['alpha']:<28} {r['w']:<16} {r['length']:>4} {r['ht_P']:>5}  "
                             f"{tuple(r['dominant_weight'])}")
        if res["self_check_problems"]:
            lines.append("self-check problems: " + "; ".join(res["self_check_problems"]))
    elif cmd == "verify all":
        passed = sum(1 for r in res if r["passed"])
        lines.append(f"{passed}/{len(res)} criteria passed")
    elif isinstance(res, dict):
        for k in sorted(res):
            lines.append(f"{k}: {json.dumps(jsonable(res[k]), ensure_ascii=False)}")
    else:
        lines.append(json.dumps(jsonable(res), ensure_ascii=False))
    lines.append(f"status: {env['status']}")
    return "\n".join(lines)


def run(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        env = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except Unresolved as exc:
        print(f"unresolved: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except RejectedInput as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    env["inputs"] = jsonable(env["inputs"])
    if getattr(args, "json", False):
        print(dumps(env))
    else:
        print(_render_human(env))
    return STATUS_EXIT.get(env["status"], EXIT_OK)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
