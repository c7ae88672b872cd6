"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check
fails (the failing identity is named), 2 on invalid arguments.
"""
import argparse
import json
import re
import sys

from . import bannaiito as bi
from . import oddgraph as og
from . import sl2modules as sm
from . import suite as st
from . import v1functor as v1
from .errors import BadParity, BadVertex, InvalidP, ParityMismatch, TooLarge
from .exactlinalg import BACKEND, format_rational, parse_rational
from .skewring import format_element, parse_element

SCHEMA = 1
# Flags whose values may start with a minus sign.
_SIGNED_FLAGS = ("--a", "--b", "--c", "--twist", "--seed")
_NEGATIVE_VALUE = re.compile(r"^-\d[\d/,-]*$")


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sign(text):
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, not {text!r}")


def _twist(text):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        parts = ()
    if parts not in bi.SIGN_TWISTS:
        raise argparse.ArgumentTypeError("twist must be two signs like 1,-1")
    return parts


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _add_output(p):
    p.add_argument("--format", choices=("text", "json"), default="json", help="report format (default json)")
    p.add_argument("--out", help="write the report to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sl2bi",
        description="Exact verification of skew-ring modules, Bannai-Ito triples and odd graphs. "
        "Rationals are written p/q; a negative value may be given as --a=-3/2 or --a -3/2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-ring", help="random-word checks of the rewriting system and Hopf laws")
    p.add_argument("--max-degree", type=_nonneg, default=6)
    p.add_argument("--words", type=_nonneg, default=500)
    p.add_argument("--hopf-words", type=_nonneg, default=100)
    p.add_argument("--seed", type=int, default=st.SuiteConfig.seed)
    p.add_argument("--normalize", metavar="EXPR", help="also print the normal form of EXPR, e.g. 'F*E*E'")
    _add_output(p)

    p = sub.add_parser("module", help="build an irreducible or power-set module and check its relations")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_nonneg, help="highest weight of L_n")
    g.add_argument("--powerset", type=_nonneg, metavar="K", help="power-set module of a K-set")
    p.add_argument("--sign", type=_sign, default=1, help="rho-sign of L_n (+ or -)")
    p.add_argument("--decompose", action="store_true", help="also report isotypic multiplicities")
    _add_output(p)

    p = sub.add_parser("cg", help="Clebsch-Gordan decomposition of L_m^d (x) L_n^e")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--delta", type=_sign, default=1)
    p.add_argument("--eps", type=_sign, default=1)
    _add_output(p)

    p = sub.add_parser("v1", help="Bannai-Ito module on V(1) of L_m^d (x) L_n^e")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--delta", type=_sign, default=1, help="rho-sign of the L_m factor")
    p.add_argument("--eps", type=_sign, default=1, help="rho-sign of the L_n factor")
    p.add_argument("--swapped", action="store_true", help="use the factor order L_n (x) L_m")
    _add_output(p)

    for name, helptext in (("bi", "build O_n / E_n and report central elements and identification"), ("leonard", "Leonard-triple verdict for O_n / E_n")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--parity", choices=(bi.ODD, bi.EVEN), required=True, help="odd: O_n with n even; even: E_n with n odd")
        p.add_argument("--n", type=_nonneg, required=True)
        p.add_argument("--a", type=_rational, required=True)
        p.add_argument("--b", type=_rational, required=True)
        p.add_argument("--c", type=_rational, required=True)
        p.add_argument("--twist", type=_twist, default=(1, 1), help="sign automorphism, e.g. -1,1")
        _add_output(p)

    p = sub.add_parser("oddgraph", help="odd-graph images, V(1) match and standard-module decomposition")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--base", help="base vertex as comma-separated ground elements (default 0..d-1)")
    p.add_argument("--allow-large", action="store_true", help="permit d=5 (slow)")
    _add_output(p)

    p = sub.add_parser("suite", help="run the full acceptance battery")
    p.add_argument("--cap-d", type=int, default=4, help="largest odd-graph d to check (default 4)")
    p.add_argument("--criteria", help="comma-separated criterion numbers to run (default all)")
    _add_output(p)
    return parser


def _merge_negative_values(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SIGNED_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


# -- commands ------------------------------------------------------------------


def _first_failure(checks):
    return next((name for name, ok in checks.items() if not ok), None)


def cmd_verify_ring(args):
    cfg = st.SuiteConfig(seed=args.seed, words=args.words, hopf_words=args.hopf_words, max_degree=args.max_degree)
    results = st.run_suite(cfg, only={1, 2})
    report = {"schema": SCHEMA, "command": "verify-ring", "results": [r.to_json() for r in results]}
    if args.normalize:
        try:
            report["normal_form"] = format_element(parse_element(args.normalize))
        except ValueError as exc:
            raise UsageError(f"cannot parse expression: {exc}") from None
    failed = next((r for r in results if not r.passed), None)
    text = [r.line() for r in results]
    if args.normalize:
        text.append(f"normal form: {report['normal_form']}")
    return report, text, failed.failure if failed else None


def cmd_module(args):
    if args.powerset is not None:
        rep = sm.powerset_rep(args.powerset)
        name = f"power set of a {args.powerset}-set"
    else:
        rep = sm.build_irreducible((args.n, args.sign))
        name = str(sm.IrrLabel(args.n, args.sign))
    checks = sm.verify_defining_relations(rep)
    report = {"schema": SCHEMA, "command": "module", "module": name, "relations": checks, "representation": rep.to_json()}
    text = [f"{name}: dim {rep.dim}"] + [f"  {k}: {'pass' if v else 'FAIL'}" for k, v in checks.items()]
    failure = _first_failure(checks)
    if args.decompose:
        mults = sm.multiplicities(rep)
        report["decomposition"] = [[str(label), m] for label, m in mults]
        text.append("  decomposition: " + " + ".join(f"{m} {label}" for label, m in mults))
        if args.powerset is not None and dict(mults) != {k: v for k, v in sm.powerset_decompose(args.powerset) if v}:
            failure = failure or "isotypic multiplicities disagree with the closed formula"
    return report, text, failure


def cmd_cg(args):
    left, right = (args.m, args.delta), (args.n, args.eps)
    pieces = sm.cg_pieces(left, right)
    target = sm.tensor_rep(sm.build_irreducible(left), sm.build_irreducible(right)).as_representation()
    rows = []
    failure = None
    for pc in pieces:
        ok = sm.intertwines(pc.embedding, sm.build_irreducible(pc.label), target)
        rows.append({"p": pc.p, "label": str(pc.label), "dim": pc.label.dim, "intertwines": ok})
        if not ok and failure is None:
            failure = f"embedding p={pc.p} does not intertwine"
    report = {
        "schema": SCHEMA,
        "command": "cg",
        "tensor": f"{sm.IrrLabel(*left)} (x) {sm.IrrLabel(*right)}",
        "summands": rows,
        "dimension_check": sum(r["dim"] for r in rows) == (args.m + 1) * (args.n + 1),
    }
    text = [report["tensor"] + " = " + " + ".join(r["label"] for r in rows)]
    return report, text, failure


def cmd_v1(args):
    m, n = args.m, args.n
    if m > n:
        raise UsageError("need m <= n; use --swapped for the other factor order")
    left, right = (m, args.delta), (n, args.eps)
    if args.swapped:
        left, right = right, left
    mod = v1.v1_of(left, right)
    row = {"schema": SCHEMA, "command": "v1", "m": m, "n": n, "delta": args.delta, "eps": args.eps, "swapped": args.swapped, "dimV1": mod.dim}
    text = [f"V(1) of {sm.IrrLabel(*left)} (x) {sm.IrrLabel(*right)}: dim {mod.dim}"]
    if mod.dim == 0:
        row.update(identification=None, leonard=None, relations={})
        return row, text, None
    expected = v1.identify_v1(m, n, (args.delta, args.eps), args.swapped)
    verdict = bi.leonard_check(mod.triple)
    checks = dict(mod.relations)
    checks.update({f"ladder: {k}": v for k, v in mod.basis.ladder.items()})
    checks["identification matches"] = mod.identification is not None and mod.identification.matches(expected)
    checks["Leonard triple"] = verdict.is_leonard
    row.update(
        identification=mod.identification.to_json() if mod.identification else None,
        expected=expected.to_json(),
        d4_element=v1.d4_element((args.delta, args.eps), args.swapped),
        leonard=verdict.to_json(),
        relations=checks,
        triple=mod.triple.to_json(),
    )
    text.append(f"  identification: {mod.identification}  expected: {expected}")
    text.extend(f"  {k}: {'pass' if v else 'FAIL'}" for k, v in checks.items())
    return row, text, _first_failure(checks)


def _scalar_or_entries(m):
    value = m.scalar_value()
    return m.to_json()["entries"] if value is None else format_rational(value)


def _params(args):
    return bi.BIModuleParams(args.parity, args.n, args.a, args.b, args.c, args.twist)


def cmd_bi(args):
    p = _params(args)
    t = bi.build_bi_module(p)
    kappa, lam, mu = bi.central_elements(t)
    irr_params = bi.is_irreducible_params(p)
    irr_matrix = bi.is_irreducible_matrix(t)
    checks = dict(bi.cubic_identities(t))
    checks["irreducibility criteria agree"] = irr_params == irr_matrix
    report = {
        "schema": SCHEMA,
        "command": "bi",
        "params": p.to_json(),
        "triple": t.to_json(),
        "central": {"kappa": _scalar_or_entries(kappa), "lambda": _scalar_or_entries(lam), "mu": _scalar_or_entries(mu)},
        "casimir": bi.bi_casimir(t).to_json()["entries"],
        "irreducible": irr_params,
        "checks": checks,
    }
    text = [f"{p}: dim {t.dim}, irreducible={irr_params}"]
    if irr_params:
        ident = bi.identify_irreducible(t)
        report["identification"] = ident.to_json()
        checks["identification round trip"] = ident.matches(p)
        text.append(f"  identification: {ident}")
    text.extend(f"  {k}: {'pass' if v else 'FAIL'}" for k, v in checks.items())
    return report, text, _first_failure(checks)


def cmd_leonard(args):
    p = _params(args)
    t = bi.build_bi_module(p)
    verdict = bi.leonard_check(t)
    report = {"schema": SCHEMA, "command": "leonard", "params": p.to_json(), "is_leonard": verdict.is_leonard, "verdict": verdict.to_json()}
    text = [f"{p}: is_leonard={verdict.is_leonard}"]
    text.extend(f"  {v.name}: {v.diagnostic or 'ok'}" for v in verdict.per_operator)
    failure = None
    if bi.is_irreducible_params(p):
        predicted = bi.leonard_predict(p)
        report["predicted"] = predicted
        text.append(f"  predicted from parameters: {predicted}")
        if predicted != verdict.is_leonard:
            failure = "parameter prediction disagrees with the matrix verdict"
    return report, text, failure


def cmd_oddgraph(args):
    d = args.d
    if d < 1:
        raise UsageError("d must be ≥ 1")
    if d > og.D_CAP:
        raise UsageError(f"d must be ≤ {og.D_CAP}")
    if d > og.DECOMPOSE_CAP and not args.allow_large:
        raise UsageError(f"d={d} is slow; pass --allow-large")
    if args.base:
        try:
            base = og.as_vertex(d, [int(x) for x in args.base.split(",")])
        except ValueError as exc:
            raise UsageError(f"bad --base: {exc}") from None
    else:
        base = og.default_base(d)
    g = og.build_odd_graph(d)
    images = og.terwilliger_images(g, base)
    relations = og.verify_homomorphism(images)
    relations.update({f"V(1) match: {k}": v for k, v in og.match_with_v1(d, base).items()})
    report_obj = og.decompose_standard_module(d, base, allow_large=args.allow_large)
    relations["summand dimensions sum to C(2d+1,d)"] = report_obj.total_dim == g.size
    relations["every summand is a Leonard triple"] = report_obj.all_leonard
    relations["summand X spectra partition spec(A)"] = og.adjacency_spectrum_matches(g, report_obj.x_spectrum())
    body = report_obj.to_json()
    report = {"schema": SCHEMA, "command": "oddgraph", "d": d, "base": body["base"], "dim": g.size, "relations": relations}
    report["factor_decompositions"] = body["factor_decompositions"]
    report["summands"] = body["summands"]
    text = [f"odd graph d={d}, base {body['base']}, {g.size} vertices"]
    text.extend(f"  {k}: {'pass' if v else 'FAIL'}" for k, v in relations.items())
    for s in report_obj.summands:
        text.append(f"  {s.multiplicity} x dim {s.dim}: {s.params} from {s.left} (x) {s.right}, leonard={s.leonard}")
    return report, text, _first_failure(relations)


def cmd_suite(args):
    if args.cap_d < 1:
        raise UsageError("--cap-d must be ≥ 1")
    only = None
    if args.criteria:
        try:
            only = {int(x) for x in args.criteria.split(",")}
        except ValueError:
            raise UsageError("--criteria takes comma-separated integers") from None
    cfg = st.SuiteConfig(cap_d=args.cap_d)
    live = args.format == "text" and not args.out
    results = st.run_suite(cfg, only=only, report=(lambda r: print(r.line(), flush=True)) if live else None)
    report = {"schema": SCHEMA, "command": "suite", "backend": BACKEND, "cap_d": args.cap_d, "results": [r.to_json() for r in results]}
    failed = next((r for r in results if not r.passed), None)
    text = [] if live else [r.line() for r in results]
    failure = f"criterion {failed.number}: {failed.failure}" if failed else None
    return report, text, failure


COMMANDS = {
    "verify-ring": cmd_verify_ring,
    "module": cmd_module,
    "cg": cmd_cg,
    "v1": cmd_v1,
    "bi": cmd_bi,
    "leonard": cmd_leonard,
    "oddgraph": cmd_oddgraph,
    "suite": cmd_suite,
}


def run(argv=None):
    """Dispatch one command and write its report; returns the exit status."""
    parser = build_parser()
    argv = _merge_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        report, text, failure = COMMANDS[args.command](args)
    except (UsageError, ParityMismatch, BadParity, BadVertex, TooLarge, InvalidP) as exc:
        print(f"sl2bi {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    else:
        payload = "".join(line + "\n" for line in text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if failure:
        print(f"FAILED: {failure}", file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
