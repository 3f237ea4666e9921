"""Command-line frontend.

Exit codes: 0 success, 1 validation error, 2 computation error (Gamma pole,
irreducible content, overflow), 3 audit structural failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import lfactors, oracle, ratfun, repdims, sweep, zeta
from .errors import (ArchZetaError, AuditStructuralFailure, ConditionViolated,
                     ValidationError)
from .exact import SCHEMA, ExactScalar, HalfInt
from .weights import make_context

_ROUTES = {
    "form1": ("right", zeta.zeta_right_form1),
    "chain": ("right", zeta.zeta_right_chain),
    "form2": ("right", zeta.zeta_right_form2),
    "display": ("left", zeta.zeta_left_display),
    "funceq": ("left", zeta.zeta_left_funceq),
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",")) if text else ()
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}")


def _halfint(text: str) -> HalfInt:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"expected a rational p/q, got {text!r}")
    if q.denominator not in (1, 2):
        raise ValidationError(f"{text!r} is not a half-integer")
    return HalfInt(int(q * 2))


def _add_ctx_flags(p: argparse.ArgumentParser, twist: bool = True):
    p.add_argument("--sig", required=True, help="signature a,b")
    p.add_argument("--tau", default="", help="tau weight, comma-separated")
    p.add_argument("--nu", default="", help="nu weight, comma-separated")
    if twist:
        p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)


def _parse_ctx(args):
    a, b = _int_list(args.sig) if "," in args.sig else (None, None)
    if a is None:
        raise ValidationError(f"--sig must be a,b, got {args.sig!r}")
    return make_context(a, b, _int_list(args.tau), _int_list(args.nu),
                        args.k, args.r)


def _emit_scalar(value: ExactScalar, as_json: bool):
    if as_json:
        payload = {"schema": SCHEMA, "status": "ok", "value": value.to_json()}
        print(json.dumps(payload))
    else:
        print(value)


def _cmd_lfactor(args) -> int:
    from .weights import DiscreteSeriesWeight, Signature
    a, b = _int_list(args.sig)
    sig = Signature(a, b)
    wt = DiscreteSeriesWeight(_int_list(args.tau), _int_list(args.nu))
    s = _halfint(args.s)
    _emit_scalar(lfactors.l_factor(s, wt, sig, args.r), args.json)
    return 0


def _cmd_euler(args) -> int:
    ctx = _parse_ctx(args)
    s = _halfint(args.s) if args.s else HalfInt(ctx.k - ctx.n + 1)
    _emit_scalar(lfactors.euler_factor(s, ctx), args.json)
    return 0


def _cmd_zeta(args) -> int:
    ctx = _parse_ctx(args)
    side, fn = _ROUTES[args.route]
    if side != args.side:
        raise ValidationError(
            f"route {args.route!r} belongs to side {side!r}, not {args.side!r}")
    _emit_scalar(fn(ctx).value, args.json)
    return 0


def _cmd_dims(args) -> int:
    ctx = _parse_ctx(args)
    report = {
        "dim_gl_a": repdims.weyl_dim(ctx.tau),
        "dim_gl_b": repdims.weyl_dim(ctx.nu),
        "dim_lambda": repdims.dim_lambda_closed(ctx),
    }
    if args.json:
        print(json.dumps({"schema": SCHEMA, "status": "ok", **report}))
    else:
        for key, val in report.items():
            print(f"{key} = {val}")
    return 0


def _cmd_formal_degree(args) -> int:
    ctx = _parse_ctx(args)
    _emit_scalar(repdims.formal_degree(ctx), args.json)
    return 0


def _cmd_cratio(args) -> int:
    _emit_scalar(ratfun.c_ratio(args.n, args.k), args.json)
    return 0


def _oracle_config(args) -> oracle.OracleConfig:
    threads = args.threads if args.threads else oracle.default_threads()
    return oracle.OracleConfig(samples=args.samples, batch_size=args.batch,
                               seed=args.seed, threads=threads)


def _cmd_oracle(args) -> int:
    ctx = _parse_ctx(args)
    cfg = _oracle_config(args)
    poly = oracle.MinorPolynomial(args.poly, ctx)
    warning = oracle.variance_warning(poly)
    if warning and not args.json:
        print(f"warning: {warning}", file=sys.stderr)
    est = oracle.mc_estimate(poly, cfg)
    target = None
    z_score = None
    if args.poly == "I":
        target = zeta.mc_closed(ctx)
        ref = target.to_float().real
        z_score = (abs(est.mean - ref) / est.stderr if est.stderr
                   else (0.0 if est.mean == ref else float("inf")))
    if args.json:
        payload = {
            "schema": SCHEMA, "status": "ok", "poly": args.poly,
            "mean": est.mean, "stderr": est.stderr,
            "samples": est.samples, "seed": est.seed,
        }
        if warning:
            payload["warning"] = warning
        if target is not None:
            payload["target"] = target.to_json()
            payload["z_score"] = z_score
        print(json.dumps(payload))
    else:
        print(f"mean   = {est.mean!r}")
        print(f"stderr = {est.stderr!r}")
        if target is not None:
            print(f"target = {target} ({target.to_float().real!r})")
            print(f"z      = {z_score:.3f}")
    return 0


def _cmd_audit(args) -> int:
    if args.sweep:
        contexts = list(sweep.standard_sweep(max_n=args.max_n,
                                             k_extra=args.k_extra))
    else:
        contexts = [_parse_ctx(args)]
    reports = zeta.audit(contexts)
    payload = {
        "schema": SCHEMA, "status": "ok",
        "contexts": len(reports),
        "reports": [r.to_json() for r in reports],
        "dependence": zeta.audit_dependence_summary(reports),
    }
    print(json.dumps(payload))
    return 0


def _verify_identities(args):
    count = 0
    for ctx in sweep.standard_sweep():
        if zeta.zeta_right_form1(ctx).value != zeta.zeta_right_chain(ctx).value:
            yield (f"identities: form1 != chain at {ctx.key()}", False)
            return
        count += 1
    yield (f"identities: form1 == chain on {count} contexts", True)


def _verify_dims(args):
    from itertools import combinations_with_replacement
    checked = 0
    for m in range(1, 5):
        for drops in combinations_with_replacement(range(5), m - 1):
            top = 6
            w = [top]
            for d in drops:
                w.append(w[-1] - d)
            w = tuple(x - 6 for x in w)
            if min(w) < -6:
                continue
            if repdims.weyl_dim(w) != repdims.gt_dim_oracle(w):
                yield (f"dims: weyl != GT count at {w}", False)
                return
            checked += 1
    yield (f"dims: weyl == GT count on {checked} weights", checked >= 500)
    lam_checked = 0
    for ctx in sweep.standard_sweep():
        if ctx.k > 6:
            continue
        lam = repdims.lambda_weight(ctx)
        if repdims.dim_lambda_closed(ctx) != repdims.weyl_dim(lam):
            yield (f"dims: closed dim != weyl(lambda) at {ctx.key()}", False)
            return
        lam_checked += 1
    yield (f"dims: closed dim == weyl(lambda) on {lam_checked} contexts", True)


def _verify_cratio(args):
    from .exact import minus_one_pow
    for n in range(1, 6):
        for k in range(n, n + 7):
            expected = minus_one_pow((k + n + 1) * (n // 2))
            if ratfun.c_ratio(n, k) != expected:
                yield (f"cratio: unexpected value at n={n}, k={k}", False)
                return
    yield ("cratio: matches (-1)^((k+n+1) floor(n/2)) for n <= 5", True)


_ORACLE_SUITE = [
    (1, 1, (1,), (-1,), 2, 0),
    (1, 1, (3,), (-3,), 4, 0),
    (2, 1, (2, 2), (-1,), 3, 1),
    (1, 2, (1,), (-2, -2), 3, -1),
    (2, 2, (2, 2), (-2, -2), 4, 0),
]


def _verify_oracle(args):
    cfg = oracle.OracleConfig(samples=args.samples, batch_size=args.batch,
                              seed=args.seed, threads=args.threads
                              or oracle.default_threads())
    for a, b, tau, nu, k, r in _ORACLE_SUITE:
        ctx = make_context(a, b, tau, nu, k, r)
        est = oracle.mc_estimate(oracle.MinorPolynomial("I", ctx), cfg)
        ref = zeta.mc_closed(ctx).to_float().real
        if est.stderr == 0:
            ok = est.mean == ref
        else:
            ok = (abs(est.mean - ref) <= 4 * est.stderr
                  and est.stderr / abs(ref) <= 0.02)
        yield (f"oracle: MC(I) at {ctx.key()} mean={est.mean:.6g} "
               f"target={ref:.6g} stderr={est.stderr:.2g}", ok)
    ctx = make_context(2, 1, (3, 2), (-1,), 3, 1)
    rep = oracle.verify_pi_ratio(ctx, cfg)
    ok = rep.z_score <= 4
    yield (f"oracle: pi-ratio at {ctx.key()} ratio={rep.ratio:.4f} "
           f"target={rep.target} z={rep.z_score:.2f}", ok)


def _verify_audit(args):
    reports = zeta.audit(sweep.standard_sweep())
    yield (f"audit: {len(reports)} contexts structurally clean", True)
    ctx = make_context(1, 1, (1,), (-1,), 2, 0)
    from .exact import ExactScalar as ES
    anchors = [
        ("form1 == pi", zeta.zeta_right_form1(ctx).value
         == ES.make(1, 0, 1)),
        ("form2 == 4 pi", zeta.zeta_right_form2(ctx).value
         == ES.make(1, 2, 1)),
        ("leftDisplay == pi/4", zeta.zeta_left_display(ctx).value
         == ES.make(1, -2, 1)),
    ]
    for name, ok in anchors:
        yield (f"audit anchor: {name}", ok)


_SUITES = {
    "identities": _verify_identities,
    "dims": _verify_dims,
    "cratio": _verify_cratio,
    "oracle": _verify_oracle,
    "audit": _verify_audit,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        for line, ok in _SUITES[name](args):
            print(f"[{'PASS' if ok else 'FAIL'}] {line}")
            failed = failed or not ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="archzeta")
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p, twist=True, s=False):
        _add_ctx_flags(p, twist=twist)
        if s:
            p.add_argument("--s", default="", help="evaluation point p/q")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("lfactor", help="exact L-factor value at s")
    _add_ctx_flags(p, twist=False)
    p.add_argument("--s", required=True, help="evaluation point p/q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_lfactor)

    p = sub.add_parser("euler", help="modified Euler factor at s")
    common(p, s=True)
    p.set_defaults(fn=_cmd_euler)

    p = sub.add_parser("zeta", help="zeta value by route")
    common(p)
    p.add_argument("--side", choices=("right", "left"), required=True)
    p.add_argument("--route",
                   choices=("form1", "chain", "form2", "display", "funceq"),
                   required=True)
    p.set_defaults(fn=_cmd_zeta)

    p = sub.add_parser("dims", help="representation dimensions")
    common(p)
    p.set_defaults(fn=_cmd_dims)

    p = sub.add_parser("formal-degree", help="exact formal degree")
    common(p)
    p.set_defaults(fn=_cmd_formal_degree)

    p = sub.add_parser("cratio", help="Gamma-matrix determinant ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_cratio)

    p = sub.add_parser("oracle", help="Monte-Carlo moment estimate")
    common(p)
    p.add_argument("--poly", choices=("I", "QQ"), default="I")
    p.add_argument("--samples", type=int, default=2_000_000)
    p.add_argument("--batch", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threads", type=int, default=0)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("audit", help="constant-factor audit report (JSON)")
    p.add_argument("--sweep", action="store_true",
                   help="audit the full standard sweep")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--k-extra", type=int, default=4)
    p.add_argument("--sig", default="")
    p.add_argument("--tau", default="")
    p.add_argument("--nu", default="")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("identities", "dims", "cratio", "oracle",
                            "audit", "all"))
    p.add_argument("--samples", type=int, default=2_000_000)
    p.add_argument("--batch", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threads", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValidationError, ConditionViolated) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except AuditStructuralFailure as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ArchZetaError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
