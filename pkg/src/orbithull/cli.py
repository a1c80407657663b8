"""Batch command line front-end.

Reads JSON operands, runs one library operation, writes JSON (or CSV).  Exit
codes: 0 success, 2 validation error, 3 domain or precondition error,
4 audit mismatch.

Operands inside input files may be spectral forms ``{"pairs": ...}``, step
functions ``{"breakpoints": ..., "values": ...}``, matrices
``{"n": ..., "re": ..., "im": ...}`` or spectra ``{"points": ...}``.
"""
import argparse
import csv
import io
import json
import sys

import numpy as np

from . import distances, majorize, oracle, purely_infinite, synthesis
from ._numeric import DomainError, ValidationError, to_json_number, to_number
from .spectral import SpectralForm, SpectrumSet, TracialHermitian, align, eigenvalue_function, singular_value_function
from .stepfn import StepFunction

EXIT_OK, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_AUDIT = 0, 2, 3, 4


class AuditMismatch(RuntimeError):
    pass


def _load_operand(obj, exact):
    if not isinstance(obj, dict):
        raise ValidationError(f"operand must be a JSON object, got {type(obj).__name__}")
    if "pairs" in obj:
        return SpectralForm.from_json(obj, exact)
    if "breakpoints" in obj:
        return StepFunction.from_json(obj, exact)
    if "re" in obj:
        return _load_matrix(obj)
    if "points" in obj:
        return SpectrumSet.from_json(obj)
    raise ValidationError("unrecognized operand: expected pairs, breakpoints, re/im or points")


def _load_matrix(obj):
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"bad matrix JSON: {e}") from None
    if re.shape != im.shape:
        raise ValidationError("re and im parts differ in shape")
    return re + 1j * im


def _matrix_json(m):
    m = np.asarray(m, dtype=complex)
    return {"n": m.shape[0], "re": m.real.tolist(), "im": m.imag.tolist()}


def _step(x, singular=False):
    if isinstance(x, StepFunction):
        return x
    if singular:
        return singular_value_function(x)
    if isinstance(x, np.ndarray):
        x = TracialHermitian(x)
    return eigenvalue_function(x)


def _form(x):
    if isinstance(x, SpectralForm):
        return x
    if isinstance(x, StepFunction):
        return SpectralForm.from_step(x)
    return SpectralForm.from_step(_step(x))


def _pair(args, data, keys=("t", "s")):
    if data is None:
        t, s = oracle.random_majorized_pair(args.n, args.seed)
        return t, s
    try:
        return tuple(_load_operand(data[k], args.exact) for k in keys)
    except KeyError as e:
        raise ValidationError(f"input is missing operand {e}") from None


def _scalar(x):
    return to_json_number(x) if not isinstance(x, (bool, np.bool_)) else bool(x)


# ---------------------------------------------------------------------------
# subcommands


def cmd_eigfn(args, data):
    if data is None:
        raise ValidationError("eigfn needs --input")
    x = _load_operand(data.get("x", data), args.exact)
    f = _step(x, singular=args.singular)
    key = "singular_value_function" if args.singular else "eigenvalue_function"
    return {key: f.to_json(), "left_limit_at_one": _scalar(f.left_limit_at_one())}


def cmd_majorize(args, data):
    t, s = _pair(args, data)
    ft, fs = _step(t, args.singular), _step(s, args.singular)
    if args.relation == "majorize":
        out = {"majorizes": majorize.majorizes(ft, fs)}
    elif args.relation == "submajorize":
        out = {"submajorizes": majorize.submajorizes(ft, fs)}
    else:
        out = {"dominates_pointwise": majorize.dominates_pointwise(ft, fs)}
    if args.audit and args.relation == "majorize":
        tf, sf = _form(ft), _form(fs)
        ramp = majorize.convex_test_check(tf, sf, sorted(set(tf.values) | set(sf.values)))
        if ramp != out["majorizes"]:
            raise AuditMismatch(f"majorizes={out['majorizes']} but ramp-function test gives {ramp}")
    return out


def cmd_dist(args, data):
    kind = args.kind
    if kind == "spectral":
        if data is None:
            raise ValidationError("dist spectral needs --input")
        s, t = SpectrumSet.from_json(data["s"]), SpectrumSet.from_json(data["t"])
        d = distances.spectral_hull_distance(s, t)
        if args.audit and (d <= args.tol) != purely_infinite.hull_member_selfadjoint(s, t):
            raise AuditMismatch("spectral distance and hull membership disagree")
        return {"spectral_hull_distance": d}
    t, s = _pair(args, data)
    if kind == "hulls":
        d = distances.hull_to_hull_distance(_form(t), _form(s))
        if args.audit:
            ref = oracle.hull_distance_search(_step(t), StepFunction.constant(_form(s).trace()), 128)
            if abs(ref - float(d)) > 2 * _step(t).sup_norm() / 128 + args.tol:
                raise AuditMismatch(f"hull-to-hull distance {d} vs oracle {ref}")
        return {"hull_to_hull_distance": _scalar(d)}
    ft, fs = _step(t), _step(s)
    if kind == "orbit":
        d = distances.orbit_distance(ft, fs)
        if args.audit:
            _audit_orbit(t, s, d, args.tol)
        return {"orbit_distance": _scalar(d)}
    d = distances.hull_distance(ft, fs)
    h = distances.nearest_majorized_profile(ft, fs)
    if args.audit:
        ref = oracle.hull_distance_search(ft, fs, 128)
        if abs(ref - float(d)) > 2 * ft.sup_norm() / 128 + args.tol:
            raise AuditMismatch(f"hull distance {d} vs oracle {ref}")
    return {"hull_distance": _scalar(d), "witness": h.to_json()}


def _audit_orbit(t, s, d, tol):
    def evals(x):
        if isinstance(x, np.ndarray):
            return list(np.linalg.eigvalsh(TracialHermitian(x).matrix))
        form = _form(x)
        n = len(form)
        if any(abs(float(w) - 1 / n) > 1e-12 for w in form.weights):
            return None
        return form.values

    et, es = evals(t), evals(s)
    if et is None or es is None or len(et) != len(es) or len(et) > oracle.MAX_PERMUTATION_N:
        return
    ref = oracle.permutation_matching_distance(et, es)
    if abs(float(ref) - float(d)) > tol:
        raise AuditMismatch(f"orbit distance {d} vs permutation oracle {ref}")


def cmd_synth(args, data):
    kind = args.kind
    if kind == "pinch":
        if data is None:
            raise ValidationError("synth pinch needs --input")
        try:
            vals = [to_number(data[k], args.exact) for k in ("a", "b", "w_a", "w_b", "t")]
        except KeyError as e:
            raise ValidationError(f"pinch input missing {e}") from None
        a2, b2 = synthesis.pinch(*vals)
        return {"a_prime": _scalar(a2), "b_prime": _scalar(b2)}
    if kind == "two-sided":
        if data is None:
            raise ValidationError("synth two-sided needs --input")
        t, s = _load_matrix(data["t"]), _load_matrix(data["s"])
        A, B = synthesis.two_sided_compression(t, s)
        resid = float(np.linalg.norm(A @ t @ B - s, 2))
        if args.audit and resid > 1e-7 * (1 + np.linalg.norm(t, 2)):
            raise AuditMismatch(f"two-sided reconstruction residual {resid:.3e}")
        return {"A": _matrix_json(A), "B": _matrix_json(B), "residual": resid}
    t, s = _pair(args, data)
    if kind == "contraction":
        tf, sf = _form(t), _form(s)
        if args.contraction == "dominance":
            a = synthesis.compression_for_dominance(tf, sf)
        else:
            a, _ = synthesis.submajorization_contraction(tf, sf)
        out = {"contraction": a.to_json(), "image": a.image().to_json()}
        if args.audit:
            img = eigenvalue_function(a.image())
            ok = (majorize.majorizes(img, eigenvalue_function(sf)) if args.contraction == "submajorization"
                  else majorize.majorizes(img, eigenvalue_function(sf)) and majorize.majorizes(eigenvalue_function(sf), img))
            if not ok:
                raise AuditMismatch("contraction image fails its contract")
        return out
    # plan
    if isinstance(t, np.ndarray) and isinstance(s, np.ndarray):
        eps = max(args.tol, 1e-12)
        plan = synthesis.realize_mixing_plan(t, s, eps)
        err = float(np.linalg.norm(plan.apply(t) - s, 2))
        if args.audit and (err > eps or abs(sum(plan.weights) - 1) > 1e-12 or plan.unitarity_defect() > 1e-10 * len(t)):
            raise AuditMismatch(f"mixing plan audit failed (error {err:.3e})")
        return {"plan": plan.to_json(), "reconstruction_error": err}
    tf, sf = align(_form(t), _form(s))
    steps = synthesis.reduce_to_target(tf, sf)
    if args.audit:
        final = synthesis.replay(tf, steps)
        if any(abs(float(a) - float(b)) > args.tol for a, b in zip(final.values, sf.values)):
            raise AuditMismatch("replayed pinching steps miss the target")
    return {
        "aligned_t": tf.to_json(),
        "aligned_s": sf.to_json(),
        "steps": [
            {"block_i": st.block_i, "block_j": st.block_j, "mix": _scalar(st.mix),
             "value_i": _scalar(st.value_i), "value_j": _scalar(st.value_j)}
            for st in steps
        ],
    }


def cmd_recursion(args, data):
    p = to_number(args.p, True) if args.exact else float(args.p)
    a = to_number(args.a, args.exact) if args.exact else float(args.a)
    b = to_number(args.b, args.exact) if args.exact else float(args.b)
    tr = synthesis.averaging_recursion(p, a, b, max_iter=args.max_iter, tol=args.tol, mode=args.mode)
    if args.audit and abs(float(tr.limit) - float(tr.expected_limit())) > max(args.tol, 1e-12) * 10:
        raise AuditMismatch(f"recursion limit {tr.limit} differs from trace {tr.expected_limit()}")
    return {"csv": tr.to_csv(), "limit": _scalar(tr.limit), "stop_reason": tr.stop_reason,
            "steps": [[s.n, s.k, _scalar(s.r), _scalar(s.a), _scalar(s.b)] for s in tr.steps]}


def cmd_pi(args, data):
    if data is None:
        raise ValidationError("pi member needs --input")
    s, t = SpectrumSet.from_json(data["s"]), SpectrumSet.from_json(data["t"])
    if s.is_real() and t.is_real():
        res, kind = purely_infinite.hull_member_selfadjoint(s, t), "selfadjoint"
    else:
        res, kind = purely_infinite.hull_member_normal(s, t), "normal"
    if args.audit:
        ref = all(oracle.point_in_hull_exhaustive(z, t.points) for z in s.points)
        if ref != res:
            raise AuditMismatch(f"hull membership {res} vs exhaustive oracle {ref}")
    return {"member": res, "kind": kind}


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file")
    common.add_argument("--output", help="write result here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--exact", action="store_true", help="parse numbers as exact rationals")
    common.add_argument("--audit", action="store_true", help="cross-check against the brute-force oracle")
    common.add_argument("--seed", type=int, default=0, help="seed for a generated input when --input is omitted")
    common.add_argument("--n", type=int, default=4, help="size of a generated input")
    common.add_argument("--trials", type=int, default=1,
                        help="repeat on generated inputs with seeds seed, seed+1, ... (no --input)")

    p = argparse.ArgumentParser(prog="orbithull", parents=[common], description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eigfn", parents=[common], help="eigenvalue or singular value function")
    e.add_argument("--singular", action="store_true")
    e.set_defaults(func=cmd_eigfn)

    m = sub.add_parser("majorize", parents=[common], help="majorization predicates")
    m.add_argument("--relation", choices=("majorize", "submajorize", "pointwise"), default="majorize")
    m.add_argument("--singular", action="store_true", help="compare singular value functions")
    m.set_defaults(func=cmd_majorize)

    d = sub.add_parser("dist", parents=[common], help="distance formulas")
    d.add_argument("kind", choices=("orbit", "hull", "hulls", "spectral"))
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("synth", parents=[common], help="constructive certificates")
    s.add_argument("kind", choices=("plan", "pinch", "contraction", "two-sided"))
    s.add_argument("--contraction", choices=("dominance", "submajorization"), default="submajorization")
    s.set_defaults(func=cmd_synth)

    r = sub.add_parser("recursion", parents=[common], help="alternating averaging recursion trace")
    r.add_argument("--p", required=True)
    r.add_argument("--a", required=True)
    r.add_argument("--b", required=True)
    r.add_argument("--max-iter", type=int, default=10_000)
    r.add_argument("--mode", choices=("strong", "strict"), default="strong")
    r.set_defaults(func=cmd_recursion)

    pi = sub.add_parser("pi", parents=[common], help="purely infinite hull membership")
    pi.add_argument("kind", choices=("member",))
    pi.set_defaults(func=cmd_pi)
    return p


def _to_csv(result):
    if "csv" in result:
        return result["csv"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k, v in result.items():
        if isinstance(v, float):
            v = f"{v:.17g}"
        elif isinstance(v, (dict, list)):
            v = json.dumps(v)
        w.writerow([k, v])
    return buf.getvalue()


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data = None
        if args.input:
            try:
                with open(args.input) as fh:
                    data = json.load(fh)
            except (OSError, json.JSONDecodeError) as e:
                raise ValidationError(f"cannot read {args.input}: {e}") from None
        if args.trials > 1:
            if data is not None:
                raise ValidationError("--trials runs on generated inputs and cannot be combined with --input")
            result = {"trials": [args.func(argparse.Namespace(**{**vars(args), "seed": args.seed + i}), None)
                                 for i in range(args.trials)]}
        else:
            result = args.func(args, data)
    except ValidationError as e:
        print(f"validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except AuditMismatch as e:
        print(f"audit mismatch: {e}", file=sys.stderr)
        return EXIT_AUDIT

    fmt = args.format or ("csv" if args.command == "recursion" else "json")
    if fmt == "csv":
        text = _to_csv(result)
    else:
        result.pop("csv", None)
        text = json.dumps(result, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
