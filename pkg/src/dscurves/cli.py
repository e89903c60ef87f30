"""Command-line driver.

Subcommands mirror the pipeline stages: `wset`, `pcheck`, `pset`,
`criterion`, `local`, `certify`, `verify`, `search`.

Exit codes: 0 verified/valid, 1 checked-and-false, 2 invalid input,
3 format/schema error.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import certificate as cert_mod
from . import ffield
from .certificate import (SchemaError, canonical_json, hasse_certificate,
                          verify_certificate)
from .errors import InvalidInput, ParseError
from .fpoly import (factor, format_poly, is_irreducible, monic_irreducibles,
                    parse_poly)
from .localpoints import local_all
from .splitting import (QuadraticField, QuaternionData, SplitType,
                        field_splits_quaternion, infinity_behavior,
                        mu_y_obstruction, nonexistence_criterion,
                        place_behavior)
from .localpoints import local_ramified_prime
from .weil import dset, enumerate_weil, nonsquare_at_infinity, pset

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_SCHEMA = 3


def _add_common(sub, *, seed=False, json_flag=True):
    sub.add_argument("--field-order", type=int, required=True, metavar="Q",
                     help="the odd prime q")
    if json_flag:
        sub.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    if seed:
        sub.add_argument("--seed", type=int, default=0,
                         help="seed for the factorization randomness")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker processes (search only)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dscurves",
        description="Exact-arithmetic search and certification of Hasse-principle "
                    "violations for quaternionic curves over F_q(t).")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("wset", help="list the admissible Weil quadratics for y")
    _add_common(p)
    p.add_argument("--y", required=True)

    p = subs.add_parser("pcheck", help="test whether p avoids the excluded-prime set of y")
    _add_common(p)
    p.add_argument("--y", required=True)
    p.add_argument("--p", required=True)

    p = subs.add_parser("pset", help="compute the full excluded-prime set of y")
    _add_common(p, seed=True)
    p.add_argument("--y", required=True)

    p = subs.add_parser("criterion", help="evaluate the global non-existence criterion")
    _add_common(p)
    p.add_argument("--ram1", required=True)
    p.add_argument("--ram2", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--radicand", required=True, help="monic square-free radical of K")
    p.add_argument("--eps", type=int, default=1)

    p = subs.add_parser("local", help="run the local-points battery for K")
    _add_common(p)
    p.add_argument("--ram1", required=True)
    p.add_argument("--ram2", required=True)
    p.add_argument("--radicand", required=True)
    p.add_argument("--eps", type=int, default=1)

    p = subs.add_parser("certify", help="produce a Hasse-violation certificate")
    _add_common(p, seed=True)
    p.add_argument("--ram1", required=True)
    p.add_argument("--ram2", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--n-poly", default="1")
    p.add_argument("--eps", type=int, default=1)
    p.add_argument("--out", help="path for the certificate JSON (default: stdout)")

    p = subs.add_parser("verify", help="re-check a certificate file")
    p.add_argument("cert", help="path to a certificate JSON file")

    p = subs.add_parser("search", help="search (ram1, ram2) pairs violating the Hasse principle")
    _add_common(p, seed=True)
    p.add_argument("--max-deg1", type=int, required=True)
    p.add_argument("--max-deg2", type=int, required=True)
    p.add_argument("--y", default="t")
    return parser


def _parse(text, q, what):
    try:
        return parse_poly(text, q)
    except ParseError as exc:
        raise InvalidInput("bad %s %r: %s" % (what, text, exc)) from exc


def _irreducible_arg(text, q, what):
    f = _parse(text, q, what)
    if not f.is_monic or f.degree < 1 or not is_irreducible(f):
        raise InvalidInput("%s must be a monic irreducible, got %r" % (what, text))
    return f


def cmd_wset(args):
    q = args.field_order
    y = _irreducible_arg(args.y, q, "y")
    rows = []
    for w in enumerate_weil(y):
        disc = w.discriminant
        reason = ("odd discriminant degree" if disc.degree % 2 == 1
                  else "non-square leading coefficient")
        rows.append({"a1": format_poly(w.a1), "mu": w.mu,
                     "minimal_poly": str(w), "discriminant": format_poly(disc),
                     "classification": reason})
    if args.json:
        print(canonical_json({"field_order": q, "y": format_poly(y), "weil": rows}), end="")
    else:
        for row in rows:
            print("%s  disc=%s (%s)" % (row["minimal_poly"], row["discriminant"],
                                        row["classification"]))
        print("total: %d" % len(rows))
    return EXIT_OK


def cmd_pcheck(args):
    q = args.field_order
    y = _irreducible_arg(args.y, q, "y")
    p = _irreducible_arg(args.p, q, "p")
    if p == y:
        raise InvalidInput("p must differ from y")
    rows, divides_any = [], False
    for entry in dset(y):
        if entry.is_zero:
            status = "zero norm"
        elif (entry.value % p).is_zero:
            status = "divides"
            divides_any = True
        else:
            status = "coprime"
        rows.append({"weil": str(entry.source), "norm_degree": entry.value.degree,
                     "status": status})
    excluded = not divides_any
    if args.json:
        print(canonical_json({"field_order": q, "y": format_poly(y),
                              "p": format_poly(p), "excluded": excluded,
                              "entries": rows}), end="")
    else:
        for row in rows:
            print("%-40s %s" % (row["weil"], row["status"]))
        print("p = %s is %s the excluded-prime set of y = %s"
              % (format_poly(p), "outside" if excluded else "inside", format_poly(y)))
    return EXIT_OK if excluded else EXIT_FALSE


def cmd_pset(args):
    q = args.field_order
    y = _irreducible_arg(args.y, q, "y")
    primes = pset(y, seed=args.seed)
    if args.json:
        print(canonical_json({"field_order": q, "y": format_poly(y),
                              "seed": args.seed,
                              "pset": [format_poly(p) for p in primes]}), end="")
    else:
        for p in primes:
            print(format_poly(p))
        print("total: %d" % len(primes))
    return EXIT_OK


def _quaternion_args(args, q):
    ram1 = _irreducible_arg(args.ram1, q, "ram1")
    ram2 = _irreducible_arg(args.ram2, q, "ram2")
    return QuaternionData(ram1=ram1, ram2=ram2)


def _field_args(args, q):
    radical = _parse(args.radicand, q, "radicand")
    return QuadraticField(eps=args.eps, radical=radical)


def cmd_criterion(args):
    q = args.field_order
    D = _quaternion_args(args, q)
    y = _irreducible_arg(args.y, q, "y")
    K = _field_args(args, q)
    report = nonexistence_criterion(D, y, K)
    payload = {
        "field_splits": report.field_splits,
        "y_ramified": report.y_ramified,
        "ram1_excluded": report.ram1_excluded,
        "ram2_excluded": report.ram2_excluded,
        "excluded_prime": report.excluded_prime,
        "mu_obstruction": report.mu_obstruction,
        "ok": report.ok,
        "failures": list(report.failures),
    }
    if args.json:
        print(canonical_json(payload), end="")
    else:
        for key in ("field_splits", "y_ramified", "ram1_excluded",
                    "ram2_excluded", "mu_obstruction"):
            print("%-16s %s" % (key, payload[key]))
        if report.ok:
            print("criterion holds: no global points over %s" % K)
        else:
            print("criterion fails: %s" % "; ".join(report.failures))
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_local(args):
    q = args.field_order
    D = _quaternion_args(args, q)
    K = _field_args(args, q)
    if not field_splits_quaternion(K, D):
        raise InvalidInput("K does not split the quaternion algebra (hypothesis 1)")
    report = local_all(D, K)
    if args.json:
        payload = {
            "infinity_ok": report.infinity_ok,
            "ram1_ok": report.ram1_ok, "ram1_mu": report.ram1_mu,
            "ram2_ok": report.ram2_ok, "ram2_mu": report.ram2_mu,
            "lambda_cutoff": report.lambda_cutoff,
            "witness_cutoff": report.witness_cutoff,
            "fast_m": report.fast_m,
            "witnesses": [{"l": format_poly(w.l), "a": format_poly(w.a), "c": w.c}
                          for w in report.witnesses],
            "unwitnessed": [format_poly(l) for l in report.unwitnessed],
            "ok": report.ok,
        }
        print(canonical_json(payload), end="")
    else:
        print("infinity        %s" % ("ok" if report.infinity_ok else "FAIL"))
        for name, ok, mu in (("ram1", report.ram1_ok, report.ram1_mu),
                             ("ram2", report.ram2_ok, report.ram2_mu)):
            extra = "" if mu is None else " (mu=%d)" % mu
            print("%-15s %s%s" % (name, "ok" if ok else "FAIL", extra))
        for w in report.witnesses:
            print("l=%-20s witness a=%s, c=%d" % (format_poly(w.l), format_poly(w.a), w.c))
        for l in report.unwitnessed:
            print("l=%-20s NO WITNESS" % format_poly(l))
        if report.fast_m is not None and report.witness_cutoff < report.lambda_cutoff:
            print("degrees %d..%d: by uniform bound m=%d"
                  % (report.witness_cutoff + 1, report.lambda_cutoff, report.fast_m))
        print("degrees > %d: by degree bound" % report.lambda_cutoff)
        print("local battery: %s" % ("all places OK" if report.ok else "FAILED"))
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_certify(args):
    q = args.field_order
    D = _quaternion_args(args, q)
    y = _irreducible_arg(args.y, q, "y")
    n_poly = _parse(args.n_poly, q, "n-poly")
    cert = hasse_certificate(D, y, n_poly, args.eps, seed=args.seed)
    text = cert.to_json()
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
        print("certificate written to %s: %s" % (args.out, cert.verdict))
    else:
        print(text, end="")
    return EXIT_OK if cert.valid else EXIT_FALSE


def cmd_verify(args):
    try:
        with open(args.cert) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print("cannot read certificate: %s" % exc, file=sys.stderr)
        return EXIT_SCHEMA
    try:
        code, failures = verify_certificate(data)
    except SchemaError as exc:
        print("schema error: %s" % exc, file=sys.stderr)
        return EXIT_SCHEMA
    if code == 0:
        print("certificate verified: VALID")
    else:
        for msg in failures:
            print("FAIL %s" % msg)
    return code


# ---------------------------------------------------------------------------
# search

def _first_admissible_eps(n_poly):
    return cert_mod.admissible_eps_set(n_poly)[0]


def _pair_passes_cheap_filters(D, y):
    """n-independent hypotheses that are cheap to evaluate; symbols first."""
    if not mu_y_obstruction(D, y):
        return False
    for which in ("ram1", "ram2"):
        r = D.ram1 if which == "ram1" else D.ram2
        s = D.ram2 if which == "ram1" else D.ram1
        ok = False
        for mu in ffield.square_class_reps(D.q):
            aux = QuadraticField(eps=mu, radical=r)
            if (place_behavior(s, aux) != SplitType.SPLIT
                    and infinity_behavior(aux) != SplitType.SPLIT):
                ok = True
                break
        if not ok:
            return False
    return True


def _certify_pair(q, p_text, s_text, y_text, seed):
    """Worker: build the n=1 certificate for one candidate pair."""
    ram1 = parse_poly(p_text, q)
    ram2 = parse_poly(s_text, q)
    y = parse_poly(y_text, q)
    D = QuaternionData(ram1=ram1, ram2=ram2)
    one = parse_poly("1", q)
    cert = hasse_certificate(D, y, one, _first_admissible_eps(one), seed=seed)
    return p_text, s_text, cert.data


def cmd_search(args):
    q = args.field_order
    ffield.validate_field_order(q)
    y = _irreducible_arg(args.y, q, "y")
    from .weil import p_excluded

    candidates = []
    for d1 in range(1, args.max_deg1 + 1):
        for p in monic_irreducibles(q, d1):
            if p == y:
                continue
            for d2 in range(1, args.max_deg2 + 1):
                for s in monic_irreducibles(q, d2):
                    if s == p or s == y:
                        continue
                    if (y.degree + p.degree + s.degree) % 2 == 0:
                        continue  # the eps table needs odd total degree
                    candidates.append((p, s))

    survivors = []
    for p, s in candidates:
        D = QuaternionData(ram1=p, ram2=s)
        if not _pair_passes_cheap_filters(D, y):
            continue
        if not (p_excluded(p, y) or p_excluded(s, y)):
            continue
        survivors.append((p, s))

    jobs = [(q, format_poly(p), format_poly(s), format_poly(y), args.seed)
            for p, s in survivors]
    results = []
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_certify_pair_star, jobs))
    else:
        results = [_certify_pair(*job) for job in jobs]

    triples = [(p_text, s_text, data) for p_text, s_text, data in results
               if data["verdict"] == cert_mod.VALID]
    rejected = [(p_text, s_text) for p_text, s_text, data in results
                if data["verdict"] != cert_mod.VALID]
    if args.json:
        print(canonical_json({
            "field_order": q, "y": format_poly(y),
            "max_deg1": args.max_deg1, "max_deg2": args.max_deg2,
            "triples": [{"ram1": a, "ram2": b, "certificate": d}
                        for a, b, d in triples],
        }), end="")
    else:
        for a, b, _ in triples:
            print("(%d, %s, %s)  VALID" % (q, a, b))
        for a, b in rejected:
            print("(%d, %s, %s)  rejected at certification" % (q, a, b))
        print("found %d violating pair(s) out of %d candidate(s)"
              % (len(triples), len(candidates)))
    return EXIT_OK


def _certify_pair_star(job):
    return _certify_pair(*job)


_HANDLERS = {
    "wset": cmd_wset,
    "pcheck": cmd_pcheck,
    "pset": cmd_pset,
    "criterion": cmd_criterion,
    "local": cmd_local,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "search": cmd_search,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "field_order"):
            ffield.validate_field_order(args.field_order)
        return _HANDLERS[args.command](args)
    except InvalidInput as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
