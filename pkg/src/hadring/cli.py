"""Command-line interface: algebra queries, searches, counting, verification.

Exit codes: 0 success, 1 failed verification, 2 usage or input error,
3 interrupted (checkpoint flushed), 4 internal invariant violation.
All timing goes to standard error; standard output carries only the payload,
and in json mode that payload round-trips byte-identically through a JSON
parser.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import correlation, hadsearch, oracle, schur, seqcore
from .errors import InputError, InvariantViolation

_SUM_LABEL = "(2a−n)²"  # matches the printed identity exactly


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_chunk(text: str) -> tuple:
    try:
        idx_str, count_str = text.split("/", 1)
        return int(idx_str), int(count_str)
    except ValueError:
        raise InputError(f"chunk must look like i/N, got {text!r}") from None


def cmd_lambda(args) -> int:
    if args.weights is not None:
        if any(v is not None for v in (args.i, args.j, args.k)):
            raise InputError("choose either -i/-j/-k or --weights, not both")
        a, b, c = args.weights
        value = schur.structure_constant_by_weights(args.n, a, b, c)
    else:
        if any(v is None for v in (args.i, args.j, args.k)):
            raise InputError("need all of -i, -j, -k (or --weights a b c)")
        value = schur.structure_constant(args.n, args.i, args.j, args.k)
    print(value)
    return 0


def cmd_product(args) -> int:
    support = schur.product_support(args.n, args.a, args.b)
    print(_canonical_json(list(support.weights)))
    return 0


def _parse_cli_sequence(text: str, hex_form: bool) -> seqcore.BitSequence:
    if hex_form:
        if ":" not in text:
            raise InputError("--hex expects the n=<length>:<hex> form")
        return seqcore.parse_sequence(text)
    if not text or any(ch not in "+-" for ch in text):
        raise InputError("sequence must use the +/- alphabet (pass --hex for the hex form)")
    return seqcore.parse_sequence(text)


def cmd_autocorr(args) -> int:
    text = args.sequence_literal if args.sequence_literal is not None else args.sequence
    if text is None:
        raise InputError("missing sequence argument")
    x = _parse_cli_sequence(text, args.hex)
    vec = correlation.autocorrelation_vector(x)
    total, square = correlation.correlation_sum_check(x)
    if args.format == "json":
        print(
            _canonical_json(
                {
                    "n": x.n,
                    "sequence": seqcore.format_sequence(x),
                    "autocorrelation": list(vec.values),
                    "sum": total,
                    "square": square,
                }
            )
        )
    else:
        body = " ".join(str(v) for v in vec.values)
        print(f"{body} | sum={total} {_SUM_LABEL}={square}")
    if args.plot_dir:
        from . import report

        path = report.save_autocorrelation_figure(x, vec, args.plot_dir)
        print(f"figure: {path}", file=sys.stderr)
    return 0


def _weights_brace(weights) -> str:
    return "{" + ",".join(str(w) for w in sorted(weights)) + "}"


def _summary_text(sequences: int, orbits: int, weights) -> str:
    return f"{sequences} sequences / {orbits} orbits, weights {_weights_brace(weights)}"


def cmd_search(args) -> int:
    if args.jobs < 1:
        raise InputError(f"--jobs must be at least 1, got {args.jobs}")
    if args.jobs > 1 and args.resume:
        raise InputError("--jobs and --resume cannot be combined; use chunks to distribute")
    config = hadsearch.SearchConfig(
        m=args.m,
        sign=args.sign,
        chunk=_parse_chunk(args.chunk),
        b_window=tuple(args.b_window) if args.b_window else None,
        use_half_shift_filter=not args.no_half_shift_filter,
        mirror_minus=args.mirror_minus,
        allow_even_m=args.no_turyn,
        checkpoint_every=args.checkpoint_every,
    )
    if args.jobs > 1:
        rep = hadsearch.run_parallel(config, args.jobs)
    else:
        rep = hadsearch.search(config, checkpoint_path=args.resume)

    for orbit in rep.found:
        print(hadsearch.record_line(orbit, config.m, rep.config.chunk))
    weights = {o.weight for o in rep.found}
    if args.format == "json":
        print(
            _canonical_json(
                {
                    "m": config.m,
                    "n": config.n,
                    "sign": config.sign,
                    "chunk": list(rep.config.chunk),
                    "sequences": rep.sequences_found,
                    "orbits": len(rep.found),
                    "weights": sorted(weights),
                    "candidates": rep.candidates_checked,
                    "b_steps": rep.b_steps,
                }
            )
        )
    else:
        print(_summary_text(rep.sequences_found, len(rep.found), weights))
    print(
        f"scanned {rep.b_steps} first-half steps, {rep.candidates_checked} candidates, "
        f"{rep.elapsed_seconds:.3f}s",
        file=sys.stderr,
    )
    if args.plot_dir:
        from . import report

        for path in report.save_search_figures(rep, args.plot_dir):
            print(f"figure: {path}", file=sys.stderr)
    return 0


def cmd_count(args) -> int:
    size = hadsearch.search_space_size(args.m)
    if args.format == "json":
        print(_canonical_json({"m": args.m, "reduced": size.reduced, "unreduced": size.unreduced}))
    else:
        print(f"reduced={size.reduced} unreduced={size.unreduced}")
    return 0


# --- verification suites ---------------------------------------------------


def _verify_eq1(args) -> bool:
    max_n = args.max_n or 6
    for n in range(1, max_n + 1):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    fast = schur.structure_constant(n, i, j, k)
                    slow = oracle.bf_structure_constant(n, i, j, k)
                    if fast != slow:
                        print(f"FAIL: n={n} (i,j,k)=({i},{j},{k}) fast={fast} oracle={slow}")
                        return False
    return True


def _verify_eq2(args) -> bool:
    max_n = args.max_n or 6
    for n in range(1, max_n + 1):
        for a in range(n + 1):
            for b in range(n + 1):
                fast = schur.product_support(n, a, b).weights
                slow = oracle.bf_product_support(n, a, b)
                if fast != slow:
                    print(f"FAIL: n={n} (a,b)=({a},{b}) fast={fast} oracle={slow}")
                    return False
    return True


def _verify_lemma1(args) -> bool:
    import math

    max_n = args.max_n or 12
    for n in range(2, max_n + 1, 2):
        half = n // 2
        for a in range(n + 1):
            pairs = schur.half_split_pairs(n, a)
            vandermonde = sum(math.comb(half, i) * math.comb(half, j) for i, j in pairs)
            if vandermonde != math.comb(n, a):
                print(f"FAIL: n={n} a={a} split sizes sum to {vandermonde}, not C({n},{a})")
                return False
            tally = {pair: 0 for pair in pairs}
            for x in seqcore.enumerate_weight_class(n, a):
                lo = x.bits & ((1 << half) - 1)
                pair = (lo.bit_count(), (x.bits >> half).bit_count())
                if pair not in tally:
                    print(f"FAIL: n={n} a={a} sequence {x} splits as {pair}, outside the list")
                    return False
                tally[pair] += 1
            for (i, j), count in tally.items():
                if count != math.comb(half, i) * math.comb(half, j):
                    print(f"FAIL: n={n} a={a} split ({i},{j}) hit {count} times")
                    return False
    return True


def _verify_thm2(args) -> bool:
    n = args.n or 36
    samples = args.samples or 10000
    if n <= 16:
        checked = 0
        for bits in range(1 << n):
            if bits.bit_count() % 2 == 0:
                hadsearch.half_shift_exclusion(seqcore.BitSequence(n, bits))
                checked += 1
        print(f"exhaustive over {checked} even-weight sequences at n={n}")
    else:
        rng = random.Random(args.seed)
        for _ in range(samples):
            bits = rng.getrandbits(n)
            if bits.bit_count() % 2:
                bits ^= 1
            hadsearch.half_shift_exclusion(seqcore.BitSequence(n, bits))
        print(f"{samples} even-weight samples at n={n}, seed={args.seed}")
    return True


def _verify_thm3(args) -> bool:
    if args.n:
        samples = args.samples or 10000
        return oracle.bf_correlation_sum_identity(args.n, sample_count=samples, seed=args.seed)
    max_n = args.max_n or 10
    for n in range(1, max_n + 1):
        oracle.bf_correlation_sum_identity(n)
    return True


def _verify_maximal(args) -> bool:
    max_n = args.max_n or 12
    for n in range(4, max_n + 1, 4):
        t = n // 4
        census = schur.complete_maximal_ssets(n)
        orders = sorted(s.order for s in census)
        lo, hi = schur.admissible_weight_band(n)
        in_band = all(lo <= w <= hi for s in census for w in s.members)
        if len(census) != 2 or orders != [t, t + 1] or not in_band:
            print(
                f"FAIL: n={n} expected two families of orders {t} and {t + 1} in "
                f"[{lo},{hi}], got {[s.members for s in census]}"
            )
            return False
    return True


def _verify_diffset(args) -> bool:
    m = args.m or 1
    rep = hadsearch.search(hadsearch.SearchConfig(m=m))
    if not rep.found:
        print(f"no sequences found at m={m}; nothing to check")
        return True
    n = 4 * m * m
    expect = (n, 2 * m * m - m, m * m - m)
    for orbit in rep.found:
        for k in range(orbit.orbit_size):
            member = seqcore.cyclic_shift(orbit.sequence, k)
            claim = hadsearch.hadamard_to_difference_set(member)
            check = hadsearch.verify_difference_set(claim)
            if not check.valid or (claim.n, claim.k, claim.lam) != expect:
                print(
                    f"FAIL: {seqcore.format_sequence(member)} claimed "
                    f"({claim.n},{claim.k},{claim.lam}), histogram {check.histogram}"
                )
                return False
    return True


def _verify_hadamard_sweep(args) -> bool:
    n = args.n or 4
    hits = oracle.bf_exhaustive_hadamard(n)
    canonicals = set()
    weights = set()
    for text in hits:
        x = seqcore.parse_sequence(text)
        weights.add(seqcore.weight(x))
        canonicals.add(seqcore.orbit_of(x).canonical.bits)
    print(_summary_text(len(hits), len(canonicals), weights))
    return True


_SUITES = {
    "eq1": _verify_eq1,
    "eq2": _verify_eq2,
    "lemma1": _verify_lemma1,
    "thm2": _verify_thm2,
    "thm3": _verify_thm3,
    "maximal": _verify_maximal,
    "diffset": _verify_diffset,
    "hadamard-sweep": _verify_hadamard_sweep,
}


def cmd_verify(args) -> int:
    suite = _SUITES[args.suite]
    try:
        ok = suite(args)
    except AssertionError as exc:
        print(f"FAIL: {exc}")
        return 1
    if not ok:
        return 1
    if args.suite != "hadamard-sweep":
        print("PASS")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadring",
        description="Weight-class algebra queries and the circulant Hadamard search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="structure constant of two basic sets")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-i", type=int)
    p.add_argument("-j", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("--weights", type=int, nargs=3, metavar=("A", "B", "C"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_lambda)

    p = sub.add_parser("product", help="weights reachable by a class product")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("autocorr", help="periodic autocorrelation vector")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--sequence-literal", dest="sequence_literal", help=argparse.SUPPRESS)
    p.add_argument("--hex", action="store_true", help="sequence is in n=<length>:<hex> form")
    p.add_argument("--plot-dir", help="also render the vector to this directory")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_autocorr)

    p = sub.add_parser("search", help="weight-restricted circulant Hadamard search")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--sign", choices=("minus", "plus", "both"), default="both")
    p.add_argument("--chunk", default="0/1", metavar="i/N")
    p.add_argument("--resume", metavar="PATH", help="checkpoint file to read and maintain")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("HADRING_JOBS", "1")))
    p.add_argument("--b-window", type=int, nargs=2, metavar=("START", "STOP"))
    p.add_argument("--checkpoint-every", type=int, default=1024)
    p.add_argument("--mirror-minus", action="store_true",
                   help="derive the plus family by negation instead of scanning it")
    p.add_argument("--no-half-shift-filter", action="store_true")
    p.add_argument("--no-turyn", action="store_true", help="allow even m (experimental sweep)")
    p.add_argument("--plot-dir", help="render report figures to this directory")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("count", help="reduced and unreduced search-space sizes")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("verify", help="run a brute-force verification suite")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_verify)

    return parser


def _lift_sequence_tokens(argv: list) -> list:
    """Rewrite bare +/- sequences so argparse does not read them as flags.

    Only all-minus tokens are ambiguous, but every pure +/- token of length
    two or more is lifted for uniformity.  The lone "--" separator is left
    alone; single-character sequences can be given in hex form.
    """
    out = []
    for tok in argv:
        if tok != "--" and len(tok) >= 2 and all(c in "+-" for c in tok):
            out.append(f"--sequence-literal={tok}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "autocorr":
        argv = _lift_sequence_tokens(argv)
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
