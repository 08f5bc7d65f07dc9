"""Command-line front end.

Subcommands: construct, profile, verify, decode-test, figure.
Exit codes: 0 success, 1 verification failure, 2 invalid input.
All output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .code import (
    CodeParams,
    QuantumMdsCode,
    from_descriptor,
    smallest_prime_at_least,
    to_descriptor,
)
from .entropy import (
    check_decoding_condition,
    check_entropy_inequalities,
    expected_subsystem_entropy,
    extended_profile,
    full_profile,
    product_state_checks,
)
from . import sim

FIDELITY_TOL = 1e-12
ORACLE_TOL = 1e-9


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated list of integers: {text!r}")


def _add_code_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--code", metavar="PATH", help="JSON code descriptor file")
    parser.add_argument("--n", type=int, help="code length (coded qudits)")
    parser.add_argument("--k", type=int, help="source qudits")
    parser.add_argument("--d", type=int, help="minimum distance")
    parser.add_argument("--q", type=int, help="prime field modulus (default: smallest prime >= n)")
    parser.add_argument("--alphas", help="comma-separated distinct evaluation points")


def _load_code(args) -> QuantumMdsCode:
    if args.code is not None:
        with open(args.code, "r", encoding="utf-8") as handle:
            descriptor = json.load(handle)
        return from_descriptor(descriptor)
    if args.n is None or args.k is None or args.d is None:
        raise ValueError("provide either --code PATH or all of --n, --k, --d")
    q = args.q if args.q is not None else smallest_prime_at_least(args.n)
    params = CodeParams(n=args.n, k=args.k, d=args.d, q=q)
    alphas = _parse_int_list(args.alphas, "--alphas") if args.alphas else None
    return QuantumMdsCode(params, alphas)


def _csv_text(rows) -> str:
    return "size,entropy\n" + "".join(f"{s},{h}\n" for s, h in rows)


def cmd_construct(args) -> int:
    q = args.q if args.q is not None else smallest_prime_at_least(args.n)
    params = CodeParams(n=args.n, k=args.k, d=args.d, q=q)
    alphas = _parse_int_list(args.alphas, "--alphas") if args.alphas else None
    code = QuantumMdsCode(params, alphas)
    _emit(json.dumps(to_descriptor(code), indent=2) + "\n", args.out)
    return 0


def cmd_profile(args) -> int:
    code = _load_code(args)
    profile = extended_profile(code) if args.extended_r else full_profile(code)
    if args.format == "csv":
        _emit(_csv_text(profile.csv_rows()), args.out)
    else:
        _emit(json.dumps(profile.to_dict(), indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    code = _load_code(args)
    p = code.params
    lines: list[str] = [f"verify [[{p.n},{p.k},{p.d}]]_{p.q} (oracle: {args.oracle})"]
    failed = False

    profile = full_profile(code)
    if args.oracle in ("lemma", "both"):
        mismatches = profile.mismatches()
        ok = not mismatches
        failed |= not ok
        lines.append(
            f"[{'ok' if ok else 'FAIL'}] rank-identity profile matches "
            f"min(size, {p.num_registers} - size) on {len(profile.entries)} subsystems"
        )
        for entry in mismatches:
            lines.append(
                f"  mismatch {list(entry.labels)}: entropy {entry.entropy}, "
                f"expected {entry.expected}"
            )

    if args.oracle in ("statevec", "both"):
        # in "both" mode the reference is the other oracle (agreement check);
        # alone, the state vector is compared against the pyramid formula
        psi = sim.encode_state(code)
        against = "rank oracle" if args.oracle == "both" else "expected"
        max_delta = 0.0
        bad: list[str] = []
        for entry in profile.entries:
            value = sim.von_neumann_entropy(psi, entry.spec)
            reference = entry.entropy if args.oracle == "both" else entry.expected
            delta = abs(value - reference)
            max_delta = max(max_delta, delta)
            if delta > ORACLE_TOL:
                bad.append(
                    f"  {list(entry.labels)}: statevec {value!r} vs {against} {reference}"
                )
        ok = not bad
        failed |= not ok
        lines.append(
            f"[{'ok' if ok else 'FAIL'}] state-vector entropies within {ORACLE_TOL} "
            f"of the {against} on {len(profile.entries)} subsystems "
            f"(max oracle delta {max_delta:.3e})"
        )
        lines.extend(bad)

    for report in (check_decoding_condition(profile),):
        failed |= not report.ok
        counts = f"{len(report.results)} checks"
        lines.append(f"[{'ok' if report.ok else 'FAIL'}] {report.title} ({counts})")
        for result in report.failures():
            lines.append("  " + result.line())

    if args.inequalities:
        for report in (check_entropy_inequalities(profile), product_state_checks(profile)):
            failed |= not report.ok
            lines.append(f"[{'ok' if report.ok else 'FAIL'}] {report.title}")
            for result in report.results:
                lines.append("  " + result.line())

    lines.append("result: " + ("PASS" if not failed else "FAIL"))
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if not failed else 1


def cmd_decode_test(args) -> int:
    code = _load_code(args)
    p = code.params
    if args.all:
        patterns = [list(c) for c in itertools.combinations(range(1, p.n + 1), p.d - 1)]
    else:
        erased = _parse_int_list(args.erasures, "--erasures")
        if len(set(erased)) != len(erased):
            raise ValueError(f"duplicate erasure indices: {erased}")
        if any(not 1 <= i <= p.n for i in erased):
            raise ValueError(f"erasure indices must lie in 1..{p.n}: {erased}")
        if len(erased) != p.d - 1:
            raise ValueError(
                f"erasure pattern must have exactly d-1={p.d - 1} indices, "
                f"got {len(erased)}"
            )
        patterns = [sorted(erased)]

    psi = sim.encode_state(code)
    lines = []
    all_ok = True
    for erased in patterns:
        surviving = [i for i in range(1, p.n + 1) if i not in erased]
        recovered = sim.decode(psi, code, surviving)
        target = sim.decode_target(code, surviving)
        f = sim.fidelity(recovered, target)
        ok = f >= 1.0 - FIDELITY_TOL
        all_ok &= ok
        lines.append(
            f"erasures {erased}: fidelity {f:.12f} [{'ok' if ok else 'FAIL'}]"
        )
    lines.append("result: " + ("PASS" if all_ok else "FAIL"))
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_ok else 1


def cmd_figure(args) -> int:
    if args.k < 1:
        raise ValueError(f"k must be at least 1: got k={args.k}")
    if args.d < 2:
        raise ValueError(f"d must be at least 2: got d={args.d}")
    total = 2 * (args.k + args.d - 1)
    rows = [(s, expected_subsystem_entropy(s, args.k, args.d)) for s in range(total + 1)]
    _emit(_csv_text(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmds",
        description=(
            "Vandermonde [[n,k,d]]_q quantum MDS codes: construction, exact "
            "subsystem-entropy profiles, two independent entropy oracles, and "
            "erasure-decoding tests."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a code and emit its JSON descriptor"
    )
    p_construct.add_argument("--n", type=int, required=True)
    p_construct.add_argument("--k", type=int, required=True)
    p_construct.add_argument("--d", type=int, required=True)
    p_construct.add_argument("--q", type=int)
    p_construct.add_argument("--alphas")
    p_construct.add_argument("--out")
    p_construct.set_defaults(func=cmd_construct)

    p_profile = sub.add_parser(
        "profile", help="entropy of every subsystem via the exact rank oracle"
    )
    _add_code_source(p_profile)
    p_profile.add_argument("--format", choices=("json", "csv"), default="json")
    p_profile.add_argument(
        "--extended-R",
        dest="extended_r",
        action="store_true",
        help="also report subsets splitting the reference block (no expected value)",
    )
    p_profile.add_argument("--out")
    p_profile.set_defaults(func=cmd_profile)

    p_verify = sub.add_parser(
        "verify", help="check the entropy characterization and decoding conditions"
    )
    _add_code_source(p_verify)
    p_verify.add_argument(
        "--oracle",
        choices=("lemma", "statevec", "both"),
        default="both",
        help="lemma = exact rank-identity oracle, statevec = brute-force simulation",
    )
    p_verify.add_argument(
        "--inequalities",
        action="store_true",
        help="also run the entropy-inequality and product-state suites",
    )
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    p_decode = sub.add_parser(
        "decode-test", help="simulate erasure decoding and report fidelities"
    )
    _add_code_source(p_decode)
    group = p_decode.add_mutually_exclusive_group(required=True)
    group.add_argument("--erasures", help="comma-separated erased qudit indices (size d-1)")
    group.add_argument("--all", action="store_true", help="every erasure pattern of size d-1")
    p_decode.add_argument("--out")
    p_decode.set_defaults(func=cmd_decode_test)

    p_figure = sub.add_parser(
        "figure", help="CSV of (size, expected entropy) from the pyramid formula"
    )
    p_figure.add_argument("--k", type=int, required=True)
    p_figure.add_argument("--d", type=int, required=True)
    p_figure.add_argument("--out")
    p_figure.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
