"""Command-line interface.

    enlarged-css table1 | table2       regenerate and check a published table
    enlarged-css lemma --max-m 8       largest dual-containing designed distance, primitive lengths
    enlarged-css scan 127              lengths whose coset of 1 lacks n-1
    enlarged-css cosets 15             cyclotomic cosets mod n
    enlarged-css bch 31 7              BCH code parameters
    enlarged-css enlarge 21 5 3 --extended -o code.json
    enlarged-css distance code.json    brute-force distance and purity
    enlarged-css bound mrrw enlarged   zero-rate threshold of a quantum-rate bound
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bch, bounds, codefile
from .codes import LinearCode, Unverified, even_weight_code, extend_parity, min_distance
from .codes import DEFAULT_SUBSET_CAP
from .enlarge import enlarge
from .errors import CodeError, LemmaViolation
from .field import poly_str
from .search import DEFAULT_CODEWORD_CAP, DEFAULT_SYMPLECTIC_CAP
from .stabilizer import check_commutativity, quantum_distance, with_verified_distance
from .tables import reproduce_table


@dataclass(frozen=True)
class RunConfig:
    cap_codewords: int = DEFAULT_CODEWORD_CAP
    cap_symplectic: int = DEFAULT_SYMPLECTIC_CAP
    cap_subsets: int = DEFAULT_SUBSET_CAP
    format: str = "text"
    strict: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if min(self.cap_codewords, self.cap_symplectic, self.cap_subsets) <= 0:
            raise ValueError("enumeration caps must be positive")


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- commands -------------------------------------------------------------------


def cmd_table(cfg: RunConfig, table: int) -> int:
    report = reproduce_table(
        table,
        cap_codewords=cfg.cap_codewords,
        cap_symplectic=cfg.cap_symplectic,
        workers=cfg.workers,
    )
    _emit(cfg, report.to_dict(), report.to_text())
    return 0 if report.ok(strict=cfg.strict) else 1


def lemma_rows(max_m: int, min_m: int = 3) -> list[tuple[int, int, int, int]]:
    """``(m, n, found, predicted)`` for primitive lengths ``n = 2^m - 1``."""
    if not 3 <= min_m <= max_m <= 9:
        raise ValueError("need 3 <= min_m <= max_m <= 9")
    rows = []
    for m in range(min_m, max_m + 1):
        n = (1 << m) - 1
        found = bch.max_dual_containing_delta(n)
        predicted = (1 << math.ceil(m / 2)) - 1
        if found != predicted:
            raise LemmaViolation(f"m={m}: exhaustive search gives {found}, formula gives {predicted}")
        rows.append((m, n, found, predicted))
    return rows


def cmd_lemma(cfg: RunConfig, max_m: int, min_m: int) -> int:
    rows = lemma_rows(max_m, min_m)
    payload = [dict(zip(("m", "n", "max_delta", "formula"), r)) for r in rows]
    text = "\n".join(f"m={m} n={n}: max dual-containing delta = {f} (2^ceil(m/2)-1 = {p})" for m, n, f, p in rows)
    _emit(cfg, {"rows": payload}, text)
    return 0


def cmd_scan(cfg: RunConfig, limit: int, lo: int, max_coset_size: int | None) -> int:
    if max_coset_size is None:
        found = [n for n in bch.scan_nonprimitive(limit) if n >= lo]
    else:
        found = bch.lengths_with_small_cosets(lo, limit, max_coset_size)
    _emit(cfg, {"lengths": found}, " ".join(map(str, found)))
    return 0


def cmd_cosets(cfg: RunConfig, n: int) -> int:
    cosets = bch.cyclotomic_cosets(n)
    _emit(
        cfg,
        {"n": n, "cosets": [list(c.elements) for c in cosets]},
        "\n".join(f"C_{c.representative} = {c}" for c in cosets),
    )
    return 0


def _bch(n: int, delta: int, b: int, extended: bool) -> LinearCode:
    code = bch.bch_code(bch.defining_set(n, b, delta))
    return extend_parity(code) if extended else code


def cmd_bch(cfg: RunConfig, n: int, delta: int, b: int, extended: bool, distance: bool) -> int:
    spec = bch.defining_set(n, b, delta)
    g = bch.generator_polynomial(spec)
    code = _bch(n, delta, b, extended)
    payload = {
        "n": code.n,
        "k": code.k,
        "designed_distance": code.designed_distance,
        "defining_set": sorted(spec.defining_set),
        "generator_polynomial": poly_str(g),
        "dual_containing": bch.is_dual_containing(spec),
        "extended": extended,
    }
    if distance:
        d = min_distance(code, cfg.cap_codewords, cfg.cap_subsets, workers=cfg.workers)
        payload["distance"] = str(d) if isinstance(d, Unverified) else d
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(cfg, payload, text)
    return 0


def cmd_enlarge(
    cfg: RunConfig, n: int, delta: int, delta_prime: int, extended: bool, verify: bool, output: str | None
) -> int:
    c = _bch(n, delta, 1, extended)
    cprime = even_weight_code(c.n) if delta_prime <= 2 else _bch(n, delta_prime, 1, extended)
    record = enlarge(c, cprime)
    code = record.code
    if verify:
        result = quantum_distance(code, cfg.cap_symplectic, workers=cfg.workers)
        code = with_verified_distance(code, result)
    fmt = "json" if cfg.format == "json" else "text"
    body = codefile.dumps(code, fmt)
    if output:
        Path(output).write_text(body)
        print(f"wrote {code} to {output}", file=sys.stderr)
    else:
        sys.stdout.write(body)
    if code.distance is not None and code.claimed_distance is not None:
        return 0 if code.distance >= code.claimed_distance and code.pure else 1
    return 0


def cmd_distance(cfg: RunConfig, path: str) -> int:
    code = codefile.load(path)
    commute = check_commutativity(code)
    result = quantum_distance(code, cfg.cap_symplectic, workers=cfg.workers)
    unverified = isinstance(result.distance, Unverified)
    payload = {
        "n": code.n,
        "K": code.K,
        "commutes": commute,
        "claimed_distance": code.claimed_distance,
        "distance": None if unverified else result.distance,
        "pure": result.pure,
    }
    text = f"[[{code.n},{code.K}]] distance={result.distance} pure={result.pure} commutes={commute}"
    _emit(cfg, payload, text)
    if not commute:
        return 1
    if not unverified and code.claimed_distance is not None and result.distance < code.claimed_distance:
        return 1
    return 0


def cmd_bound(cfg: RunConfig, kind: str, family: str, x: float | None) -> int:
    if x is not None:
        value = bounds.quantum_rate(kind, family, x)
        _emit(cfg, {"kind": kind, "family": family, "x": x, "rate": value}, f"{value:.6f}")
        return 0
    threshold = bounds.quantum_rate_threshold(kind, family)
    _emit(cfg, {"kind": kind, "family": family, "threshold": threshold}, f"{threshold:.4f}")
    return 0


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-codewords", type=int, default=DEFAULT_CODEWORD_CAP,
                        help="max classical codewords to enumerate (default 2^28)")
    common.add_argument("--cap-symplectic", type=int, default=DEFAULT_SYMPLECTIC_CAP,
                        help="max symplectic vectors to enumerate (default 2^28)")
    common.add_argument("--cap-subsets", type=int, default=DEFAULT_SUBSET_CAP,
                        help="max column subsets for the classical distance fallback")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--strict", action="store_true", help="treat known table anomalies as failures")
    common.add_argument("--workers", type=int, default=1, help="processes for distance searches")

    parser = argparse.ArgumentParser(prog="enlarged-css", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table1", parents=[common], help="regenerate the primitive BCH table")
    sub.add_parser("table2", parents=[common], help="regenerate the non-primitive BCH table")

    p = sub.add_parser("lemma", parents=[common], help="check the primitive dual-containment limit")
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--min-m", type=int, default=3)

    p = sub.add_parser("scan", parents=[common], help="lengths whose coset of 1 lacks n-1")
    p.add_argument("limit", type=int)
    p.add_argument("--min", type=int, default=3, dest="lo")
    p.add_argument("--max-coset-size", type=int, default=None,
                   help="keep only lengths whose coset of 1 has at most this many elements")

    p = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets mod n")
    p.add_argument("n", type=int)

    p = sub.add_parser("bch", parents=[common], help="BCH code parameters")
    p.add_argument("n", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("-b", type=int, default=1)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--distance", action="store_true", help="also compute the true minimum distance")

    p = sub.add_parser("enlarge", parents=[common], help="build an enlarged code from two BCH codes")
    p.add_argument("n", type=int, help="odd length of the BCH codes")
    p.add_argument("delta", type=int, help="designed distance of the inner, dual-containing code")
    p.add_argument("delta_prime", type=int, help="designed distance of the outer code; 2 means even-weight")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--verify", action="store_true", help="brute-force the quantum distance")
    p.add_argument("-o", "--output")

    p = sub.add_parser("distance", parents=[common], help="distance and purity of a code file")
    p.add_argument("file")

    p = sub.add_parser("bound", parents=[common], help="zero-rate threshold of a quantum rate bound")
    p.add_argument("kind", choices=bounds.KINDS)
    p.add_argument("family", choices=bounds.FAMILIES, nargs="?", default="enlarged")
    p.add_argument("--x", type=float, default=None, help="evaluate the rate bound at this d/n instead")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            cap_codewords=args.cap_codewords,
            cap_symplectic=args.cap_symplectic,
            cap_subsets=args.cap_subsets,
            format=args.format,
            strict=args.strict,
            workers=args.workers,
        )
        match args.command:
            case "table1":
                return cmd_table(cfg, 1)
            case "table2":
                return cmd_table(cfg, 2)
            case "lemma":
                return cmd_lemma(cfg, args.max_m, args.min_m)
            case "scan":
                return cmd_scan(cfg, args.limit, args.lo, args.max_coset_size)
            case "cosets":
                return cmd_cosets(cfg, args.n)
            case "bch":
                return cmd_bch(cfg, args.n, args.delta, args.b, args.extended, args.distance)
            case "enlarge":
                return cmd_enlarge(cfg, args.n, args.delta, args.delta_prime, args.extended, args.verify, args.output)
            case "distance":
                return cmd_distance(cfg, args.file)
            case "bound":
                return cmd_bound(cfg, args.kind, args.family, args.x)
    except (CodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
