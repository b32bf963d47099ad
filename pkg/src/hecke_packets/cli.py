"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input,
3 enumeration budget exceeded.

Settings resolve as flag > environment variable > default. The variables
are ``HECKE_PACKETS_FORMAT``, ``HECKE_PACKETS_JOBS``,
``HECKE_PACKETS_CACHE_DIR`` and ``HECKE_PACKETS_BUDGET``.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass, field

from . import report
from .arith import is_prime, prime_power
from .cache import PayloadCache
from .characters import DEFAULT_BUDGET
from .errors import BudgetExceeded, TheoremViolation
from .galois import DEFAULT_RESIDUE_BUDGET

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
FORMATS = ("json", "csv", "table")
ENV_PREFIX = "HECKE_PACKETS_"


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    pairs: list[tuple[int, int]] = field(default_factory=list)
    brute: bool = False
    fmt: str = "json"
    out: str | None = None
    cache_dir: str | None = None
    budget: int | None = None
    jobs: int = 1


def _ints(token: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", token)
    if not m:
        raise ConfigError(f"bad grid value {token!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise ConfigError(f"empty range {token!r}")
    return list(range(lo, hi + 1))


def parse_grid(spec: str) -> list[tuple[int, int]]:
    """``"n=2..4,q=3,5,7"`` -> every (n, q) pair, n-major, values in the given order."""
    values: dict[str, list[int]] = {}
    current = None
    for token in re.split(r"[,;]", spec):
        if not token.strip():
            continue
        if "=" in token:
            name, _, rest = token.partition("=")
            current = name.strip().lower()
            if current == "p":
                current = "q"
            if current not in ("n", "q"):
                raise ConfigError(f"unknown grid key {name!r}")
            values.setdefault(current, [])
            token = rest
        if current is None:
            raise ConfigError(f"grid value {token!r} before any key")
        values[current] += _ints(token)
    if set(values) != {"n", "q"}:
        raise ConfigError("grid needs both n=... and q=...")
    return [(n, q) for n in values["n"] for q in values["q"]]


def _validate(cfg: RunConfig) -> None:
    if cfg.fmt not in FORMATS:
        raise ConfigError(f"format must be one of {FORMATS}")
    if cfg.jobs < 1:
        raise ConfigError("--jobs must be >= 1")
    if cfg.budget is not None and cfg.budget <= 0:
        raise ConfigError("--budget must be positive")
    if not cfg.pairs:
        raise ConfigError("give --n and --q (or --grid)")
    for n, q in cfg.pairs:
        if n < 2:
            raise ConfigError(f"n must be >= 2, got {n}")
        if prime_power(q) is None:
            raise ConfigError(f"q={q} is not a prime power")
        if cfg.command == "correspond" and not is_prime(q):
            raise ConfigError(f"correspond needs a prime residue field, got q={q}")


def _env(name: str) -> str | None:
    v = os.environ.get(ENV_PREFIX + name)
    return v if v not in (None, "") else None


def _env_int(name: str) -> int | None:
    v = _env(name)
    if v is None:
        return None
    try:
        return int(v)
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{name} must be an integer, got {v!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--jobs", type=int, default=None)
    common.add_argument("--budget", type=int, default=None,
                        help="maximum enumeration size (raw pairs or residues)")

    parser = argparse.ArgumentParser(
        prog="hecke-packets",
        description="Supersingular L-packets of SL_n Hecke algebras and projective Galois classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all supersingular L-packets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("count", parents=[common], help="closed-form g(d), h(d) table")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--grid", help='e.g. "n=2..4,q=3,5,7"')
    p.add_argument("--brute", action="store_true", help="also enumerate and compare")

    p = sub.add_parser("correspond", parents=[common], help="verify the packet/class bijection (q = p)")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", dest="q", type=int)
    grp.add_argument("--q", dest="q", type=int)

    p = sub.add_parser("classes", parents=[common], help="list projective classes of primitive residues")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    grid = getattr(args, "grid", None)
    if grid:
        if args.n is not None or args.q is not None:
            raise ConfigError("use either --grid or --n/--q, not both")
        pairs = parse_grid(grid)
    elif args.n is not None and args.q is not None:
        pairs = [(args.n, args.q)]
    else:
        pairs = []
    cfg = RunConfig(
        command=args.command,
        pairs=pairs,
        brute=getattr(args, "brute", False),
        fmt=args.fmt or _env("FORMAT") or "json",
        out=args.out,
        cache_dir=args.cache_dir or _env("CACHE_DIR"),
        budget=args.budget if args.budget is not None else _env_int("BUDGET"),
        jobs=args.jobs if args.jobs is not None else (_env_int("JOBS") or 1),
    )
    _validate(cfg)
    return cfg


def run(cfg: RunConfig) -> tuple[dict, int]:
    cache = PayloadCache(cfg.cache_dir)
    schema = report.SCHEMA_VERSION
    budget = cfg.budget or DEFAULT_BUDGET
    residue_budget = cfg.budget or DEFAULT_RESIDUE_BUDGET
    if cfg.command == "enumerate":
        (n, q), = cfg.pairs
        payload = cache.get_or_compute(
            cache.make_key("enumerate", n, q, schema),
            lambda: report.enumerate_payload(n, q, cfg.jobs, budget),
        )
        return payload, EXIT_OK
    if cfg.command == "count":
        units = [
            cache.get_or_compute(
                cache.make_key("count", n, q, schema, brute=cfg.brute),
                lambda n=n, q=q: report.count_unit(n, q, cfg.brute, cfg.jobs, budget),
            )
            for n, q in cfg.pairs
        ]
        payload = report.count_payload(units, cfg.brute)
        return payload, EXIT_OK if payload["match"] else EXIT_VERIFY
    if cfg.command == "correspond":
        (n, p), = cfg.pairs
        payload = cache.get_or_compute(
            cache.make_key("correspond", n, p, schema),
            lambda: report.correspond_payload(n, p, cfg.jobs, budget, residue_budget),
        )
        return payload, EXIT_OK if payload["ok"] else EXIT_VERIFY
    if cfg.command == "classes":
        (n, q), = cfg.pairs
        payload = cache.get_or_compute(
            cache.make_key("classes", n, q, schema),
            lambda: report.classes_payload(n, q, residue_budget),
        )
        return payload, EXIT_OK
    raise ConfigError(f"unknown command {cfg.command!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        payload, code = run(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremViolation as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(report.render(payload, cfg.fmt), cfg.out)
    if code == EXIT_VERIFY:
        print("verification failed: see report", file=sys.stderr)
    return code
