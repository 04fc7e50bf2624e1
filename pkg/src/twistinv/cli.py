"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import systems
from .canonical import CanonicalBasis
from .classic import HeckeKL
from .coxeter import CoxeterSystem, ResourceError
from .cosets import classify_rank2, coset_involutions, double_cosets
from .duality import AffineSetup, check_closed_forms, scan_extremal_pairs
from .io import (PM_COLUMNS, SCAN_COLUMNS, DescriptorError, coset_record, dumps,
                 parse_descriptor, to_csv, vector_to_json)
from .laurent import DomainError
from .module import InvolutionModule
from .vectors import sort_key
from .verify import SUITES, VerifyContext, run_suite

COMMANDS = ["enumerate", "bar", "rpoly", "ppm", "kl", "basis", "cosets", "verify",
            "scan-8-4", "check-8-6"]


@dataclass
class RunConfig:
    system: str
    command: str
    args: list[str]
    maxlen: int | None = None
    cap: int = 10**6
    star: list[int] | None = None
    out: str | None = None
    fmt: str = "json"
    s0: int | None = None

    def __post_init__(self):
        if self.maxlen is not None and self.maxlen < 0:
            raise ValueError("--maxlen must be >= 0")
        if self.cap < 1:
            raise ValueError("--cap must be >= 1")
        if self.fmt not in ("json", "csv"):
            raise ValueError("--format must be json or csv")


def load(config: RunConfig) -> tuple[CoxeterSystem, dict]:
    path = Path(config.system)
    if path.is_file():
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"{path}: {exc}") from exc
    elif config.system in systems.CATALOG:
        spec = systems.get(config.system)
        obj = spec.to_descriptor()
        if spec.s0 is not None:
            obj["s0"] = spec.s0
    else:
        raise DescriptorError(f"no descriptor file or catalog system named {config.system!r}")
    return parse_descriptor(obj, config.star, config.cap), obj


def _bound(config: RunConfig, W: CoxeterSystem, default_infinite: int = 6) -> int:
    if config.maxlen is not None:
        return config.maxlen
    if W.is_finite_parabolic(range(W.rank)):
        return len(W.longest_element())
    return default_infinite


def _words(W: CoxeterSystem, args: list[str], n: int, what: str) -> list:
    if len(args) != n:
        raise DomainError(f"{what} expects {n} argument(s), got {len(args)}")
    return [W.parse(a) for a in args]


def _render(config: RunConfig, obj, columns: list[str] | None = None, rows=None) -> str:
    if config.fmt == "csv":
        if columns is None:
            raise DomainError("this command has no CSV form; use --format json")
        return to_csv(columns, rows)
    return dumps(obj)


def _table(config: RunConfig, columns: list[str], rows: list[dict]) -> str:
    return _render(config, {"columns": columns, "rows": rows}, columns, rows)


def execute(config: RunConfig) -> tuple[str, int]:
    """Run one command; returns (output text, exit status)."""
    W, desc = load(config)
    M = InvolutionModule(W)
    cmd, args = config.command, config.args
    L = _bound(config, W)

    if cmd == "enumerate":
        what = args[0] if args else "twisted"
        if what == "elements":
            elems = W.enumerate_up_to(L)
        elif what == "twisted":
            elems = M.enumerate_twisted(L)
        else:
            raise DomainError("enumerate takes 'elements' or 'twisted'")
        rows = [{"w": W.fmt(w), "length": len(w)} for w in elems]
        return _table(config, ["w", "length"], rows), 0

    if cmd == "bar":
        (w,) = _words(W, args, 1, "bar")
        if not M.is_twisted(w):
            raise DomainError(f"{W.fmt(w)!r} is not a twisted involution")
        return _render(config, vector_to_json(W, M.bar_basis(w))), 0

    if cmd == "rpoly":
        rows = []
        for w in M.enumerate_twisted(L):
            for y in M.lower_interval(w):
                rows.append({"y": W.fmt(y), "w": W.fmt(w), "l_y": len(y), "l_w": len(w),
                             "r": str(M.r_poly(y, w))})
        return _table(config, ["y", "w", "l_y", "l_w", "r"], rows), 0

    if cmd == "ppm":
        C, H = CanonicalBasis(M), HeckeKL(W)
        rows = []
        for w in M.enumerate_twisted(L):
            for y in M.lower_interval(w):
                kl = H.kl_poly(y, w)
                plus, minus, _ = C.split_pm(y, w, kl)
                rows.append({"y": W.fmt(y), "w": W.fmt(w), "l_y": len(y), "l_w": len(w),
                             "Ppm": str(C.ppm(y, w)), "P": str(kl),
                             "Pplus": str(plus), "Pminus": str(minus)})
        return _table(config, PM_COLUMNS, rows), 0

    if cmd == "kl":
        H = HeckeKL(W)
        rows = []
        for w in W.enumerate_up_to(L):
            for y in sorted(W.lower_interval(w), key=sort_key):
                rows.append({"y": W.fmt(y), "w": W.fmt(w), "l_y": len(y), "l_w": len(w),
                             "P": str(H.kl_poly(y, w))})
        return _table(config, ["y", "w", "l_y", "l_w", "P"], rows), 0

    if cmd == "basis":
        (w,) = _words(W, args, 1, "basis")
        return _render(config, vector_to_json(W, CanonicalBasis(M).a_canonical(w))), 0

    if cmd == "cosets":
        if len(args) != 1:
            raise DomainError("cosets expects one argument K (labels, comma separated)")
        index = {lab: i for i, lab in enumerate(W.labels)}
        names = [x for x in args[0].replace(".", ",").split(",") if x]
        if len(names) == 1 and names[0] not in index and all(len(l) == 1 for l in W.labels):
            names = list(names[0])
        try:
            K = sorted({index[x] for x in names})
        except KeyError as exc:
            raise DomainError(f"unknown generator {exc.args[0]!r}") from None
        recs = []
        for c in double_cosets(M, K, L):
            tag = None
            if len(K) == 2 and W.m(*K) != float("inf"):
                tag = classify_rank2(M, c)[0]
            recs.append(coset_record(W, c, tag, coset_involutions(M, c)))
        return _render(config, recs), 0

    if cmd == "verify":
        if len(args) != 1:
            raise DomainError(f"verify expects one suite: {', '.join(SUITES)}, all")
        if args[0] != "all" and args[0] not in SUITES:
            raise DomainError(f"unknown suite {args[0]!r}")
        ctx = VerifyContext(W, config.maxlen if config.maxlen is not None else L)
        results = run_suite(args[0], ctx)
        if config.fmt == "json":
            text = dumps([{"suite": r.suite, "check": r.name, "ok": r.ok, "checked": r.checked,
                           "failures": r.failures, "first_failure": r.first} for r in results])
        else:
            text = "".join(r.line() + "\n" for r in results)
        return text, 0 if all(r.ok for r in results) else 1

    if cmd in ("scan-8-4", "check-8-6"):
        s0 = config.s0 if config.s0 is not None else desc.get("s0", 0)
        setup = AffineSetup(M, int(s0))
        if cmd == "scan-8-4":
            if args:
                L = int(args[0])
            rows = [{"dprime_word": W.fmt(r.dprime), "d_word": W.fmt(r.d), "ppm": str(r.ppm),
                     "kl_neg_u": str(r.kl_neg_u), "equal": str(r.equal).lower(),
                     "N_u1": r.n_u1} for r in scan_extremal_pairs(setup, L)]
            return _table(config, SCAN_COLUMNS, rows), 0
        res = check_closed_forms(setup)
        obj = {"ok": res.ok, "exponents": res.exponents, "l_d": res.l_d,
               "l_dprime": res.l_dprime, "closed_form_ok": res.closed_form_ok,
               "kl_ok": res.kl_ok, "ppm_ok": res.ppm_ok, "length_gap_ok": res.length_gap_ok,
               "kl": str(res.kl), "ppm": str(res.ppm)}
        return _render(config, obj), 0 if res.ok else 1

    raise DomainError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistinv",
                                description="Hecke module on twisted involutions: tables and checks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("args", nargs="*", help="word, generator subset, suite or bound")
    p.add_argument("--system", required=True,
                   help="descriptor JSON file, or a catalog name (" + ", ".join(systems.CATALOG) + ")")
    p.add_argument("--star", help="override the star permutation, e.g. 1,0")
    p.add_argument("--maxlen", type=int)
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--s0", type=int, help="distinguished affine generator (index)")
    p.add_argument("--out")
    p.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        star = [int(x) for x in ns.star.split(",")] if ns.star else None
        config = RunConfig(ns.system, ns.command, ns.args, ns.maxlen, ns.cap, star, ns.out,
                           ns.fmt, ns.s0)
        text, status = execute(config)
    except (DomainError, DescriptorError, ResourceError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
