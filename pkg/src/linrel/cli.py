"""Command-line entry point.

Exit codes: 0 all checks pass, 1 some check failed, 2 input or usage error.
Every flag with a default can be set through an environment variable with
the ``LINREL_`` prefix (``LINREL_TOL``, ``LINREL_REPORT``, ``LINREL_SEED``,
``LINREL_FIELD``, ``LINREL_DIM_CAP``); an explicit flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import contractions as con
from . import decompositions as dec
from . import document
from . import relation as rel
from .errors import RelationError
from .generate import CLASSES, RandomSpec, random_relation, trial_seed
from .suite import DEFAULT_CHECK_TOL, run_suite
from .witnesses import WITNESSES, witness_document

ENV_PREFIX = "LINREL_"
DEFAULT_DIM_CAP = 64


class UsageError(Exception):
    pass


def _env(name, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value for {ENV_PREFIX}{name}: {raw!r}")


def _read_relation(path, cap):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    doc = document.parse_document(text)
    if max(doc.dim_h, doc.dim_k) > cap:
        raise UsageError(f"dimension {max(doc.dim_h, doc.dim_k)} exceeds cap {cap} (see --dim-cap)")
    return doc.to_relation(), doc.label


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _mat(A):
    A = np.round(np.asarray(A), 12) + 0.0
    if np.iscomplexobj(A) and not np.any(A.imag):
        A = A.real
    return np.array2string(A, precision=6, suppress_small=True)


# -- subcommands -------------------------------------------------------------

def cmd_info(args):
    T, label = _read_relation(args.file, args.dim_cap)
    p = T.parts
    info = {
        "label": label,
        "field": T.field_tag,
        "dim_h": T.dim_h,
        "dim_k": T.dim_k,
        "dim": T.dim,
        "dom": p.dom.dim,
        "ran": p.ran.dim,
        "ker": p.ker.dim,
        "mul": p.mul.dim,
        "is_operator": rel.is_operator(T),
        "is_selfadjoint": rel.is_selfadjoint(T) if T.dim_h == T.dim_k else None,
    }
    if args.report == "json":
        print(json.dumps(info, indent=2))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return 0


def cmd_adjoint(args):
    T, label = _read_relation(args.file, args.dim_cap)
    _write(document.serialize(T.adjoint, f"{label}*" if label else None), args.output)
    return 0


def cmd_regpart(args):
    T, label = _read_relation(args.file, args.dim_cap)
    s = dec.split(T)
    base = label or "T"
    reg = document.serialize(s.regular, f"{base}_reg")
    sing = document.serialize(s.singular, f"{base}_sing")
    if args.output:
        _write(reg, args.output + ".reg.json")
        _write(sing, args.output + ".sing.json")
    else:
        print(json.dumps({"regular": json.loads(reg), "singular": json.loads(sing)}, indent=2))
    return 0


def cmd_stone(args):
    T, _ = _read_relation(args.file, args.dim_cap)
    E = con.characteristic_projection(T)
    blocks = dict(zip(("E11", "E12", "E21", "E22"), con.stone_blocks(E, T.dim_h)))
    records = dec.stone_check(T, args.tol)
    if args.report == "json":
        out = {"E_T": E.tolist() if not np.iscomplexobj(E) else [[[z.real, z.imag] for z in r] for r in E]}
        out["checks"] = [r.to_dict() for r in records]
        print(json.dumps(out, indent=2))
    else:
        print("E_T =\n" + _mat(E))
        for k, B in blocks.items():
            print(f"{k} =\n{_mat(B)}")
        for r in records:
            status = ("PASS" if r.passed else "FAIL") if r.applicable else "n/a "
            print(f"[{status}] {r.name} {r.residual:.3e}  {r.anchor}")
    return 0 if all(r.passed for r in records) else 1


def _emit_report(rep, fmt):
    if fmt == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.to_text())


def cmd_verify(args):
    T, label = _read_relation(args.file, args.dim_cap)
    rep = run_suite(T, args.tol, label=label or args.file)
    _emit_report(rep, args.report)
    return 0 if rep.passed else 1


def cmd_fuzz(args):
    if args.max_dim > args.dim_cap:
        raise UsageError(f"--max-dim {args.max_dim} exceeds cap {args.dim_cap}")
    classes = [args.cls] if args.cls else list(CLASSES)
    fields = ["real", "complex"] if args.field == "both" else [args.field]
    n_fail = 0
    results = []
    for i in range(args.trials):
        cls = classes[i % len(classes)]
        fld = fields[(i // len(classes)) % len(fields)]
        seed = trial_seed(args.seed, i)
        T = random_relation(RandomSpec(args.max_dim, cls, seed, fld))
        rep = run_suite(T, args.tol, summary=False, seed=seed, generation_class=cls,
                        label=f"trial {i} ({fld})")
        if not rep.passed:
            n_fail += 1
        if args.report == "json":
            results.append(rep.to_dict())
        elif not rep.passed:
            print(rep.to_text())
    if args.report == "json":
        print(json.dumps({"trials": args.trials, "failed": n_fail, "reports": results}, indent=2))
    else:
        print(f"{args.trials - n_fail}/{args.trials} trials passed (seed={args.seed})")
    return 1 if n_fail else 0


def cmd_example(args):
    if args.name not in WITNESSES:
        raise UsageError(f"unknown example {args.name!r}; choose from {', '.join(WITNESSES)}")
    _write(document.dump_document(witness_document(args.name, args.field)), args.output)
    return 0


# -- parser --------------------------------------------------------------------

def build_parser():
    tol = _env("TOL", DEFAULT_CHECK_TOL, float)
    report = _env("REPORT", "text")
    seed = _env("SEED", 0, int)
    field = _env("FIELD", "complex")
    cap = _env("DIM_CAP", DEFAULT_DIM_CAP, int)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=tol, help="check tolerance (default %(default)g)")
    common.add_argument("--report", choices=("text", "json"), default=report)
    common.add_argument("--dim-cap", type=int, default=cap, help="largest accepted dim H or dim K")

    parser = argparse.ArgumentParser(prog="linrel", description="Linear relations and their graph contractions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", parents=[common], help="dimensions of dom, ran, ker, mul")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = subs.add_parser("adjoint", parents=[common], help="write the adjoint relation")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_adjoint)

    p = subs.add_parser("regpart", parents=[common], help="regular and singular parts")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="prefix; writes PREFIX.reg.json and PREFIX.sing.json")
    p.set_defaults(func=cmd_regpart)

    p = subs.add_parser("stone", parents=[common], help="characteristic projection and its blocks")
    p.add_argument("file")
    p.set_defaults(func=cmd_stone)

    p = subs.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("fuzz", parents=[common], help="run the checks on seeded random relations")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--class", dest="cls", choices=CLASSES)
    p.add_argument("--field", choices=("real", "complex", "both"), default=field)
    p.set_defaults(func=cmd_fuzz)

    p = subs.add_parser("example", parents=[common], help="print a built-in witness relation")
    p.add_argument("name", choices=sorted(WITNESSES))
    p.add_argument("--field", choices=("real", "complex"), default="real")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, RelationError) as exc:
        print(f"linrel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
