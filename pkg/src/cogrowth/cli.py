"""Command-line batch interface.

Exit codes: 0 success, 1 property violation, 2 usage error, 3 data error,
4 line-digraph budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import verify
from .digraph import default_budget
from .errors import BudgetExceeded, CogrowthError, SaturationFailed
from .factors import extract_factors
from .obstructions import cogrowth_profile, minimal_forbidden, profile_to_csv
from .rauzy import build_rauzy, check_evolution
from .words import expand_prefix, resolve_spec

LEMMAS = ("evol", "del-edge", "good-path", "main", "corollary-main", "corollary-er", "prop1", "theorem")

DEFAULT_SEEDS = {"evol": 42, "del-edge": 7, "good-path": 5, "main": 5, "corollary-main": 11}
DEFAULT_COUNTS = {"evol": 300, "del-edge": 300, "good-path": 50, "main": 50, "corollary-main": 20}
DEFAULT_MAX_VERTICES = {"evol": 12, "del-edge": 12, "good-path": 6, "main": 6, "corollary-main": 6}


class UsageError(Exception):
    pass


def _config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    if "budget" in cfg and cfg["budget"] is None:
        cfg["budget"] = default_budget()
    return cfg


def _config_line(args) -> str:
    return "config: " + json.dumps(_config(args), sort_keys=True)


def _spec(source):
    try:
        return resolve_spec(source)
    except (FileNotFoundError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot resolve spec {source!r}: {exc}") from exc


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        path = Path(out)
        if path.parent != Path("."):
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def cmd_generate(args):
    spec = _spec(args.spec)
    _write(f"# {_config_line(args)}\n{expand_prefix(spec, args.n)}\n", args.out)
    return 0


def cmd_factors(args):
    fl = extract_factors(_spec(args.spec), args.k_max)
    header = f"# {_config_line(args)}\n# certified={fl.certified} prefix_len={fl.prefix_len}\n"
    _write(header + fl.to_text(), args.out)
    return 0


def cmd_obstructions(args):
    obs = minimal_forbidden(extract_factors(_spec(args.spec), args.n_max), args.n_max)
    _write(f"# {_config_line(args)}\n" + obs.to_text(), args.out)
    return 0


def cmd_cogrowth(args):
    rows = cogrowth_profile(_spec(args.spec), args.n_max)
    _write(profile_to_csv(rows, _config_line(args)), args.out)
    return 0


def cmd_rauzy(args):
    fl = extract_factors(_spec(args.spec), max(args.k) + 1)
    many = len(args.k) > 1
    for k in args.k:
        dot = build_rauzy(fl, k).graph.to_dot(name=f"R{k}", comment=_config_line(args))
        if many and args.out not in (None, "-"):
            _write(dot, Path(args.out) / f"rauzy_k{k}.dot")
        else:
            _write(dot, args.out)
    return 0


def cmd_evolution(args):
    fl = extract_factors(_spec(args.spec), args.k_max + 2)
    obs = minimal_forbidden(fl, args.k_max + 2)
    reports = [vars(check_evolution(fl, obs, k)) for k in range(args.k_max + 1)]
    doc = {"config": _config(args), "reports": reports}
    _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if all(r["isomorphic"] for r in reports) else 1


def _resolve(name, args) -> dict:
    """Per-lemma parameters with defaults filled in."""
    if name in DEFAULT_SEEDS:
        return {
            "seed": args.seed if args.seed is not None else DEFAULT_SEEDS[name],
            "count": args.count if args.count is not None else DEFAULT_COUNTS[name],
            "max_vertices": args.max_vertices if args.max_vertices is not None
            else DEFAULT_MAX_VERTICES[name],
        }
    if name == "corollary-er":
        return {"spec": args.spec, "n_max": args.n_max or 20}
    if name == "prop1":
        return {"spec": args.spec, "k_max": args.k_max or 15}
    return {"spec": args.spec, "n_max": args.n_max or 1000}


def _run_lemma(name, params, budget):
    if name == "evol":
        return verify.run_lemma_evol(params["seed"], params["count"], params["max_vertices"])
    if name == "del-edge":
        return verify.run_lemma_del_edge(params["seed"], params["count"], params["max_vertices"])
    if name == "good-path":
        return verify.run_good_path(params["seed"], params["count"], params["max_vertices"])
    if name in ("main", "corollary-main"):
        return verify.run_main_lemma(params["seed"], params["count"], params["max_vertices"],
                                     extra=0 if name == "main" else 1, budget=budget)
    spec = _spec(params["spec"])
    if name == "corollary-er":
        return verify.check_corollary_er(spec, range(1, params["n_max"] + 1))
    if name == "prop1":
        return verify.run_proposition1(spec, range(1, params["k_max"] + 1))
    return verify.check_theorem(spec, params["n_max"])


def cmd_verify(args):
    names = LEMMAS if args.lemma == "all" else (args.lemma,)
    reports = {}
    for name in names:
        params = _resolve(name, args)
        doc = _run_lemma(name, params, args.budget).to_dict()
        doc["config"] = {**_config(args), "resolved": params}
        reports[name] = doc
        if args.out not in (None, "-"):
            _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", Path(args.out) / f"{name}.json")
    if args.out in (None, "-"):
        doc = reports[names[0]] if len(names) == 1 else reports
        _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", None)
    return 1 if any(r["violations"] for r in reports.values()) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cogrowth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="output file or directory (default: stdout)")
        return p

    p = add("generate", cmd_generate, "write a prefix of a sequence")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("factors", cmd_factors, "export factor strata")
    p.add_argument("--spec", required=True)
    p.add_argument("--k-max", type=int, required=True)

    p = add("obstructions", cmd_obstructions, "export minimal forbidden words")
    p.add_argument("--spec", required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add("cogrowth", cmd_cogrowth, "cogrowth profile as CSV")
    p.add_argument("--spec", required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = add("rauzy", cmd_rauzy, "Rauzy graphs as DOT")
    p.add_argument("--spec", required=True)
    p.add_argument("--k", type=int, nargs="+", required=True)

    p = add("evolution", cmd_evolution, "line-digraph evolution reports as JSON")
    p.add_argument("--spec", required=True)
    p.add_argument("--k-max", type=int, required=True)

    p = add("verify", cmd_verify, "run lemma checkers and emit JSON reports")
    p.add_argument("--lemma", choices=LEMMAS + ("all",), default="all")
    p.add_argument("--spec", default="fibonacci")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--budget", type=int, default=None,
                   help="line-digraph vertex budget (default: $COGROWTH_BUDGET or 10**6)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", SaturationFailed)
            return args.func(args)
    except UsageError as exc:
        print(f"cogrowth: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"cogrowth: {exc}", file=sys.stderr)
        return 4
    except (CogrowthError, SaturationFailed) as exc:
        print(f"cogrowth: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
