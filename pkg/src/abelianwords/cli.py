"""Command-line front end.

Subcommands: generate, profile, powers (brute | vdw | sturmian), verify.
Recipes are given inline as JSON, as a path to a JSON file, or as a preset
name; slopes likewise (presets ``golden`` and ``sqrt2``).  Outputs are
byte-deterministic for a given configuration, including the worker count.

Exit codes: 0 success/pass, 1 check failure or empty search, 2 usage
error, 3 resource or precision exhaustion.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import checks, complexity, powers, words
from .contfrac import ContinuedFraction, InsufficientPrecisionError
from .words import BudgetError, WordRecipe

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

SLOPE_PRESETS = {
    "golden": {"preperiod": [2], "period": [1]},   # (3 - sqrt 5)/2
    "sqrt2": {"preperiod": [], "period": [2]},     # sqrt 2 - 1
}

RECIPE_PRESETS = {
    "tm": {"kind": "fixed-point", "morphism": {"0": "01", "1": "10"}, "seed": "0"},
    "fibonacci": {"kind": "characteristic", "slope": SLOPE_PRESETS["golden"]},
    "sqrt2-characteristic": {"kind": "characteristic", "slope": SLOPE_PRESETS["sqrt2"]},
    "champernowne": {"kind": "champernowne"},
    "max-complexity": {"kind": "max-complexity"},
    "periodic01": {"kind": "periodic", "pattern": "01"},
    "const0": {"kind": "periodic", "pattern": "0"},
    "hubert-golden": {"kind": "hubert", "slope": SLOPE_PRESETS["golden"]},
    "rauzy-morphism": {"kind": "fixed-point", "morphism": {"0": "01", "1": "0"},
                       "seed": "0", "post": {"0": "012", "1": "021"}},
}


class UsageError(ValueError):
    pass


def _load_recipe(spec: str) -> WordRecipe:
    if spec in RECIPE_PRESETS:
        return words.recipe_from_dict(RECIPE_PRESETS[spec])
    if spec.lstrip().startswith("{"):
        text = spec
    elif os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        raise UsageError(
            f"recipe {spec!r} is not a preset, inline JSON, or readable file")
    try:
        return words.recipe_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad recipe: {exc}") from exc


def _load_slope(spec: str) -> ContinuedFraction:
    if spec in SLOPE_PRESETS:
        return ContinuedFraction.from_dict(SLOPE_PRESETS[spec])
    if spec.lstrip().startswith("{"):
        text = spec
    elif os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        raise UsageError(
            f"slope {spec!r} is not a preset, inline JSON, or readable file")
    try:
        return ContinuedFraction.from_dict(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad slope: {exc}") from exc


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    recipe = _load_recipe(args.recipe)
    w = words.prefix_of(recipe, args.len)
    _emit(w.digits() + "\n", args.out)
    return EXIT_OK


def _profile_rows(w, n_max: int, jobs: int):
    """Per-n profile rows; the n-range may be sharded across threads, the
    merge is by index so the output does not depend on the worker count."""
    if jobs <= 1:
        prof = complexity.profile(w, n_max)
        return prof.rho_ab, prof.rho, prof.balance_running
    bounds = [(i * n_max // jobs + 1, (i + 1) * n_max // jobs)
              for i in range(jobs)]
    bounds = [(lo, hi) for lo, hi in bounds if lo <= hi]

    def work(span):
        lo, hi = span
        return (complexity.abelian_profile(w, hi, lo),
                complexity.subword_profile(w, hi, lo),
                complexity.balance_per_length(w, hi, lo))

    rho_ab, rho, bal = [], [], []
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for a, s, b in pool.map(work, bounds):
            rho_ab += a
            rho += s
            bal += b
    running = []
    best = 0
    for b in bal:
        best = max(best, b)
        running.append(best)
    return rho_ab, rho, running


def cmd_profile(args) -> int:
    recipe = _load_recipe(args.recipe)
    prefix_len = args.prefix_len or 64 * args.nmax
    w = words.prefix_of(recipe, prefix_len)
    rho_ab, rho, running = _profile_rows(w, args.nmax, args.jobs)
    lines = ["n,rho_ab,rho,balance_running"]
    for n in range(1, args.nmax + 1):
        lines.append(f"{n},{rho_ab[n - 1]},{rho[n - 1]},{running[n - 1]}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _certificate(occ, recipe_dict) -> str:
    d = occ.to_dict()
    d["recipe"] = recipe_dict
    return json.dumps(d) + "\n"


def cmd_powers(args) -> int:
    if args.mode == "sturmian":
        if not args.slope:
            raise UsageError("sturmian mode needs --slope")
        slope = _load_slope(args.slope)
        pos = 1 if args.pos is None else args.pos  # 1-based position
        occ = powers.sturmian_power_at(slope, pos, args.k)
        _emit(_certificate(occ, {"kind": "characteristic",
                                 "slope": slope.to_dict()}), args.out)
        return EXIT_OK
    if not args.recipe:
        raise UsageError(f"{args.mode} mode needs --recipe")
    recipe = _load_recipe(args.recipe)
    w = words.prefix_of(recipe, args.prefix_len)
    if args.mode == "brute":
        start = args.pos or 0  # 0-based start
        ell = powers.min_abelian_period(w, start, args.k)
        if ell is None:
            _emit("no abelian power found within the prefix\n", args.out)
            return EXIT_FAIL
        occ = powers.AbelianPowerOccurrence(
            start, ell, args.k,
            complexity.parikh(w.symbols[start:start + ell], w.alphabet_size))
    else:  # vdw
        weights = powers.congo_weights(args.M, w.alphabet_size)
        occ = powers.vdw_power_search(w, args.k, weights)
        if occ is None:
            _emit("no abelian power found within the prefix\n", args.out)
            return EXIT_FAIL
    if not powers.verify_abelian_power(w, occ.start, occ.period, occ.exponent):
        raise AssertionError("certificate failed re-verification before write")
    _emit(_certificate(occ, words.recipe_to_dict(recipe)), args.out)
    return EXIT_OK


def _report_lines(reports):
    lines = []
    for r in reports:
        line = f"{r.verdict.upper()} claim={r.claim} range={r.range_checked}"
        if r.witness is not None:
            line += f" witness={r.witness}"
        lines.append(line)
    return lines


def _report_csv(reports) -> str:
    rows = ["claim,range,verdict,witness"]
    for r in reports:
        wtxt = "" if r.witness is None else json.dumps(r.witness, default=repr).replace('"', "'")
        rows.append(f'{r.claim},{r.range_checked},{r.verdict},"{wtxt}"')
    return "\n".join(rows) + "\n"


def cmd_verify(args) -> int:
    n_max = args.nmax
    if args.claim == "thue-morse":
        w = words.prefix_of(_load_recipe("tm"), 64 * n_max)
        reports = [checks.tm_profile_check(w, n_max)]
    elif args.claim == "rauzy":
        preset = "hubert-golden" if args.variant == "hubert" else "rauzy-morphism"
        reports = [checks.rauzy_constant3_check(_load_recipe(preset), n_max)]
    elif args.claim == "periodicity":
        if not args.recipe or not args.p:
            raise UsageError("periodicity needs --recipe and --p")
        w = words.prefix_of(_load_recipe(args.recipe), max(64, 8 * args.p))
        reports = [checks.periodicity_via_parikh(w, args.p)]
    else:
        raise UsageError(f"unknown claim {args.claim!r} "
                         "(known: thue-morse, rauzy, periodicity)")
    for line in _report_lines(reports):
        print(line)
    if args.out:
        _emit(_report_csv(reports), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="abelianwords",
        description="Generate word prefixes, compute complexity profiles, "
                    "and find Abelian powers.")
    parser.add_argument("--config", help="JSON file with flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)
    by_name = {}

    g = sub.add_parser("generate", help="write a prefix as a digit string")
    g.add_argument("--recipe", required=True)
    g.add_argument("--len", type=int, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("profile", help="CSV of n, rho_ab, rho, running balance")
    p.add_argument("--recipe", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--prefix-len", type=int, dest="prefix_len")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    w = sub.add_parser("powers", help="emit a verified Abelian power certificate")
    w.add_argument("mode", choices=["brute", "vdw", "sturmian"])
    w.add_argument("--recipe")
    w.add_argument("--slope")
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--pos", type=int,
                   help="0-based start for brute, 1-based position for sturmian")
    w.add_argument("--M", type=int, default=1)
    w.add_argument("--prefix-len", type=int, dest="prefix_len", default=1 << 16)
    w.add_argument("--out")
    w.set_defaults(func=cmd_powers)

    v = sub.add_parser("verify", help="run a named claim suite")
    v.add_argument("claim")
    v.add_argument("--nmax", type=int, default=256)
    v.add_argument("--recipe")
    v.add_argument("--p", type=int)
    v.add_argument("--variant", choices=["hubert", "morphism"], default="hubert")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    by_name.update(generate=g, profile=p, powers=w, verify=v)
    return parser, by_name


def _apply_config(subparser, args):
    """Fill flags still at their defaults from a JSON config file."""
    if not args.config:
        return args
    with open(args.config, encoding="utf-8") as fh:
        defaults = json.load(fh)
    for key, val in defaults.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) == subparser.get_default(attr):
            setattr(args, attr, val)
    return args


def main(argv=None) -> int:
    parser, by_name = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _apply_config(by_name[args.command], args)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InsufficientPrecisionError, BudgetError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
