"""Command-line front end.

Three subcommands:

* ``compute INPUT``  -- decomposition of a surgery word or profile JSON,
  as text (default), canonical JSON (``--json``) or an ASCII dimension
  grid (``--grid``).
* ``verify INPUT``   -- run all structural checks; exit 0 on pass.
* ``catalog BETA_MAX`` -- one verified row per realizable profile.

Exit codes: 0 ok, 1 verification failure, 2 parse/validation error.
INPUT starting with '{' is parsed as a profile JSON object
``{"kind":..., "beta":..., "F":..., "C":...}``; anything else as a word.
The environment variable ``ESC_WINDOW`` (same ``pmin:pmax,qmin:qmax``
syntax as ``--window``) overrides the default windows.  stdout carries
data; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bigraded import Decomposition, Summand, render_grid
from .checks import DEFAULT_LES_WINDOW, Window, verify_decomposition
from .engine import closed_form, reduced_form
from .surfaces import (
    InvariantProfile,
    ParseError,
    ProfileError,
    WordError,
    enumerate_profiles,
    invariants,
    parse_word,
    profiles_by_words,
)

DEFAULT_GRID_WINDOW = Window(-4, 6, -6, 6)

OK = 0
VERIFY_FAILED = 1
BAD_INPUT = 2


class _InputError(ValueError):
    pass


def _parse_input(text: str) -> InvariantProfile:
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _InputError(f"bad profile JSON: {exc}") from None
        return InvariantProfile.from_json_obj(obj)
    return invariants(parse_word(text))


def _pick_window(flag_value: str | None, fallback: Window) -> Window:
    if flag_value is not None:
        return Window.parse(flag_value)
    env = os.environ.get("ESC_WINDOW")
    if env:
        return Window.parse(env)
    return fallback


def _cmd_compute(args) -> int:
    profile = _parse_input(args.input)
    decomposition = reduced_form(profile) if args.reduced else closed_form(profile)
    if args.grid:
        window = _pick_window(args.window, DEFAULT_GRID_WINDOW)
        print(render_grid(decomposition, (window.pmin, window.pmax),
                          (window.qmin, window.qmax)))
    elif args.json:
        print(json.dumps(decomposition.to_json_obj(), separators=(",", ":")))
    else:
        print(decomposition)
    return OK


def _apply_injection(decomposition: Decomposition, directive: str) -> Decomposition:
    """Test hook: 'drop:p,q' removes one free summand with that shift."""
    parts = directive.split(":")
    if len(parts) == 2 and parts[0] == "drop":
        try:
            p, q = (int(v) for v in parts[1].split(","))
        except ValueError:
            raise _InputError(f"bad injection {directive!r}") from None
        try:
            return decomposition.remove(Summand.free(p, q))
        except KeyError:
            raise _InputError(f"no free summand at ({p},{q}) to drop") from None
    raise _InputError(f"bad injection {directive!r} (want drop:p,q)")


def _cmd_verify(args) -> int:
    profile = _parse_input(args.input)
    decomposition = closed_form(profile)
    if args.inject:
        decomposition = _apply_injection(decomposition, args.inject)
    window = _pick_window(args.window, DEFAULT_LES_WINDOW)
    violations = verify_decomposition(decomposition, profile, window)
    if args.json:
        print(json.dumps([v.to_json_obj() for v in violations], separators=(",", ":")))
    elif violations:
        for v in violations:
            print(f"FAIL: {v}")
    else:
        print(f"ok: {profile} [window {window}] {decomposition}")
    return VERIFY_FAILED if violations else OK


def _cmd_catalog(args) -> int:
    profiles = enumerate_profiles(args.beta_max)
    witnesses = profiles_by_words(args.beta_max)
    any_failed = False
    for pr in profiles:
        decomposition = closed_form(pr)
        violations = verify_decomposition(decomposition, pr)
        status = "ok" if not violations else "FAIL"
        any_failed = any_failed or bool(violations)
        print(f"{witnesses[pr]}\t{pr.kind}\tbeta={pr.beta}"
              f" F={pr.fixed_points} C={pr.fixed_circles}"
              f"\t{decomposition}\t{status}")
    return VERIFY_FAILED if any_failed else OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c2surf",
        description="RO(C2)-graded mod-2 cohomology of surfaces with involution")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="decomposition of a word or profile")
    compute.add_argument("input", help="surgery word or profile JSON")
    compute.add_argument("--json", action="store_true", help="canonical JSON output")
    compute.add_argument("--grid", action="store_true", help="ASCII dimension grid")
    compute.add_argument("--reduced", action="store_true",
                         help="strip the unshifted M2 summand (nonfree/trivial only)")
    compute.add_argument("--window", metavar="P0:P1,Q0:Q1", default=None)

    verify = sub.add_parser("verify", help="check a decomposition against the oracles")
    verify.add_argument("input", help="surgery word or profile JSON")
    verify.add_argument("--json", action="store_true", help="JSON violation report")
    verify.add_argument("--window", metavar="P0:P1,Q0:Q1", default=None)
    verify.add_argument("--inject", metavar="drop:P,Q", default=None,
                        help="corrupt the decomposition first (testing hook)")

    catalog = sub.add_parser("catalog", help="verified catalog up to a beta bound")
    catalog.add_argument("beta_max", type=int)
    return parser


def _preprocess(argv: list[str]) -> list[str]:
    # Let "--window -2:6,-8:8" through argparse, which would otherwise read
    # the leading dash as an option prefix.
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_preprocess(argv))
    handler = {"compute": _cmd_compute, "verify": _cmd_verify,
               "catalog": _cmd_catalog}[args.command]
    try:
        return handler(args)
    except (ParseError, WordError, ProfileError, _InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
