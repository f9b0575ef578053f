"""Command line interface: ``projclosure <command> [input] [flags]``.

Exit codes: 0 success, 1 parse error, 2 precondition error, 3 time budget
exceeded (a partial report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import report as R
from .budget import BudgetExceeded, engine_budget
from .errors import ParseError, PreconditionError
from .semigroup import extremal_rays, is_simplicial, simplicial

COMMANDS = ("analyze", "cm", "buchsbaum", "apery", "lift", "betti", "gb")


def _parse_order(text: str, n: int) -> tuple:
    try:
        idx = [int(t) - 1 for t in text.replace(",", " ").split()]
    except ValueError:
        raise PreconditionError(f"--order expects variable numbers, got {text!r}") from None
    if sorted(idx) != list(range(n)):
        raise PreconditionError(f"--order must be a permutation of 1..{n}")
    return tuple(idx)


def _parse_last_gen(text: str | None, n: int):
    if text is None:
        return "auto"
    if text in ("max", "auto"):
        return text
    try:
        i = int(text)
    except ValueError:
        raise PreconditionError(f"--last-gen expects an index or 'max', got {text!r}") from None
    if not 1 <= i <= n:
        raise PreconditionError(f"--last-gen must lie in 1..{n}")
    return i - 1


def build_report(command: str, spec: R.InputSpec, args, out: dict) -> None:
    """Fill ``out`` section by section so a partial report survives a timeout."""
    S = spec.semigroup()
    if spec.extremal is not None and tuple(sorted(spec.extremal)) != extremal_rays(S):
        raise PreconditionError(f"given extremal indices {list(spec.extremal)} are not the extremal rays "
                                f"{list(extremal_rays(S))}")
    out["input"] = R.s(spec.to_dict())
    out["warnings"] = R._warnings_for(S)
    ranking = _parse_order(args.order, S.ngens) if args.order else None
    homog = _parse_last_gen(args.last_gen, S.ngens)
    k = args.k if args.k is not None else spec.k

    if command == "gb":
        out["ideal"] = R.ideal_section(S, ranking)
        return
    if command == "buchsbaum":
        # the only Buchsbaum warning (non-minimal exponents) is already present
        out["buchsbaum"], _ = R.buchsbaum_section(S)
        return

    out["semigroup"] = R._semigroup_section(S)
    if not is_simplicial(S):
        raise PreconditionError("the semigroup is not simplicial")
    if S.extremal is None:
        S = simplicial(S)

    if command == "apery":
        out["apery"] = R.apery_section(S)
    elif command == "cm":
        sec, warns = R.cm_section(S, homog)
        out["cm"] = sec
        out["warnings"].extend(warns)
    elif command == "lift":
        out["lift"] = R.lift_section(S, k if k is not None else 2)
    elif command == "betti":
        out["betti"] = R.betti_section(S, args.bound)
    elif command == "analyze":
        out["ideal"] = R.ideal_section(S, ranking)
        sec, warns = R.cm_section(S, homog)
        out["cm"] = sec
        out["warnings"].extend(warns)
        out["apery"] = R.apery_section(S)
        if S.dim == 1 and not sec["cm_projective"]:
            out["buchsbaum"], _ = R.buchsbaum_section(S)
        if k is not None:
            out["lift"] = R.lift_section(S, k)
        if args.bound is not None:
            out["betti"] = R.betti_section(S, args.bound)


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and any(isinstance(v, (dict, list)) for v in
                                                             (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            elif isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key.ljust(width)} : {_scalar(val)}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, dict):
                lines.append(f"{pad}-")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(line for line in lines if line)


def _scalar(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="projclosure",
                                description="Toric ideals, projective closures and CM tests "
                                            "for simplicial affine semigroups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-",
                   help="input file (default: stdin); JSON or whitespace-separated rows")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--order", help="variable ranking for the gb section, e.g. 3,2,1 for z3 > z2 > z1")
    p.add_argument("-k", "--k", type=int, help="lifting factor")
    p.add_argument("--bound", type=int, help="Betti degree bound (number of summands)")
    p.add_argument("--last-gen", help="homogenizing generator: 1-based index or 'max'")
    p.add_argument("--max-seconds", type=float, help="engine time budget")
    return p


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = make_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        spec = R.parse_input(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"cannot read input: {exc}", file=stderr)
        return 1

    body: dict = {"schema": R.SCHEMA_VERSION, "command": args.command}
    code = 0
    t0 = time.perf_counter()
    try:
        with engine_budget(args.max_seconds):
            build_report(args.command, spec, args, body)
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=stderr)
        body["error"] = str(exc)
        code = 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        body["incomplete"] = True
        code = 3
    elapsed = time.perf_counter() - t0
    doc = {"report": body, "timing": {"seconds": f"{elapsed:.6f}"}}
    if args.format == "json":
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write(render_text(body) + "\n")
        stdout.write(f"timing: {elapsed:.6f} s\n")
    return code


def main(argv=None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
