"""Command-line interface.

Every command reads one input document (see :mod:`quiverwalls.serialize`)
and writes JSON or tab-delimited text. Exit codes: 0 success, 2 invalid
input, 3 precondition failure, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import __version__
from .errors import InvariantError, PreconditionError
from .gitfan import git_equivalent, git_fan, has_geometric_phase, locate
from .quiver import Quiver, sub
from .schofield import generic_subdims
from .serialize import (
    InputError,
    cone_to_json,
    dumps,
    fan_to_json,
    parse_input,
    parse_rational_vector,
    rational_vector,
)
from .special import special_subdims
from .walls import all_walls, has_strictly_semistables, sst_cone

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4

COMMANDS = (
    "generic-subdims",
    "sst-cone",
    "walls",
    "fan",
    "f-vector",
    "equivalent",
    "phase",
    "special-subdims",
    "strictly-semistable",
    "locate",
    "plot",
)


def _tsv(rows) -> str:
    return "".join("\t".join(str(x) for x in row) + "\n" for row in rows)


def _cone_text(c: dict[str, Any]) -> str:
    rows = [("dim", c["dim"])]
    for key, tag in (("equalities", "eq"), ("inequalities", "ineq"), ("rays", "ray"), ("lineality", "lin")):
        rows += [(tag, *v) for v in c[key]]
    return _tsv(rows)


def _need(args, name: str, n: int):
    text = getattr(args, name)
    if text is None:
        raise InputError(name, f"--{name} is required for {args.command}")
    return parse_rational_vector(text, n, name)


def _run(args, q: Quiver, d) -> tuple[Any, str]:
    """Return ``(json_object, text)`` for the selected command."""
    cmd = args.command
    if cmd == "generic-subdims":
        gen = generic_subdims(q, d)
        return {"d": list(d), "generic_subdims": [list(e) for e in gen]}, _tsv(gen)
    if cmd == "sst-cone":
        c = cone_to_json(sst_cone(q, d))
        return c, _cone_text(c)
    if cmd == "walls":
        entries = []
        rows = []
        for e, w in all_walls(q, d):
            entries.append({"e": list(e), "complement": list(sub(d, e)), "cone": cone_to_json(w)})
            rows.append((",".join(map(str, e)), ",".join(map(str, sub(d, e))), w.dim))
        return {"d": list(d), "walls": entries}, _tsv(rows)
    if cmd == "fan":
        fan = git_fan(q, d)
        doc = fan_to_json(fan)
        rows = [("ray", i, *v) for i, v in enumerate(doc["rays"])]
        rows += [("lineality", *v) for v in doc["lineality"]]
        rows += [("cone", c["dim"], ",".join(map(str, c["ray_indices"]))) for c in doc["cones"]]
        rows.append(("f_vector", *doc["f_vector"]))
        return doc, _tsv(rows)
    if cmd == "f-vector":
        f = list(git_fan(q, d).f_vector)
        return {"f_vector": f}, _tsv([f])
    if cmd == "equivalent":
        theta, eta = _need(args, "theta", q.n), _need(args, "eta", q.n)
        ok = git_equivalent(q, d, theta, eta)
        return {"equivalent": ok}, f"{str(ok).lower()}\n"
    if cmd == "phase":
        ok = has_geometric_phase(q, d)
        return {"geometric_phase": ok}, f"{str(ok).lower()}\n"
    if cmd == "special-subdims":
        sp = special_subdims(q, d)
        return {"d": list(d), "special_subdims": [list(e) for e in sp]}, _tsv(sp)
    if cmd == "strictly-semistable":
        theta = _need(args, "theta", q.n)
        hit = has_strictly_semistables(q, d, theta)
        walls = [list(e) for e in all_walls(q, d).containing(theta)]
        doc = {"theta": rational_vector(theta), "strictly_semistable": hit, "walls": walls}
        return doc, f"{str(hit).lower()}\n" + _tsv(walls)
    if cmd == "locate":
        theta = _need(args, "theta", q.n)
        fan = git_fan(q, d)
        i = locate(fan, theta)
        cone = fan.cones[i]
        doc = {"theta": rational_vector(theta), "index": i, "dim": cone.dim, "ray_indices": list(cone.rays)}
        return doc, _tsv([(i, cone.dim, ",".join(map(str, cone.rays)))])
    if cmd == "plot":
        from .plotting import plot_2d, wall_diagram

        if not 1 <= args.project <= q.n:
            raise InputError("project", f"vertex {args.project} out of range 1..{q.n}")
        diag = wall_diagram(q, d, args.project - 1)
        args._svg = plot_2d(q, d, args.project - 1)
        doc = {
            "project_vertex": args.project,
            "axes": [a + 1 for a in diag.axes],
            "sigma_rays": [list(v) for v in diag.sigma_rays],
            "sigma_lineality": [list(v) for v in diag.sigma_lineality],
            "hyperplanes": [list(v) for v in diag.hyperplanes],
            "wall_rays": [list(v) for v in diag.wall_rays],
        }
        rows = [("sigma_ray", *v) for v in diag.sigma_rays]
        rows += [("sigma_lineality", *v) for v in diag.sigma_lineality]
        rows += [("hyperplane", *v) for v in diag.hyperplanes]
        rows += [("wall_ray", *v) for v in diag.wall_rays]
        return doc, _tsv(rows)
    raise AssertionError(cmd)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quiverwalls",
        description="Walls, semistable cones and GIT fans of quiver representations.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", default="-", help="input JSON file (default: stdin)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--theta", help="stability parameter as comma-separated rationals")
    p.add_argument("--eta", help="second stability parameter for 'equivalent'")
    p.add_argument("--project", type=int, default=1, help="1-based vertex eliminated by 'plot' (default 1)")
    p.add_argument(
        "--output",
        help="write the result here; for 'plot' this receives the SVG and the wall data goes to stdout",
    )
    return p


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("input", f"cannot read {path}: {exc.strerror}") from None


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--eta -1,1,0" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--theta", "--eta") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        q, d = parse_input(_read(args.input))
        doc, text = _run(args, q, d)
    except InputError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT

    out = dumps(doc) if args.format == "json" else text
    svg = getattr(args, "_svg", None)
    if svg is not None:
        if args.output:
            with open(args.output, "wb") as fh:
                fh.write(svg)
            sys.stdout.write(out)
        else:
            sys.stdout.buffer.write(svg)
        return EXIT_OK
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
