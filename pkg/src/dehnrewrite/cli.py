"""Command-line front end: ``dehnrewrite <command> [options]``.

Exit codes: 0 ok, 2 diagram validation failure, 3 audit failure (or an
unaudited system where completeness is required), 4 monitor violation,
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import derived_graph as dg
from .diagram import DiagramError, validate
from .engine import IncompleteSystem, MonitorViolation, FuseBlown, normal_form, word_equal
from .knots import load
from .pipeline import BuildConfig, build
from .rules import ConstructionError
from .presentation import PresentationError, parse_word, phi, render

EXIT_OK, EXIT_INVALID, EXIT_AUDIT, EXIT_MONITOR, EXIT_USAGE = 0, 2, 3, 4, 64

COMMANDS = ("validate", "present", "rules", "normalize", "equal", "audit", "emit-dot")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dehnrewrite", description="Complete rewriting systems for alternating knot groups.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--knot", help="built-in knot name (trefoil, figure8, 5_2, ...)")
    src.add_argument("--pd", help="inline PD code, e.g. 'X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]'")
    src.add_argument("--file", help="PD or JSON diagram file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--stage", choices=("R", "Rp", "Rpp"), default="Rpp")
    p.add_argument("--names", choices=("st", "x"), default="st", help="print letters as s/t or x")
    p.add_argument("--keep-x0", action="store_true", help="keep the x0 free-reduction rules in R' and R''")
    p.add_argument("--monitor", choices=("on", "off"), default=None, help="order-vector monitor (default: on for Rpp)")
    p.add_argument("--unbounded", type=int, default=None, help="face index to use as the unbounded region")
    p.add_argument("--second-antipath", action="store_true", help="seed x0 as a sink (stage R only)")
    p.add_argument("--emit-dot", metavar="PATH", help="also write the derived graph as DOT to PATH")
    p.add_argument("--word", help="word, e.g. \"t2 s4'\" or \"x3' x2' x1'\"")
    p.add_argument("--word2", help="second word for 'equal'")
    return p


def _diagram(args):
    return load(args.knot or args.pd or args.file)


def _word(text, c, S):
    if text is None:
        raise UsageError("this command needs --word")
    w = parse_word(text, c.roles.role)
    if S.killed is not None:
        w = phi(w, S.killed)
    return w


def _emit(out, obj, fmt, text):
    out.write((json.dumps(obj, indent=1) if fmt == "json" else text) + "\n")


def _run(args, out) -> int:
    d = _diagram(args)
    if args.unbounded is not None:
        d = d.with_unbounded(args.unbounded)

    if args.command == "validate":
        rep = validate(d)
        text = "\n".join(
            f"{'ok  ' if v else 'FAIL'} {k}" + (f": {rep.messages[k]}" if rep.messages[k] else "")
            for k, v in rep.checks.items()
        )
        _emit(out, rep.as_dict(), args.format, text)
        return EXIT_OK if rep.ok else EXIT_INVALID

    if args.second_antipath and args.stage != "R":
        raise UsageError("--second-antipath is only supported with --stage R")
    need_audit = args.command in ("audit", "equal")
    c = build(d, BuildConfig(keep_x0=args.keep_x0, second_antipath=args.second_antipath, audit=need_audit))
    roles = c.roles.role
    names = roles if args.names == "st" else None
    monitor = None if args.monitor is None else args.monitor == "on"

    if args.emit_dot:
        with open(args.emit_dot, "w") as fh:
            fh.write(dg.emit_dot(c.delta, c.roles) + "\n")

    if args.command == "emit-dot":
        out.write(dg.emit_dot(c.delta, c.roles) + "\n")
        return EXIT_OK

    if args.command == "present":
        rels = [render(r.word, names) for r in c.presentation.relators]
        obj = {
            "regions": [{"id": r.id, "boundary": [list(b) for b in r.boundary]} for r in c.regions],
            "generators": list(c.presentation.generators),
            "relators": rels,
            "sources": c.roles.sources(),
            "sinks": c.roles.sinks(),
            "t_plus": sorted(c.t_plus),
        }
        lines = [f"# {len(c.regions)} regions, {len(rels)} relators"]
        lines += [f"crossing {r.crossing}: {s}" for r, s in zip(c.presentation.relators, rels)]
        lines.append(f"sources {obj['sources']}  sinks {obj['sinks']}  t+ {obj['t_plus']}")
        _emit(out, obj, args.format, "\n".join(lines))
        return EXIT_OK

    S = c.stage(args.stage)

    if args.command == "rules":
        out.write((S.to_json(args.names) if args.format == "json" else S.to_text(args.names)) + "\n")
        return EXIT_OK

    if args.command == "audit":
        rep = c.audit(args.stage)
        out.write((rep.to_json(names) if args.format == "json" else rep.to_text(names)) + "\n")
        return EXIT_OK if rep.ok else EXIT_AUDIT

    if args.command == "normalize":
        w = _word(args.word, c, S)
        nf = normal_form(w, S, monitor=monitor)
        _emit(out, {"word": render(w, names), "normal_form": render(nf, names)}, args.format, render(nf, names))
        return EXIT_OK

    if args.command == "equal":
        w1, w2 = _word(args.word, c, S), _word(args.word2, c, S)
        same = word_equal(w1, w2, S)
        _emit(out, {"equal": same}, args.format, "equal" if same else "different")
        return EXIT_OK
    raise UsageError(f"unknown command {args.command}")  # pragma: no cover


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (DiagramError, dg.RoleConflict) as exc:
        err.write(f"invalid diagram: {exc}\n")
        return EXIT_INVALID
    except PresentationError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (IncompleteSystem, ConstructionError) as exc:
        err.write(f"{exc}\n")
        return EXIT_AUDIT
    except (MonitorViolation, FuseBlown) as exc:
        err.write(f"monitor: {exc}\n")
        return EXIT_MONITOR
    except ValueError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())
