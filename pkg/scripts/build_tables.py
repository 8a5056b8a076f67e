"""Print the three rewriting systems and their audit summaries for some knots."""
import argparse

from dehnrewrite.knots import builtin
from dehnrewrite.pipeline import BuildConfig, build


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("knots", nargs="*", default=["figure8", "trefoil"])
    ap.add_argument("--keep-x0", action="store_true")
    ap.add_argument("--names", choices=("st", "x"), default="st")
    args = ap.parse_args()
    for name in args.knots:
        c = build(builtin(name), BuildConfig(keep_x0=args.keep_x0))
        roles = c.roles.role if args.names == "st" else None
        print(f"== {name}: sources {c.roles.sources()} sinks {c.roles.sinks()} t+ {sorted(c.t_plus)}")
        for stage in ("R", "Rp", "Rpp"):
            S = c.stage(stage)
            print(S.to_text(args.names))
            print(c.audit(stage).to_text(roles).splitlines()[0])
            print()


if __name__ == "__main__":
    main()
