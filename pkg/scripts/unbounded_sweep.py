"""Build R'' with every face as the unbounded region and report sizes, classes and audit results."""
import argparse
from collections import Counter

from dehnrewrite.diagram import faces
from dehnrewrite.knots import builtin
from dehnrewrite.pipeline import BuildConfig, build


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("knots", nargs="*", default=["trefoil", "figure8", "5_1", "5_2", "6_1", "6_2", "6_3"])
    args = ap.parse_args()
    for name in args.knots:
        d = builtin(name)
        for u in range(len(faces(d))):
            c = build(d, BuildConfig(unbounded=u))
            S = c.R_double_prime
            tally = Counter(r.cls for r in S.group_rules)
            rep = c.audits["R''"]
            cls = " ".join(f"{k}{tally[k]}" for k in "ABCD")
            print(f"{name:8} face {u}: {len(S.group_rules):3} rules  {cls}  "
                  f"audit {'ok' if rep.ok else 'FAIL'} ({len(rep.records)} pairs)")


if __name__ == "__main__":
    main()
