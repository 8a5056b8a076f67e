"""Normalize random words and tally steps per rule class, checking every step against the V deltas."""
import argparse
import random
import time
from collections import Counter

from dehnrewrite.engine import normal_form, step_deltas
from dehnrewrite.knots import builtin
from dehnrewrite.pipeline import BuildConfig, build
from dehnrewrite.sampling import alphabet, random_word


def sweep(name, n, max_len, seed):
    S = build(builtin(name), BuildConfig(audit=False)).R_double_prime
    rng = random.Random(seed)
    letters = alphabet(S)
    steps, bad = Counter(), 0
    longest = 0
    t0 = time.perf_counter()
    for _ in range(n):
        trace = []
        normal_form(random_word(letters, rng, max_len), S, trace=trace)
        longest = max(longest, len(trace))
        for w, pos, rule in trace:
            rec = step_deltas(w, pos, rule, S)
            steps[rec["class"]] += 1
            bad += not rec["ok"]
    return steps, bad, longest, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("knots", nargs="*", default=["trefoil", "figure8", "5_1", "5_2", "6_1", "6_2", "6_3"])
    ap.add_argument("-n", type=int, default=2000)
    ap.add_argument("--max-len", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'knot':8} {'words':>6} {'steps':>8} {'max':>5} {'bad':>4} {'sec':>6}  per class")
    for name in args.knots:
        steps, bad, longest, dt = sweep(name, args.n, args.max_len, args.seed)
        per = " ".join(f"{k}={v}" for k, v in sorted(steps.items()))
        print(f"{name:8} {args.n:6} {sum(steps.values()):8} {longest:5} {bad:4} {dt:6.2f}  {per}")


if __name__ == "__main__":
    main()
