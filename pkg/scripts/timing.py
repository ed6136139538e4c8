"""Time the series pipeline over a grid of fixed-state vectors."""

import argparse
import itertools
import time

from equivhilb.automaton import build_automaton, minimize
from equivhilb.transfer import equiv_hilbert


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--cmax", type=int, default=2)
    args = ap.parse_args()

    print(f"{'cprime':<12}{'states':>8}{'minimal':>9}{'terms':>8}{'seconds':>10}")
    for q in args.q:
        for c in itertools.combinations_with_replacement(range(1, args.cmax + 1), q):
            dfa = build_automaton(q, c)
            t0 = time.perf_counter()
            H = equiv_hilbert(c)
            dt = time.perf_counter() - t0
            print(f"{str(c):<12}{len(dfa.states):>8}{len(minimize(dfa).states):>9}{len(H.den):>8}{dt:>10.3f}")


if __name__ == "__main__":
    main()
