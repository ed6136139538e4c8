"""Write DOT files for the automaton of a given c-vector: the full
construction, its minimal automaton, and the minimization that keeps
zeta-entered states apart."""

import argparse
from pathlib import Path

from equivhilb.automaton import build_automaton, entered_by_zeta, minimize, to_dot


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("c", nargs="+", type=int, help="fixed-state counts, one per facet")
    ap.add_argument("--out", type=Path, default=Path("automata"))
    args = ap.parse_args()

    q = len(args.c)
    tag = "c" + "-".join(map(str, args.c))
    full = build_automaton(q, args.c)
    variants = {
        "full": full,
        "minimal": minimize(full),
        "zeta_labelled": minimize(full, labels=entered_by_zeta),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    for name, dfa in variants.items():
        path = args.out / f"{tag}_{name}.dot"
        path.write_text(to_dot(dfa, name=f"{tag}_{name}"))
        print(f"{path}: {len(dfa.states)} states, {len(dfa.delta)} transitions")


if __name__ == "__main__":
    main()
