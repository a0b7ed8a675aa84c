#!/usr/bin/env python3
"""Print the graded pieces of S(J, n) computed two independent ways.

The closed form expands f_J (fbar y^{-n})^j in the skew field; the oracle
rebuilds each piece from involution lattices via the twisted endomorphism
construction.  Any disagreement would be a bug, so the script fails loudly.
"""
import argparse
import sys

from weylgraded import FinSet, graded_piece_closed_form, twisted_endo_piece_oracle


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--J", default="", help="comma-separated residues, e.g. 0,2")
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--min", dest="j_min", type=int, default=-3)
    parser.add_argument("--max", dest="j_max", type=int, default=3)
    args = parser.parse_args()

    J = FinSet(int(t) for t in args.J.split(",") if t.strip())
    print(f"graded pieces of S({J}, {args.n}), degrees {args.j_min}..{args.j_max}")
    print(f"{'j':>4}  {'closed form':<34} {'lattice oracle':<34}")
    mismatches = 0
    for j in range(args.j_min, args.j_max + 1):
        closed = graded_piece_closed_form(J, args.n, j)
        oracle = twisted_endo_piece_oracle(J, args.n, j)

        def fmt(piece):
            h, p = piece
            ypow = "" if p == 0 else (" y" if p == 1 else f" y^{p}")
            head = "" if h.is_one() else f"({h})"
            return f"{head}{ypow} k[z]".strip()

        mark = "" if closed == oracle else "   <-- MISMATCH"
        if closed != oracle:
            mismatches += 1
        print(f"{j:>4}  {fmt(closed):<34} {fmt(oracle):<34}{mark}")
    if mismatches:
        sys.exit(f"{mismatches} piece(s) disagree")


if __name__ == "__main__":
    main()
