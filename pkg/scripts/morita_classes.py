#!/usr/bin/env python3
"""Tabulate the graded Morita equivalence classes at each rank.

For every rank n the classes are the binary necklaces of length n; each class
is realized by the idealizer ring S(J, n) of its minimal representative.
"""
import argparse

from weylgraded import necklace_count, necklace_enumerate, present


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        classes = necklace_enumerate(n)
        assert len(classes) == necklace_count(n)
        print(f"rank {n}: {len(classes)} classes")
        for cls in classes:
            pair = cls.representative
            p = present(pair.J, n)
            tags = []
            if p.idealizer_factor.is_one():
                tags.append("full GWA")
            if not pair.J:
                tags.append("Veronese of A" if n > 1 else "A itself")
            suffix = f"   [{', '.join(tags)}]" if tags else ""
            print(f"  S({pair.J}, {n}):  f = {p.f},  idealizer factor = {p.idealizer_factor}{suffix}")
        print()


if __name__ == "__main__":
    main()
