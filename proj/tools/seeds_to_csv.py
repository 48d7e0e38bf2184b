#!/usr/bin/env python3
"""Convert the UCI seeds_dataset.txt into data/seeds.csv.

The UCI file is whitespace separated with seven attributes and a numeric
class (1 = Kama, 2 = Rosa, 3 = Canadian). A few rows contain stray tabs,
so fields are split on any whitespace.

    python3 tools/seeds_to_csv.py seeds_dataset.txt data/seeds.csv
"""

import csv
import sys

HEADER = ["area", "perimeter", "compactness", "kernel_length", "kernel_width",
          "asymmetry", "groove_length", "label"]
LABELS = {"1": "Kama", "2": "Rosa", "3": "Canadian"}


def main(src, dst):
    rows = []
    with open(src) as f:
        for n, line in enumerate(f, 1):
            fields = line.split()
            if not fields:
                continue
            if len(fields) != 8 or fields[7] not in LABELS:
                sys.exit(f"{src}:{n}: expected 7 numbers and a class in 1..3")
            rows.append([float(x) for x in fields[:7]] + [LABELS[fields[7]]])
    with open(dst, "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(HEADER)
        out.writerows(rows)
    print(f"wrote {len(rows)} rows to {dst}")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
