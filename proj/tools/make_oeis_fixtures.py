#!/usr/bin/env python3
# Copyright 2026 The qeuler Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes b-file fixtures for A101280 and A008971 by brute-force enumeration.

The values come from the combinatorial definitions of the two sequences, not
from the triangle recurrences in the library, so the fixtures are an
independent check of them:

  A101280  T(n,k), k = 1..ceil(n/2): permutations of [n] with k-1 descents
           and no double descent, reading pi(0) = pi(n+1) = infinity.
  A008971  T(n,k), k = 0..floor(n/2): permutations of [n] with k maximal
           increasing runs of length >= 2; row 0 is "1".

Official b-files from oeis.org use the same two-column format and can be
dropped in place of these (only the leading terms are compared).
"""

import argparse
import itertools
import pathlib


def peak_free_descents(n):
    counts = [0] * ((n + 1) // 2)
    for p in itertools.permutations(range(1, n + 1)):
        w = (n + 1,) + p + (n + 1,)
        if any(w[i - 1] > w[i] > w[i + 1] for i in range(1, n + 1)):
            continue
        counts[sum(1 for i in range(1, n) if p[i - 1] > p[i])] += 1
    return counts


def long_runs(n):
    counts = [0] * (n // 2 + 1)
    for p in itertools.permutations(range(1, n + 1)):
        runs, length = 0, 1
        for i in range(1, n):
            if p[i] > p[i - 1]:
                length += 1
            else:
                runs += length >= 2
                length = 1
        runs += length >= 2
        counts[runs] += 1
    return counts


def write_bfile(path, name, definition, rows, first_index):
    lines = [f"# {name}: {definition}",
             "# Generated by tools/make_oeis_fixtures.py (permutation enumeration)."]
    index = first_index
    for row in rows:
        for value in row:
            lines.append(f"{index} {value}")
            index += 1
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    write_bfile(args.out / "b101280.txt", "A101280",
                "gamma coefficients of the Eulerian polynomials, rows n >= 1",
                [peak_free_descents(n) for n in range(1, args.max_n + 1)], 1)
    write_bfile(args.out / "b008971.txt", "A008971",
                "permutations of [n] by increasing runs of length >= 2, rows n >= 0",
                [[1]] + [long_runs(n) for n in range(1, args.max_n + 1)], 0)


if __name__ == "__main__":
    main()
