#!/usr/bin/env python3
"""Star-factor counts and weight spectra of cycles, as a markdown table."""

import sys

from starfactor.classifier import classify
from starfactor.graph import cycle_graph
from starfactor.uniformity import is_uniform


def main(n_max=16):
    print("| n | factors | spectrum | uniform | method |")
    print("|---|---|---|---|---|")
    for n in range(3, n_max + 1):
        g = cycle_graph(n)
        report = is_uniform(g, full=True)
        verdict = classify(g)
        print(
            f"| {n} | {report.factor_count} | {report.spectrum} | "
            f"{'yes' if report.uniform else 'no'} | {verdict.method.value} |"
        )


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 16)
