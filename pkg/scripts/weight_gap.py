#!/usr/bin/env python3
"""Weight spectra of the triangle-plus-quadrangles family and the solver's verdict on each."""

import sys

from starfactor.graph import to_graph6, triangle_with_quadrangles
from starfactor.uniformity import Weighting, weight_spectrum
from starfactor.weighting import solve_uniform_weighting


def main(k_max=7):
    for k in range(3, k_max + 1):
        g = triangle_with_quadrangles(k)
        spectrum = weight_spectrum(g, Weighting.constant(g))
        sol = solve_uniform_weighting(g)
        print(
            f"k={k} n={g.n} graph6={to_graph6(g)} spectrum={spectrum} "
            f"expected_extremes={[k, 2 * k - 3]} weighting={sol.status} weights={sol.weights}"
        )


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
