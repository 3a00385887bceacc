"""Residuals of the discrete symmetries at one random point."""

import numpy as np

from gl22r.suites import sample_point
from gl22r.symmetries import (statistics_flip_literal, verify_conjugation, verify_duality, verify_inversion,
                              verify_statistics_flip)


def main(seed: int = 3):
    gp, (k1, k2) = sample_point(np.random.default_rng(seed), 2)
    for fn in (verify_conjugation, verify_inversion, verify_statistics_flip, verify_duality):
        res = fn(gp, k1, k2)
        worst = max(res, key=res.get)
        print(f"{fn.__name__:24s} {len(res):3d} relations, worst {worst!r}: {res[worst]:.2e}")
    print("flip read without the pair sign:", statistics_flip_literal(gp, k1, k2))


if __name__ == "__main__":
    main()
