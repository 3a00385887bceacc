"""Build the r-matrix at a few points, print its coefficients and the CYBE residual."""

import numpy as np

from gl22r import coefficients, cybe_residual, derive_kinematics, make_global, r_fund_table, r_fund_universal
from gl22r.superlinalg import max_abs


def main():
    gp = make_global(0.35 + 0.05j, 1.2)
    xs = [2.1 + 0.3j, -1.7 + 2.2j, 0.4 - 3.1j]
    kins = [derive_kinematics(gp, x, 1.0) for x in xs]
    cs = coefficients(gp, kins[0], kins[1])
    for name, value in cs.as_dict().items():
        print(f"{name} = {value.real:+.6f} {value.imag:+.6f}i")
    print("linear identities   ", max(cs.linear_identities().values()))
    print("quadratic identities", max(cs.quadratic_identities().values()))
    table = r_fund_table(gp, kins[0], kins[1]).op.mat
    universal = r_fund_universal(gp, kins[0], kins[1]).op.mat
    print("table vs tensor form", max_abs(table - universal))
    print("CYBE residual       ", cybe_residual(gp, *kins))
    print("nonzero entries     ", int(np.count_nonzero(np.abs(table) > 1e-14)), "of 256")


if __name__ == "__main__":
    main()
