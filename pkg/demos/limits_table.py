"""Convergence of the rescaled r-matrix to each closed-form limit."""

from gl22r.limits import FAMILIES, convergence_check, degeneration_graph


def main():
    eps = (1e-2, 1e-3, 1e-4)
    print(f"{'family':28s}" + "".join(f"{e:>12.0e}" for e in eps) + f"{'order':>8s}")
    for name in FAMILIES:
        rep = convergence_check(name, eps)
        print(f"{name:28s}" + "".join(f"{err:12.3e}" for err in rep.errors) + f"{rep.order:8.3f}")
    g = degeneration_graph()
    print("\ncovering arrows of the degeneration graph:")
    for a, b in sorted(g.covering):
        print(f"  {a:9s} -> {b}")


if __name__ == "__main__":
    main()
