"""Walk through the 3x3 worked matrix A: decomposition, representatives, conditioning."""

import argparse

from lexpolar import (
    EventSubset,
    Gamble,
    RMatrix,
    condition_orthogonal,
    condition_stochastic,
    equiv_class_test,
    lp_decompose,
    orthogonal_from_stochastic,
    stochastic_from_orthogonal,
    maximal_desirable_member,
)

A = RMatrix([[0, 1, 1], [0, -1, 1], [1, 0, 0]])


def show(label, M):
    print(f"{label}:")
    for r in M.rows:
        print("   ", "  ".join(f"{str(x):>6}" for x in r))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--shifts", type=int, default=4, help="number of integer shifts to list")
    args = ap.parse_args()

    show("A", A)
    for k in range(args.shifts):
        d = lp_decompose(A, shift=k)
        assert d.product() == A
        P = stochastic_from_orthogonal(A, shift=k)
        show(f"shift {k}: stochastic representative", P)
        assert equiv_class_test(P, A)
        assert orthogonal_from_stochastic(P) == A

    Pi = EventSubset(3, [2, 3])
    P = stochastic_from_orthogonal(A)
    show("P conditioned on {2,3}", condition_stochastic(P, Pi))
    show("A conditioned on {2,3}", condition_orthogonal(A, Pi))

    for g in (Gamble([0, 1, -1]), Gamble([0, -1, 1]), Gamble([1, -5, -5])):
        side = "inside" if maximal_desirable_member(A, g) else "outside"
        print(f"g = ({', '.join(map(str, g))}): {side} the semispace of A")


if __name__ == "__main__":
    main()
