#!/usr/bin/env python3
"""Reproduce the headline numbers for every shipped worked example.

Walks problems/*.json, computes the quantities each example is known for,
and prints a compact summary.  Everything here goes through the public API,
so this doubles as an end-to-end smoke run:

    python scripts/run_worked_examples.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from mreg import (
    betti_table,
    b_regularity_region,
    cached_minimal_resolution,
    coarsen_resolution,
    connections_check,
    find_positive_coarsening_vector,
    load_problem,
    minimal_coarsening_set,
    regnum_module,
    regnum_ring,
    res_reg_vector_points,
    vreg_membership,
)

PROBLEMS = pathlib.Path(__file__).resolve().parents[1] / "problems"


def banner(name):
    print(f"\n=== {name} " + "=" * max(0, 60 - len(name)))


def main():
    # weighted ring: closed form and the membership gap around it
    prob = load_problem(PROBLEMS / "weighted-44.json")
    banner("weighted-44")
    ring, P = prob.ring, prob.presentation()
    print("regnum_ring      =", regnum_ring(ring, (1,)))
    for p in (-5, -4, -3):
        print(f"membership {p:+d}    =", vreg_membership(P, (1,), p))

    prob = load_problem(PROBLEMS / "four-cycle.json")
    banner("four-cycle")
    P = prob.presentation()
    for v in ((1, 1), (2, 3), (3, 5)):
        print(f"regnum under {v} =", regnum_module(P, v))
    print("minimal family   =", minimal_coarsening_set(P, box=4, i_range=(0, 1, 2)))

    prob = load_problem(PROBLEMS / "hirzebruch-s2.json")
    banner("hirzebruch-s2")
    ring, P = prob.ring, prob.presentation()
    v = find_positive_coarsening_vector(ring.degrees)
    print("suggested v      =", v)
    print("regnum_ring      =", regnum_ring(ring, v))
    print("regnum module    =", regnum_module(P, v))

    for name in ("ex1-four-points.json", "eight-points.json"):
        prob = load_problem(PROBLEMS / name)
        banner(name.removesuffix(".json"))
        X, ring = prob.payload, prob.ring
        P = prob.presentation()
        F = cached_minimal_resolution(P)
        coarse = betti_table(coarsen_resolution(F, (1, 1)))
        print("coarse Betti     =", coarse.positions())
        print("regnum (1,1)     =", regnum_module(P, (1, 1)))
        print("reg_B minimal    =", b_regularity_region(X, (10, 10), ring).bases)
        print("r-vector         =", res_reg_vector_points(X, ring))
        print("connections ok   =", connections_check(X, (10, 10), ring).holds)


if __name__ == "__main__":
    main()
