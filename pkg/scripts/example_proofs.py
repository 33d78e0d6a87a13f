#!/usr/bin/env python3
"""Reproduce the closure proofs for the hard instance family.

For each p the LP relaxation of the p-variable instance leaves a gap of
p/(p+1) on max y, and the single simplex body of facet width p closes the
gap in one round. For p = 2 the script also shows the opposite side: every
nontrivial split with coefficients up to 2 has facet width 1, three rounds
of all of them together leave the gap open, and the width-size bound of
the missing inequality jumps from infinity to 2 once the simplex body
joins the candidate pool.
"""

import argparse
import sys
import time

from splitpoly import (
    Fraction,
    enumerate_split_sets,
    example_milp,
    is_inf,
    iterated_closure,
    make_body_family,
    max_facet_width,
    prove_inequality,
    width_size_of_inequality,
)
from splitpoly.exactlp import lp_solve
from splitpoly.rationals import format_rat, format_vec, zero_vec


def lp_gap(ex) -> tuple:
    """Optimum and maximizer of max y over the LP relaxation."""
    objective = list(zero_vec(ex.hrep.dim))
    objective[ex.hrep.dim - 1] = Fraction(1)
    outcome = lp_solve(tuple(objective), ex.hrep.ineqs, ex.hrep.eqs, sense="max")
    assert outcome.is_optimal
    return outcome.value, outcome.point


def one_round_proof(p: int) -> None:
    ex = example_milp(p)
    optimum, point = lp_gap(ex)
    width = max_facet_width(ex.body)
    family = make_body_family((ex.body,), f"simplex body, width {format_rat(width)}")
    trace = prove_inequality(ex.instance, family, ex.target_cut, max_rounds=1)
    optima = [format_rat(r.optimum) for r in trace.rounds]
    violated = sum(1 for f in trace.violated_faces if f.kind == "violated")
    print(
        f"p={p}: lp max y = {format_rat(optimum)} at {format_vec(point)}; "
        f"w_f = {format_rat(width)}; one round -> optima {optima}, "
        f"proved={trace.proved}, violated faces {violated}, "
        f"width size over the proving family {format_rat(trace.width_size_bound)}"
    )
    if not trace.proved:
        raise SystemExit(f"p={p}: the width-{p} body failed to prove the cut")


def width_one_stall(rounds: int) -> None:
    ex = example_milp(2)
    splits = enumerate_split_sets(
        ex.instance.dim, ex.instance.integer_vars, coeff_bound=2, p=ex.instance
    )
    widths = {format_rat(max_facet_width(b)) for b in splits.bodies}
    print(
        f"p=2 stall: {len(splits.bodies)} nontrivial splits with "
        f"coefficients up to 2, facet widths {sorted(widths)}"
    )
    trace = iterated_closure(ex.instance, splits, ex.target_cut, max_rounds=rounds)
    optima = [format_rat(r.optimum) for r in trace.rounds]
    print(
        f"p=2 stall: optima per round {optima}, proved={trace.proved} "
        f"after {trace.rounds_used} rounds"
    )
    if trace.proved:
        raise SystemExit("width-1 splits were expected to leave the gap open")

    narrow = width_size_of_inequality(ex.instance, ex.target_cut, splits)
    mixed = width_size_of_inequality(
        ex.instance,
        ex.target_cut,
        make_body_family(splits.bodies + (ex.body,), "splits plus the simplex body"),
    )
    print(
        f"p=2 width size: splits alone -> {format_rat(narrow.value)}, "
        f"with the simplex body -> {format_rat(mixed.value)}"
    )
    if not is_inf(narrow.value) or mixed.value != 2:
        raise SystemExit("width size bounds came out wrong")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-p", type=int, default=4)
    parser.add_argument("--stall-rounds", type=int, default=3)
    args = parser.parse_args(argv)

    start = time.perf_counter()
    for p in range(1, args.max_p + 1):
        one_round_proof(p)
    width_one_stall(args.stall_rounds)
    print(f"done in {time.perf_counter() - start:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
