#!/usr/bin/env python3
"""Stress the two relaxation constructions against each other.

For each seeded draw the vertex path and the disjunctive path are run on
the same (instance, body) pair and their canonical H-forms are compared
syntactically. Any mismatch dumps a reproducer and exits nonzero.
"""

import argparse
import json
import random
import sys

from splitpoly import (
    DEFAULT_SEED,
    EmptyPolyhedron,
    is_trivial,
    random_instance,
    random_slab,
    relax_balas,
    relax_vertices,
    vrep_to_hrep,
)
from splitpoly.io import body_to_json, instance_to_json


def compare_once(body, p):
    """True when both constructions give the same canonical H-form."""
    balas = relax_balas(body, p)
    try:
        vertex_form = vrep_to_hrep(relax_vertices(body, p))
    except EmptyPolyhedron:
        return balas.is_empty_marker
    return vertex_form == balas


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--count", type=int, default=100)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    nontrivial = 0
    for index in range(args.count):
        p = random_instance(rng)
        through = rng.choice(p.vertices) if rng.randint(0, 1) else None
        body = random_slab(rng, p.dim, p.integer_vars, through=through)
        if not is_trivial(body, p):
            nontrivial += 1
        if not compare_once(body, p):
            print(f"mismatch at draw {index}", file=sys.stderr)
            reproducer = {
                "seed": args.seed,
                "draw": index,
                "instance": instance_to_json(p),
                "body": body_to_json(body),
            }
            print(json.dumps(reproducer, indent=2), file=sys.stderr)
            return 1
    print(
        f"agreed on {args.count} draws (seed {args.seed}, "
        f"{nontrivial} with a vertex strictly inside the body)"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
