"""How the field characteristic changes the Nash iteration.

The logarithmic Jacobian ideal keeps a d-subset of generators only when the
determinant of their exponents is nonzero in the base field, so in
characteristic p entire terms can vanish and the blowup charts change.  Two
experiments:

* the seven-generator self-replicating semigroup of demo 04, which cycles
  in characteristic 0 — does it also cycle mod p?
* the Reeve cones, smooth resolutions in characteristic 0 for small q —
  do they stay resolvable mod p?

Verdicts here are exploratory output, not regression assertions: the runs
are depth-capped, so "Inconclusive" means only that nothing was found
within the cap.
"""
from nashlab import RunConfig, counterexample_x, reeve, run

PRIMES = (2, 3, 5, 7)


def survey(label, semigroup, max_depth):
    print(label)
    for ch in (0,) + PRIMES:
        cfg = RunConfig(characteristic=ch, max_depth=max_depth, max_nodes=200)
        tree = run(semigroup, cfg)
        stats = tree.stats()
        print(
            f"  char {ch}: {tree.verdict_summary.ljust(19)} "
            f"nodes={stats['node_count']:<4d} depth={stats['depth_reached']}"
        )
    print()


survey("self-replicating semigroup in C^7 (depth <= 2):",
       counterexample_x(), max_depth=2)
for q in (2, 3, 4):
    survey(f"reeve({q}) (depth <= 3):", reeve(q), max_depth=3)
