"""From prime pairs to concrete block data.

Given a cycle of primes, each position needs an orthogonal map whose order is
the previous prime and whose f - id is bijective.  The minimal dimension
carrying such a map is computable, and the witness search produces explicit
matrices ready to paste into a spec file.

Run:  python3 demos/bounds_and_witnesses.py
"""

import json

from bracekit import (
    exponent_lower_bounds,
    find_orthogonal_element,
    minimal_witness_dimension,
    orthogonal_group_order,
    solve_exponents,
    witness_block,
)
from bracekit.errors import NoWitnessError


def main():
    report = exponent_lower_bounds((3, 7))
    print("prime cycle (3, 7):")
    print(f"  unit orders k = {report.k}")
    print(f"  minimal block dimensions = {report.minimal_dim}")
    print(f"  exponent thresholds l = {report.l}")
    print(f"  (for scale: |GO_7(3)| = {orthogonal_group_order('GO_odd', 3, 3)})")

    print("\nminimal witnesses:")
    for p, p1 in [(2, 3), (7, 3), (3, 7)]:
        dim = minimal_witness_dimension(p, p1)
        w = find_orthogonal_element(p, p1, dim)
        print(f"  ({p}, {p1}): dim {dim}, f = {w.matrix.tolist()}")

    print("\nbelow the minimum there is provably nothing:")
    try:
        find_orthogonal_element(2, 3, 1)
    except NoWitnessError as exc:
        print(f"  (2, 3, 1): {exc}")

    # the smallest two-block pattern over (3, 7): one slot per block
    dims = tuple(minimal_witness_dimension(p, q) for p, q in [(3, 7), (7, 3)])
    m, r = solve_exponents(dims, (7, 3))
    print(f"\nsolve_exponents(dims={dims}, exponents=(7, 3)) -> m={m}, r={r}")

    block = witness_block(find_orthogonal_element(7, 3, 2))
    print("\nspec-ready block for the second position:")
    print(json.dumps(block, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
