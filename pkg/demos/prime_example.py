"""A brace that is prime but not simple.

The carrier is a semidirect-style product of an order-18432 simple brace A
with a cyclic group of order 5 acting by rotating the five slots of the first
block.  The copy of A inside is a proper nonzero ideal, so the product is not
simple; but A * A = A rather than 0, and every ideal in sight contains it, so
no product of nonzero ideals can vanish.  Primeness without simplicity.

This script uses a light sample count so it finishes in well under a minute;
the CLI's prime-example subcommand runs the full version.

Run:  python3 demos/prime_example.py
"""

import numpy as np

from bracekit import build_prime_example, ideal_closure, is_ideal, star_span


def main():
    B = build_prime_example()
    print(f"order: {B.order} = {B.A.order} x {B.B.order}")

    inner = np.arange(B.A.order, dtype=np.int64)
    print(f"inner copy of A: size {inner.size}, is_ideal = {is_ideal(B, inner)}")

    star = star_span(B, inner, inner)
    print(f"A * A: size {star.size} "
          f"({'equals A' if np.array_equal(star, inner) else 'differs from A'})")

    rng = np.random.default_rng(0)
    for label, pool, expect in (
        ("inside A", inner[1:], inner.size),
        ("outside A", np.arange(B.A.order, B.order), B.order),
    ):
        sizes = {
            ideal_closure(B, [int(s)]).size
            for s in rng.choice(pool, size=10, replace=False)
        }
        print(f"closures of 10 random seeds {label}: sizes {sorted(sizes)} "
              f"(expected {{{expect}}})")

    print("\nconclusion: a proper nonzero ideal exists (not simple), yet its")
    print("star square is itself, so the product of nonzero ideals never dies")


if __name__ == "__main__":
    main()
