"""Build the order-72 brace from its spec file and verify everything about it.

Run:  python3 demos/build_and_verify.py
"""

from pathlib import Path

from bracekit import build_family, check_axioms, is_simple, list_ideals, load_spec, validate_spec

SPEC = Path(__file__).parent / "specs" / "cf72.json"


def main():
    spec = load_spec(SPEC)
    report = validate_spec(spec)
    print(f"spec: {SPEC.name}  kind={report.kind}  order={report.order}")
    for i, blk in enumerate(report.blocks):
        print(f"  block {i}: p={blk['p']} dim={blk['dim']} slots={blk['slots']} "
              f"map_order={blk['map_order']} minus_id_bijective={blk['minus_id_bijective']}")
    print(f"predicted simple: {report.predicted_simple}")

    B = build_family(spec)
    axioms = check_axioms(B, mode="exhaustive")
    print(f"\naxioms ({axioms.mode}): {'all pass' if axioms.ok else axioms.checks}")

    # two group structures on one carrier: indices behave differently under + and *
    x, y = B.element(24), B.element(1)
    print(f"\nsample arithmetic: 24 + 1 = {(x + y).index},  24 * 1 = {(x * y).index}, "
          f"lam_24(1) = {B.lam(24, 1)}")

    result = is_simple(B)
    print(f"\nsimple: {result.simple} ({result.closures_run} closures, every one reached the full carrier)")
    lattice = list_ideals(B)
    print(f"ideal lattice sizes: {[rec.size for rec in lattice]}")


if __name__ == "__main__":
    main()
