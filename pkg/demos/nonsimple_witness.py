"""What breaks when one block map has f - id singular.

The order-216 spec differs from the simple order-72 one in a single block:
its second map is diag(2, 1), which fixes the second basis vector, so f - id
kills it.  The elements whose slot vectors stay inside Im(f - id) then form a
proper ideal, and simplicity fails exactly there.

Run:  python3 demos/nonsimple_witness.py
"""

from pathlib import Path

from bracekit import build_family, ideal_closure, is_ideal, is_simple, load_spec, nonsimple_witness, validate_spec

SPEC = Path(__file__).parent / "specs" / "ns216.json"


def main():
    spec = load_spec(SPEC)
    report = validate_spec(spec)
    print(f"order {report.order}; per-block f - id bijective: "
          f"{[blk['minus_id_bijective'] for blk in report.blocks]}")
    print(f"predicted simple: {report.predicted_simple}")

    B = build_family(spec)
    witness = nonsimple_witness(B)
    print(f"\nwitness ideal J: size {witness.size} of {B.order}")
    print(f"J verified as a two-sided ideal: {is_ideal(B, witness.members)}")

    result = is_simple(B)
    print(f"is_simple: {result.simple}")
    cert = result.certificate
    print(f"certificate: closure of seed {cert.seeds} stalled at size {cert.size}")
    print(f"certificate contained in J: {witness.contains(cert.members)}")

    # the witness is not just an obstruction in principle: any element outside
    # it still generates everything
    outside = int(next(x for x in range(B.order) if not witness.contains(x)))
    print(f"\nclosure of {outside} (outside J) has size "
          f"{ideal_closure(B, [outside]).size} = full carrier")


if __name__ == "__main__":
    main()
