"""Two assembly schemes, one brace.

The cycle scheme lays out m_z slots per block and wires the last action
generator to all of them; the matrix scheme lays out an r_z x r_{z-1} grid
and wires generator j to column j.  At r = (1, 1) and m = (1, 1) the two wire
diagrams coincide, and so do the resulting operation tables, entry for entry.

Run:  python3 demos/matrix_vs_cycle.py
"""

from pathlib import Path

import numpy as np

from bracekit import build_family, load_spec, tabulate, validate_spec

HERE = Path(__file__).parent / "specs"


def main():
    cycle_spec = load_spec(HERE / "cf72.json")
    matrix_spec = load_spec(HERE / "mf72.json")
    print(f"cycle spec kind:  {validate_spec(cycle_spec).kind}")
    print(f"matrix spec kind: {validate_spec(matrix_spec).kind}")

    C = build_family(cycle_spec)
    M = build_family(matrix_spec)
    add_c, mul_c = tabulate(C)
    add_m, mul_m = tabulate(M)
    print(f"\norders: {C.order} and {M.order}")
    print(f"addition tables equal:       {np.array_equal(add_c, add_m)}")
    print(f"multiplication tables equal: {np.array_equal(mul_c, mul_m)}")

    # the matrix scheme needs no per-block slot count: it is implied by the
    # neighbour ranks, which is why mf72.json has no "m" fields
    print(f"\ncycle moduli:  {C.codec.moduli.tolist()}")
    print(f"matrix moduli: {M.codec.moduli.tolist()}")


if __name__ == "__main__":
    main()
