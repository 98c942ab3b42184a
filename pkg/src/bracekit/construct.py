"""Block-cycle constructions of finite left braces.

The central object is a cycle of blocks. Block z carries a prime p_z, a
vector space V_z over Z/(p_z) with a non-singular symmetric bilinear form
(``gram``), and an orthogonal map ``f`` on V_z whose order is exactly the
previous block's prime, so the s-part of block z-1 can act on the t-part of
block z by powers of f. Two slot shapes are supported and selected by the
spec type:

* cycle family: T_z is m_z slots of V_z; the pairing sends slot i to
  s-coordinate i for i below r_z and the sum of all slots to the last
  s-coordinate; the generator for s-coordinate i of block z-1 applies f to
  slot i alone (i below r_{z-1}) or to every slot (i = r_{z-1}).
* matrix family: T_z is an r_z x r_{z-1} grid of V_z slots; s-coordinate i
  collects the sum of row i, and the generator for s-coordinate j of block
  z-1 applies f down column j.

Either shape assembles into an AsymmetricProductBrace whose carrier
interleaves each block's t-coordinates directly before its s-coordinates, so
every block occupies one contiguous run of index space. The resulting brace
is simple exactly when every block map has f - id bijective; when some block
fails that, ``nonsimple_witness`` materializes the proper ideal of elements
whose slot vectors all lie in the image of f - id.

Specs are plain JSON: {"blocks": [{"p":..,"gram":..,"f":..,"r":..,"m":..}]}
with "m" present in every block (cycle family) or in none (matrix family).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Optional, Union

import numpy as np

from .braces import (
    AsymmetricProductBrace,
    FiniteBrace,
    IdealRecord,
    SemidirectProductBrace,
    TrivialBrace,
    is_ideal,
)
from .errors import (
    BelowBoundError,
    CapExceededError,
    ConditionViolationError,
    NoWitnessError,
    NotInvertibleError,
    SchemaError,
    UnsupportedParameterError,
)
from .modular import ResidueMatrix, is_prime, matrix_order, minus_id_bijective, nullspace_mod

__all__ = [
    "BlockData",
    "CycleFamilySpec",
    "MatrixFamilySpec",
    "FamilyBlock",
    "FamilyReport",
    "parse_spec",
    "load_spec",
    "dump_spec",
    "validate_spec",
    "build_family",
    "nonsimple_witness",
    "trivial_brace",
    "asymmetric_product",
    "semidirect_product",
    "build_prime_example",
    "solve_exponents",
]


@dataclass(frozen=True)
class BlockData:
    """One block of a family spec; ``m`` stays None for the matrix shape."""

    p: int
    gram: tuple
    f: tuple
    r: int
    m: Optional[int] = None

    @property
    def dim(self) -> int:
        return len(self.gram)


@dataclass(frozen=True)
class CycleFamilySpec:
    blocks: tuple

    kind = "cycle"

    @property
    def n(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class MatrixFamilySpec:
    blocks: tuple

    kind = "matrix"

    @property
    def n(self) -> int:
        return len(self.blocks)


FamilySpec = Union[CycleFamilySpec, MatrixFamilySpec]


def _parse_matrix(value, path: str, expected_dim: Optional[int] = None) -> tuple:
    if not isinstance(value, list) or not value:
        raise SchemaError(f"{path}: expected a non-empty square integer matrix")
    dim = len(value)
    rows = []
    for row in value:
        if (
            not isinstance(row, list)
            or len(row) != dim
            or any(isinstance(x, bool) or not isinstance(x, int) for x in row)
        ):
            raise SchemaError(f"{path}: expected a square integer matrix")
        rows.append(tuple(row))
    if expected_dim is not None and dim != expected_dim:
        raise SchemaError(f"{path}: expected a matrix of the same size as gram")
    return tuple(rows)


def _parse_positive_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SchemaError(f"{path}: expected a positive integer")
    return value


def parse_spec(data) -> FamilySpec:
    """Turn a JSON object into a family spec, reporting the offending field path."""
    if not isinstance(data, dict):
        raise SchemaError("top level: expected an object")
    for key in data:
        if key != "blocks":
            raise SchemaError(f"top level: unknown field {key!r}")
    if "blocks" not in data:
        raise SchemaError("top level: missing field 'blocks'")
    raw_blocks = data["blocks"]
    if not isinstance(raw_blocks, list) or not raw_blocks:
        raise SchemaError("blocks: expected a non-empty list")
    with_m = sum(1 for b in raw_blocks if isinstance(b, dict) and "m" in b)
    if with_m not in (0, len(raw_blocks)):
        raise SchemaError("blocks: field 'm' must appear in every block or in none")
    is_cycle = with_m == len(raw_blocks)
    allowed = {"p", "gram", "f", "r"} | ({"m"} if is_cycle else set())
    blocks = []
    for i, raw in enumerate(raw_blocks):
        path = f"blocks[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{path}: expected an object")
        for key in raw:
            if key not in allowed:
                raise SchemaError(f"{path}: unknown field {key!r}")
        for key in allowed:
            if key not in raw:
                raise SchemaError(f"{path}: missing field {key!r}")
        p = _parse_positive_int(raw["p"], f"{path}.p")
        gram = _parse_matrix(raw["gram"], f"{path}.gram")
        f = _parse_matrix(raw["f"], f"{path}.f", expected_dim=len(gram))
        r = _parse_positive_int(raw["r"], f"{path}.r")
        m = _parse_positive_int(raw["m"], f"{path}.m") if is_cycle else None
        blocks.append(BlockData(p=p, gram=gram, f=f, r=r, m=m))
    if is_cycle:
        return CycleFamilySpec(blocks=tuple(blocks))
    return MatrixFamilySpec(blocks=tuple(blocks))


def load_spec(path) -> FamilySpec:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    return parse_spec(data)


def dump_spec(spec: FamilySpec) -> dict:
    blocks = []
    for b in spec.blocks:
        entry = {
            "p": b.p,
            "gram": [list(row) for row in b.gram],
            "f": [list(row) for row in b.f],
            "r": b.r,
        }
        if spec.kind == "cycle":
            entry["m"] = b.m
        blocks.append(entry)
    return {"blocks": blocks}


def _slot_count(spec: FamilySpec, z: int) -> int:
    b = spec.blocks[z]
    if spec.kind == "cycle":
        return b.m
    return b.r * spec.blocks[z - 1].r


def family_order(spec: FamilySpec) -> int:
    return prod(
        b.p ** (b.dim * _slot_count(spec, z) + b.r) for z, b in enumerate(spec.blocks)
    )


@dataclass
class FamilyReport:
    """Mathematical validation of a family spec, with a simplicity prediction."""

    ok: bool
    kind: str
    order: int
    failures: list
    predicted_simple: Optional[bool]
    blocks: list


def validate_spec(spec: FamilySpec) -> FamilyReport:
    """Check every condition the construction needs and predict simplicity.

    Conditions: at least two blocks with pairwise distinct primes; each gram
    symmetric and non-singular; each f orthogonal for its gram with order
    exactly the preceding block's prime; and for the cycle shape, every
    m_z at least max(r_z, r_{z-1}).
    """
    failures: list[str] = []
    n = spec.n
    if n < 2:
        failures.append("blocks: the cycle needs at least two blocks")
    primes = [b.p for b in spec.blocks]
    if len(set(primes)) != len(primes):
        failures.append("blocks: the block primes must be pairwise distinct")
    block_infos = []
    bijective_flags = []
    for z, b in enumerate(spec.blocks):
        path = f"blocks[{z}]"
        info = {"p": b.p, "dim": b.dim, "r": b.r, "slots": None, "map_order": None,
                "minus_id_bijective": None}
        block_infos.append(info)
        if not is_prime(b.p):
            failures.append(f"{path}.p: {b.p} is not prime")
            continue
        gram = ResidueMatrix(b.gram, b.p)
        f = ResidueMatrix(b.f, b.p)
        if gram != gram.T:
            failures.append(f"{path}.gram: not symmetric")
            continue
        if gram.det() == 0:
            failures.append(f"{path}.gram: singular")
            continue
        if f.T @ gram @ f != gram:
            failures.append(f"{path}.f: does not preserve the form")
            continue
        prev_p = spec.blocks[(z - 1) % n].p
        try:
            order = matrix_order(f, cap=prev_p)
        except (NotInvertibleError, CapExceededError):
            failures.append(f"{path}.f: order does not divide the preceding prime {prev_p}")
            continue
        info["map_order"] = order
        if order != prev_p:
            failures.append(f"{path}.f: order {order}, expected the preceding prime {prev_p}")
            continue
        info["minus_id_bijective"] = minus_id_bijective(f)
        bijective_flags.append(info["minus_id_bijective"])
        info["slots"] = _slot_count(spec, z)
        if spec.kind == "cycle":
            need = max(b.r, spec.blocks[(z - 1) % n].r)
            if b.m < need:
                failures.append(f"{path}.m: {b.m} is below max(r_z, preceding r) = {need}")
    ok = not failures
    predicted = all(bijective_flags) if ok else None
    return FamilyReport(
        ok=ok,
        kind=spec.kind,
        order=family_order(spec) if ok else 0,
        failures=failures,
        predicted_simple=predicted,
        blocks=block_infos,
    )


@dataclass(frozen=True)
class FamilyBlock:
    """Carrier-level metadata for one block of a built family brace.

    ``t_coords`` and ``s_coords`` are [start, stop) ranges into the logical
    t and s coordinate lists. The block's elements (all other blocks zero)
    occupy the contiguous index run stride * {0, ..., size-1}, because the
    storage layout keeps each block's coordinates adjacent.
    """

    index: int
    prime: int
    dim: int
    slots: int
    s_dim: int
    t_coords: tuple
    s_coords: tuple
    stride: int
    size: int
    f: tuple

    def carrier_indices(self) -> np.ndarray:
        return self.stride * np.arange(self.size, dtype=np.int64)


def _assemble(spec: FamilySpec):
    """Shared assembly of moduli, pairing, action generators, layout, metadata."""
    n = spec.n
    dims = [b.dim for b in spec.blocks]
    slot_counts = [_slot_count(spec, z) for z in range(n)]
    t_dims = [dims[z] * slot_counts[z] for z in range(n)]
    r = [b.r for b in spec.blocks]
    t_off = np.concatenate(([0], np.cumsum(t_dims)))
    s_off = np.concatenate(([0], np.cumsum(r)))
    dT, dS = int(t_off[-1]), int(s_off[-1])

    t_moduli = np.concatenate(
        [np.full(t_dims[z], spec.blocks[z].p, dtype=np.int64) for z in range(n)]
    )
    s_moduli = np.concatenate([np.full(r[z], spec.blocks[z].p, dtype=np.int64) for z in range(n)])

    def slot_cols(z: int, j: int) -> slice:
        base = int(t_off[z]) + j * dims[z]
        return slice(base, base + dims[z])

    pairing = np.zeros((dS, dT, dT), dtype=np.int64)
    for z, b in enumerate(spec.blocks):
        gram = np.asarray(b.gram, dtype=np.int64)
        if spec.kind == "cycle":
            for i in range(r[z] - 1):
                pairing[int(s_off[z]) + i, slot_cols(z, i), slot_cols(z, i)] += gram
            for j in range(slot_counts[z]):
                pairing[int(s_off[z]) + r[z] - 1, slot_cols(z, j), slot_cols(z, j)] += gram
        else:
            cols = spec.blocks[z - 1].r
            for i in range(r[z]):
                for j in range(cols):
                    slot = i * cols + j
                    pairing[int(s_off[z]) + i, slot_cols(z, slot), slot_cols(z, slot)] += gram

    action = np.zeros((dS, dT, dT), dtype=np.int64)
    ident = np.eye(dT, dtype=np.int64)
    for z in range(n):
        w = (z + 1) % n  # the block this block's s-part acts on
        fw = np.asarray(spec.blocks[w].f, dtype=np.int64)
        for i in range(r[z]):
            g = ident.copy()
            if spec.kind == "cycle":
                if i < r[z] - 1:
                    targets = [i]
                else:
                    targets = list(range(slot_counts[w]))
            else:
                rows = spec.blocks[w].r
                targets = [ii * r[z] + i for ii in range(rows)]
            for j in targets:
                if j >= slot_counts[w]:
                    raise ConditionViolationError(
                        f"blocks[{w}]: needs at least {j + 1} slots to receive the action"
                    )
                g[slot_cols(w, j), slot_cols(w, j)] = fw
            action[int(s_off[z]) + i] = g

    layout = []
    for z in range(n):
        layout.extend(range(int(t_off[z]), int(t_off[z + 1])))
        layout.extend(range(dT + int(s_off[z]), dT + int(s_off[z + 1])))

    blocks_meta = []
    stride = 1
    for z, b in enumerate(spec.blocks):
        size = b.p ** (t_dims[z] + r[z])
        blocks_meta.append(
            FamilyBlock(
                index=z,
                prime=b.p,
                dim=b.dim,
                slots=slot_counts[z],
                s_dim=r[z],
                t_coords=(int(t_off[z]), int(t_off[z + 1])),
                s_coords=(int(s_off[z]), int(s_off[z + 1])),
                stride=stride,
                size=size,
                f=b.f,
            )
        )
        stride *= size
    return t_moduli, s_moduli, pairing, action, layout, blocks_meta


def build_family(spec: FamilySpec, validate: bool = True) -> AsymmetricProductBrace:
    """Compile a family spec into its brace.

    With ``validate=True`` the spec is checked first (raising
    ConditionViolationError listing every failure) and the assembled pairing
    and action are re-verified by the carrier's own constructor, so a bug in
    assembly cannot slip through as silent wrong algebra.
    """
    if validate:
        report = validate_spec(spec)
        if not report.ok:
            raise ConditionViolationError("; ".join(report.failures))
    t_moduli, s_moduli, pairing, action, layout, blocks_meta = _assemble(spec)
    return AsymmetricProductBrace(
        t_moduli,
        s_moduli,
        pairing,
        action,
        layout=layout,
        family_blocks=blocks_meta,
        validate=validate,
    )


def nonsimple_witness(B: AsymmetricProductBrace) -> IdealRecord:
    """The proper ideal of a non-simple family brace, verified before returning.

    Elements whose every slot vector lies in the image of f - id form an
    ideal; it is proper exactly when some block map has 1 as an eigenvalue.
    Membership is decided by parity checks: a left null space basis H of
    f - id satisfies (v in the image iff H v = 0). Raises NoWitnessError when
    every block map has f - id bijective (the set would be everything).
    """
    if getattr(B, "family_blocks", None) is None:
        raise ValueError("witness extraction needs a family-built brace")
    checks = []
    for blk in B.family_blocks:
        fm = np.asarray(blk.f, dtype=np.int64)
        h = nullspace_mod((fm - np.eye(blk.dim, dtype=np.int64)).T % blk.prime, blk.prime)
        if h.shape[0]:
            checks.append((blk, h))
    if not checks:
        raise NoWitnessError("every block map has f - id bijective; the set is the whole brace")
    idx = B.elements()
    t, _ = B._split(idx)
    mask = np.ones(B.order, dtype=bool)
    for blk, h in checks:
        lo, hi = blk.t_coords
        slots = t[:, lo:hi].reshape(B.order, blk.slots, blk.dim)
        residues = np.einsum("kd,nsd->nsk", h, slots) % blk.prime
        mask &= ~np.any(residues, axis=(1, 2))
    members = np.sort(idx[mask])
    if not is_ideal(B, members):
        raise ConditionViolationError("witness set failed ideal verification")
    record_mask = np.zeros(B.order, dtype=bool)
    record_mask[members] = True
    return IdealRecord(
        members=members, size=members.size, seeds=(), two_sided=True, mask=record_mask
    )


def trivial_brace(moduli) -> TrivialBrace:
    return TrivialBrace(moduli)


def asymmetric_product(
    T: TrivialBrace,
    S: TrivialBrace,
    pairing,
    action_gens,
    layout=None,
    validate: bool = True,
) -> AsymmetricProductBrace:
    """Asymmetric product of two explicit trivial braces."""
    return AsymmetricProductBrace(
        T.moduli, S.moduli, pairing, action_gens, layout=layout, validate=validate
    )


def semidirect_product(A: FiniteBrace, B: FiniteBrace, act, validate: bool = True):
    """Semidirect product; ``act`` maps a B-index to a permutation of A-indices.

    ``act`` may be a callable or a prebuilt (|B|, |A|) array. The rows are
    verified to be brace automorphisms of A and the assignment a homomorphism
    unless ``validate`` is off.
    """
    if callable(act):
        rows = [np.asarray(act(b), dtype=np.int64) for b in range(B.order)]
        act = np.stack(rows)
    return SemidirectProductBrace(A, B, act, validate=validate)


def _shift_spec() -> CycleFamilySpec:
    # five slots of the hyperbolic plane over Z/2 cycled against one copy of Z/3
    return CycleFamilySpec(
        blocks=(
            BlockData(p=2, gram=((0, 1), (1, 0)), f=((0, 1), (1, 1)), r=1, m=5),
            BlockData(p=3, gram=((1,),), f=((2,),), r=1, m=1),
        )
    )


def build_prime_example(m1: int = 5, validate: bool = True) -> SemidirectProductBrace:
    """A prime, non-simple brace: a simple family brace extended by a slot shift.

    The five slots of the first block are cycled by Z/5; the shift commutes
    with the block action and preserves the pairing (the pairing sums over
    all slots and the action applies the same map to each), so it is a brace
    automorphism, and it is not inner since 5 does not divide the simple
    brace's order. The resulting ideal lattice is exactly {0, A x {0}, B}.
    """
    if m1 != 5:
        raise UnsupportedParameterError("only the five-slot shift construction is supported")
    A = build_family(_shift_spec(), validate=validate)
    outer = TrivialBrace([5])
    blk = A.family_blocks[0]
    lo, hi = blk.t_coords
    idx = A.elements()
    t, s = A._split(idx)

    def shifted(a: int) -> np.ndarray:
        slots = t[:, lo:hi].reshape(A.order, blk.slots, blk.dim)
        rolled = np.roll(slots, -a, axis=1).reshape(A.order, hi - lo)
        t2 = np.concatenate([t[:, :lo], rolled, t[:, hi:]], axis=1)
        return A._join(t2, s)

    act = np.stack([shifted(a) for a in range(5)])
    return SemidirectProductBrace(A, outer, act, validate=validate)


def solve_exponents(dims, exponents) -> tuple[tuple, tuple]:
    """Choose slot counts and s-ranks hitting given prime exponents per block.

    Block z of a cycle family contributes exponent m_z * dim_z + r_z. For
    each target e_z this picks the smallest valid r_z (the least positive
    residue of e_z modulo dim_z) and the matching m_z, then checks the
    cross-block constraints m_z >= max(r_z, r_{z-1}). Raises BelowBoundError
    when a target is smaller than dim_z + 1, the least exponent any block can
    realize.
    """
    dims = [int(d) for d in dims]
    exponents = [int(e) for e in exponents]
    if len(dims) != len(exponents):
        raise ValueError("dims and exponents must have equal length")
    if any(d < 1 for d in dims):
        raise ValueError("dims must be positive")
    ms, rs = [], []
    for d, e in zip(dims, exponents):
        if e < d + 1:
            raise BelowBoundError(
                f"target exponent {e} is below the minimum {d + 1} for a dimension-{d} block"
            )
        r = (e - 1) % d + 1
        ms.append((e - r) // d)
        rs.append(r)
    n = len(dims)
    for z in range(n):
        need = max(rs[z], rs[(z - 1) % n])
        if ms[z] < need:
            raise ConditionViolationError(
                f"block {z}: slot count {ms[z]} cannot cover s-ranks up to {need}"
            )
    return tuple(ms), tuple(rs)
