"""Finite left braces over integer-indexed carriers.

A left brace is a set with two group structures, an abelian addition and a
(possibly nonabelian) multiplication sharing their identity element, tied
together by the compatibility law a(b + c) + a = ab + ac. Every brace here
carries its elements as integers 0..order-1 and implements four vectorized
kernels (_add, _neg, _mul, _inv) on int64 index arrays; everything else
(subtraction, the lambda maps, the star product, ideal machinery) is derived
from those kernels, so each concrete carrier only has to get four formulas
right.

Index 0 is always the shared identity for carriers built from formulas; table
carriers detect their identity from the table so that deliberately corrupted
tables are reported as axiom violations instead of crashing.

Ideal computations work with generator sets throughout: a subset closed under
lambda_g and conjugation by a set of multiplicative generators g is closed
under the maps of every element (the maps compose multiplicatively in the
subscript and are bijections of any finite invariant subset), so the
fixpoints computed here agree with exhaustive definitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import BudgetExceededError, ConditionViolationError, IncompleteLatticeError

__all__ = [
    "FiniteBrace",
    "TrivialBrace",
    "AsymmetricProductBrace",
    "SemidirectProductBrace",
    "TableBrace",
    "BraceElement",
    "AxiomReport",
    "IdealRecord",
    "SimplicityResult",
    "PrimeResult",
    "check_axioms",
    "tabulate",
    "ideal_closure",
    "is_left_ideal",
    "is_ideal",
    "is_simple",
    "list_ideals",
    "star_span",
    "additive_generators",
    "multiplicative_generators",
    "is_prime_brace",
]


def _as_index_array(x) -> np.ndarray:
    return np.asarray(x, dtype=np.int64)


class FiniteBrace:
    """Base class: derived operations over the four subclass kernels."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = int(order)
        self._axiom_report: Optional["AxiomReport"] = None
        self._mult_gens: Optional[np.ndarray] = None

    # subclasses implement these four on 1-d int64 arrays
    def _add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _neg(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _inv(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _binary(self, kernel, x, y):
        xa, ya = np.broadcast_arrays(_as_index_array(x), _as_index_array(y))
        out = kernel(xa.ravel().copy(), ya.ravel().copy()).reshape(xa.shape)
        if out.ndim == 0:
            return int(out)
        return out

    def _unary(self, kernel, x):
        xa = _as_index_array(x)
        out = kernel(xa.ravel().copy()).reshape(xa.shape)
        if out.ndim == 0:
            return int(out)
        return out

    def zero(self) -> int:
        """Index of the shared additive/multiplicative identity."""
        return 0

    def add(self, x, y):
        return self._binary(self._add, x, y)

    def neg(self, x):
        return self._unary(self._neg, x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        return self._binary(self._mul, x, y)

    def inv(self, x):
        return self._unary(self._inv, x)

    def lam(self, a, b):
        """lambda_a(b) = a*b - a, the additive automorphism attached to a."""
        return self.sub(self.mul(a, b), a)

    def star(self, a, b):
        """a*b = lambda_a(b) - b; measures how far the brace is from trivial."""
        return self.sub(self.lam(a, b), b)

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def element(self, index: int) -> "BraceElement":
        index = int(index)
        if not 0 <= index < self.order:
            raise IndexError(f"index {index} outside carrier of order {self.order}")
        return BraceElement(self, index)

    def _mulclose_mask(self, gens: np.ndarray) -> tuple[np.ndarray, int]:
        """Bitmask of the multiplicative subgroup generated by ``gens``."""
        mask = np.zeros(self.order, dtype=bool)
        mask[self.zero()] = True
        frontier = np.array([self.zero()], dtype=np.int64)
        gens = _as_index_array(gens)
        while frontier.size:
            prod = self.mul(frontier[:, None], gens[None, :]).ravel()
            fresh = np.unique(prod[~mask[prod]])
            mask[fresh] = True
            frontier = fresh
        return mask, int(np.count_nonzero(mask))

    def multiplicative_generators(self) -> np.ndarray:
        """A generating set of the multiplicative group (greedy, cached)."""
        if self._mult_gens is None:
            gens: list[int] = []
            mask = np.zeros(self.order, dtype=bool)
            mask[self.zero()] = True
            count = 1
            while count < self.order:
                gens.append(int(np.argmin(mask)))
                mask, count = self._mulclose_mask(np.array(gens, dtype=np.int64))
            self._mult_gens = np.array(gens, dtype=np.int64)
        return self._mult_gens

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"


@dataclass(frozen=True)
class BraceElement:
    """A single element bound to its brace; operators defer to the brace ops."""

    brace: FiniteBrace
    index: int

    def _lift(self, other) -> int:
        if isinstance(other, BraceElement):
            if other.brace is not self.brace:
                raise ValueError("elements of different braces")
            return other.index
        return int(other)

    def __add__(self, other):
        return BraceElement(self.brace, self.brace.add(self.index, self._lift(other)))

    def __sub__(self, other):
        return BraceElement(self.brace, self.brace.sub(self.index, self._lift(other)))

    def __neg__(self):
        return BraceElement(self.brace, self.brace.neg(self.index))

    def __mul__(self, other):
        return BraceElement(self.brace, self.brace.mul(self.index, self._lift(other)))

    def inverse(self):
        return BraceElement(self.brace, self.brace.inv(self.index))

    def lam(self, other):
        return BraceElement(self.brace, self.brace.lam(self.index, self._lift(other)))

    def star(self, other):
        return BraceElement(self.brace, self.brace.star(self.index, self._lift(other)))

    def __repr__(self) -> str:
        return f"BraceElement({self.index} in {self.brace!r})"


class _MixedRadix:
    """Mixed-radix codec; the first-listed coordinate varies fastest."""

    def __init__(self, moduli):
        self.moduli = np.asarray(moduli, dtype=np.int64)
        if self.moduli.ndim != 1 or self.moduli.size == 0 or np.any(self.moduli < 1):
            raise ValueError("moduli must be a non-empty list of positive integers")
        exact = 1
        for m in self.moduli.tolist():
            exact *= int(m)
        if exact > 2**62:
            raise ValueError(f"carrier of size {exact} is too large to index")
        self.weights = np.concatenate(([1], np.cumprod(self.moduli)[:-1]))
        self.size = exact

    def decode(self, idx: np.ndarray) -> np.ndarray:
        return idx[:, None] // self.weights[None, :] % self.moduli[None, :]

    def encode(self, coords: np.ndarray) -> np.ndarray:
        return coords @ self.weights


class TrivialBrace(FiniteBrace):
    """The brace whose multiplication is its addition, on a product of cyclics."""

    def __init__(self, moduli):
        self.codec = _MixedRadix(moduli)
        self.moduli = self.codec.moduli
        super().__init__(self.codec.size)

    def _add(self, x, y):
        c = (self.codec.decode(x) + self.codec.decode(y)) % self.codec.moduli
        return self.codec.encode(c)

    def _neg(self, x):
        return self.codec.encode(-self.codec.decode(x) % self.codec.moduli)

    _mul = _add
    _inv = _neg

    def multiplicative_generators(self) -> np.ndarray:
        if self._mult_gens is None:
            keep = self.codec.moduli > 1
            self._mult_gens = self.codec.weights[keep].copy()
            if self._mult_gens.size == 0:
                self._mult_gens = np.array([0], dtype=np.int64)
        return self._mult_gens


class AsymmetricProductBrace(FiniteBrace):
    """Brace on T x S for trivial braces T, S, twisted by a pairing and an action.

    Addition carries a symmetric bilinear pairing b: T x T -> S into the S
    part, multiplication twists the T part by an action of S:

        (t1, s1) + (t2, s2) = (t1 + t2, s1 + s2 + b(t1, t2))
        (t1, s1) . (t2, s2) = (t1 + alpha_{s1}(t2), s1 + s2)

    ``pairing`` has shape (dS, dT, dT): component k of b(u, v) is
    u^T pairing[k] v mod s_moduli[k]. ``action_gens`` has shape (dS, dT, dT):
    alpha for s is the product of action_gens[l]^{s_l}. Generators must
    commute, respect every coordinate modulus, have order dividing their
    coordinate modulus, and preserve the pairing; ``validate=True`` enforces
    all of that up front.

    ``layout`` permutes the logical coordinates [t..., s...] into encoding
    positions so composite constructions can interleave storage; it never
    changes the algebra.
    """

    def __init__(
        self,
        t_moduli,
        s_moduli,
        pairing,
        action_gens,
        layout=None,
        family_blocks=None,
        validate: bool = True,
    ):
        self._tm = np.asarray(t_moduli, dtype=np.int64)
        self._sm = np.asarray(s_moduli, dtype=np.int64)
        if self._tm.ndim != 1 or self._tm.size == 0 or np.any(self._tm < 1):
            raise ValueError("t_moduli must be a non-empty list of positive integers")
        if self._sm.ndim != 1 or self._sm.size == 0 or np.any(self._sm < 1):
            raise ValueError("s_moduli must be a non-empty list of positive integers")
        dt, ds = self._tm.size, self._sm.size
        self._pairing = np.asarray(pairing, dtype=np.int64) % self._sm[:, None, None]
        self._gens = np.asarray(action_gens, dtype=np.int64) % self._tm[None, :, None]
        if self._pairing.shape != (ds, dt, dt):
            raise ValueError(f"pairing must have shape {(ds, dt, dt)}")
        if self._gens.shape != (ds, dt, dt):
            raise ValueError(f"action_gens must have shape {(ds, dt, dt)}")

        logical_moduli = np.concatenate([self._tm, self._sm])
        d = dt + ds
        if layout is None:
            layout = np.arange(d, dtype=np.int64)
        self._layout = np.asarray(layout, dtype=np.int64)
        if sorted(self._layout.tolist()) != list(range(d)):
            raise ValueError("layout must be a permutation of the coordinates")
        self._inv_layout = np.argsort(self._layout)
        self.codec = _MixedRadix(logical_moduli[self._layout])
        self._dt = dt
        self.family_blocks = tuple(family_blocks) if family_blocks else None
        self._alpha_cache: dict[bytes, np.ndarray] = {}
        if validate:
            self._validate()
        self._gen_powers = [self._power_table(self._gens[l], int(self._sm[l])) for l in range(ds)]
        super().__init__(self.codec.size)

    # matrices act on t-coordinates; row i of any such matrix lives mod t_moduli[i]
    def _reduce(self, m: np.ndarray) -> np.ndarray:
        return m % self._tm[:, None]

    def _map_equal(self, m1: np.ndarray, m2: np.ndarray) -> bool:
        return bool(np.all((m1 - m2) % self._tm[:, None] == 0))

    def _power_table(self, g: np.ndarray, count: int) -> list[np.ndarray]:
        powers = [np.eye(self._tm.size, dtype=np.int64)]
        for _ in range(count - 1):
            powers.append(self._reduce(g @ powers[-1]))
        return powers

    def _validate(self) -> None:
        tm, sm = self._tm, self._sm
        if not np.array_equal(self._pairing, np.swapaxes(self._pairing, 1, 2)):
            raise ConditionViolationError("pairing is not symmetric")
        # b(u + tm_i e_i, v) must equal b(u, v) mod every s-coordinate modulus
        bad = (self._pairing * tm[None, :, None]) % sm[:, None, None]
        if np.any(bad):
            raise ConditionViolationError("pairing does not respect the coordinate moduli")
        bad = (self._pairing * tm[None, None, :]) % sm[:, None, None]
        if np.any(bad):
            raise ConditionViolationError("pairing does not respect the coordinate moduli")
        ident = np.eye(tm.size, dtype=np.int64)
        for l in range(sm.size):
            g = self._gens[l]
            if np.any((g * tm[None, :]) % tm[:, None]):
                raise ConditionViolationError("action does not respect the coordinate moduli")
            p = ident
            for _ in range(int(sm[l])):
                p = self._reduce(g @ p)
            if not self._map_equal(p, ident):
                raise ConditionViolationError(
                    "action generator order does not divide its coordinate modulus"
                )
            for k in range(sm.size):
                kept = (g.T @ self._pairing[k] @ g - self._pairing[k]) % sm[k]
                if np.any(kept):
                    raise ConditionViolationError("action does not preserve the pairing")
            for m in range(l + 1, sm.size):
                h = self._gens[m]
                if not self._map_equal(self._reduce(g @ h), self._reduce(h @ g)):
                    raise ConditionViolationError("action generators do not commute")

    def _split(self, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        logical = self.codec.decode(idx)[:, self._inv_layout]
        return logical[:, : self._dt], logical[:, self._dt :]

    def _join(self, t: np.ndarray, s: np.ndarray) -> np.ndarray:
        logical = np.concatenate([t, s], axis=1)
        return self.codec.encode(logical[:, self._layout])

    def _pair_val(self, t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
        return np.einsum("kij,ni,nj->nk", self._pairing, t1, t2) % self._sm

    def _alpha_matrix(self, key: tuple[int, ...]) -> np.ndarray:
        packed = bytes(key)
        m = self._alpha_cache.get(packed)
        if m is None:
            m = np.eye(self._dt, dtype=np.int64)
            for l, e in enumerate(key):
                m = self._reduce(self._gen_powers[l][e] @ m)
            self._alpha_cache[packed] = m
        return m

    def _alpha(self, s: np.ndarray, t: np.ndarray) -> np.ndarray:
        uniq, which = np.unique(s, axis=0, return_inverse=True)
        out = np.empty_like(t)
        for u, key in enumerate(uniq):
            sel = which == u
            m = self._alpha_matrix(tuple(int(v) for v in key))
            out[sel] = t[sel] @ m.T % self._tm
        return out

    def _add(self, x, y):
        t1, s1 = self._split(x)
        t2, s2 = self._split(y)
        t = (t1 + t2) % self._tm
        s = (s1 + s2 + self._pair_val(t1, t2)) % self._sm
        return self._join(t, s)

    def _neg(self, x):
        t, s = self._split(x)
        return self._join(-t % self._tm, (-s + self._pair_val(t, t)) % self._sm)

    def _mul(self, x, y):
        t1, s1 = self._split(x)
        t2, s2 = self._split(y)
        return self._join((t1 + self._alpha(s1, t2)) % self._tm, (s1 + s2) % self._sm)

    def _inv(self, x):
        t, s = self._split(x)
        s_inv = -s % self._sm
        return self._join(self._alpha(s_inv, -t % self._tm), s_inv)

    def multiplicative_generators(self) -> np.ndarray:
        # one-hot coordinates generate: (t,0)(0,s) = (t,s) and each factor's
        # one-hots generate it multiplicatively
        if self._mult_gens is None:
            keep = self.codec.moduli > 1
            self._mult_gens = self.codec.weights[keep].copy()
            if self._mult_gens.size == 0:
                self._mult_gens = np.array([0], dtype=np.int64)
        return self._mult_gens


class SemidirectProductBrace(FiniteBrace):
    """Semidirect product of braces A and B along an action of (B, .) on A.

    ``act_perms`` has shape (|B|, |A|); row b is the permutation of A-indices
    implementing the automorphism attached to b. Addition is componentwise,
    multiplication is (a1, b1)(a2, b2) = (a1 . act_{b1}(a2), b1 . b2), and the
    element index is a + |A| * b. With ``validate=True`` the rows are checked
    to be brace automorphisms of A (via generator sets, which is equivalent to
    the exhaustive definition) and the assignment b -> act_b is checked to be
    a homomorphism on all of B.
    """

    def __init__(self, A: FiniteBrace, B: FiniteBrace, act_perms, validate: bool = True):
        self.A = A
        self.B = B
        self.act = np.asarray(act_perms, dtype=np.int64)
        if self.act.shape != (B.order, A.order):
            raise ValueError(f"act_perms must have shape {(B.order, A.order)}")
        if validate:
            self._verify_action()
        super().__init__(A.order * B.order)

    def _verify_action(self) -> None:
        from .errors import ActionNotAutomorphismError

        nA, nB = self.A.order, self.B.order
        ident = np.arange(nA, dtype=np.int64)
        for b in range(nB):
            row = self.act[b]
            if np.any(row < 0) or np.any(row >= nA) or np.bincount(row, minlength=nA).max() > 1:
                raise ActionNotAutomorphismError(f"row {b} is not a permutation")
        if not np.array_equal(self.act[self.B.zero()], ident):
            raise ActionNotAutomorphismError("identity of B must act trivially")
        bs = np.arange(nB, dtype=np.int64)
        pairs = self.B.mul(bs[:, None], bs[None, :])
        # composed[i, j, a] = act_{b_i}(act_{b_j}(a)); must match act_{b_i b_j}(a)
        composed = self.act[bs[:, None, None], self.act[None, :, :]]
        if not np.array_equal(self.act[pairs], composed):
            raise ActionNotAutomorphismError("action is not a homomorphism on B")
        all_a = np.arange(nA, dtype=np.int64)
        add_gens = additive_generators(self.A)
        mul_gens = self.A.multiplicative_generators()
        for b in map(int, self.B.multiplicative_generators()):
            f = self.act[b]
            for g in map(int, add_gens):
                if not np.array_equal(f[self.A.add(g, all_a)], self.A.add(f[g], f[all_a])):
                    raise ActionNotAutomorphismError("action does not preserve addition")
            for g in map(int, mul_gens):
                if not np.array_equal(f[self.A.mul(g, all_a)], self.A.mul(f[g], f[all_a])):
                    raise ActionNotAutomorphismError("action does not preserve multiplication")

    def _split(self, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return idx % self.A.order, idx // self.A.order

    def _join(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a + self.A.order * b

    def _add(self, x, y):
        a1, b1 = self._split(x)
        a2, b2 = self._split(y)
        return self._join(self.A.add(a1, a2), self.B.add(b1, b2))

    def _neg(self, x):
        a, b = self._split(x)
        return self._join(self.A.neg(a), self.B.neg(b))

    def _mul(self, x, y):
        a1, b1 = self._split(x)
        a2, b2 = self._split(y)
        return self._join(self.A.mul(a1, self.act[b1, a2]), self.B.mul(b1, b2))

    def _inv(self, x):
        a, b = self._split(x)
        bi = self.B.inv(b)
        return self._join(self.act[bi, self.A.inv(a)], self.B.inv(b))

    def multiplicative_generators(self) -> np.ndarray:
        if self._mult_gens is None:
            a_part = self.A.multiplicative_generators()
            b_part = self.A.order * self.B.multiplicative_generators()
            self._mult_gens = np.unique(np.concatenate([a_part, b_part]))
        return self._mult_gens


class TableBrace(FiniteBrace):
    """A brace given by full addition and multiplication tables.

    The identity is detected from the tables rather than assumed, and inverse
    lookups fall back to sentinel misses, so corrupted tables flow through the
    axiom checker as reported violations instead of exceptions.
    """

    def __init__(self, add_table, mul_table):
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.mul_table = np.asarray(mul_table, dtype=np.int64)
        n = self.add_table.shape[0]
        if self.add_table.shape != (n, n) or self.mul_table.shape != (n, n):
            raise ValueError("tables must be square and of equal size")
        self.entries_in_range = bool(
            (self.add_table >= 0).all()
            and (self.add_table < n).all()
            and (self.mul_table >= 0).all()
            and (self.mul_table < n).all()
        )
        ident = np.arange(n, dtype=np.int64)
        self._zero = None
        if self.entries_in_range:
            for z in range(n):
                if np.array_equal(self.add_table[z], ident) and np.array_equal(
                    self.add_table[:, z], ident
                ):
                    self._zero = z
                    break
        if self._zero is not None:
            self._neg_arr = np.argmax(self.add_table == self._zero, axis=1)
            self._inv_arr = np.argmax(self.mul_table == self._zero, axis=1)
        else:
            self._neg_arr = np.zeros(n, dtype=np.int64)
            self._inv_arr = np.zeros(n, dtype=np.int64)
        super().__init__(n)

    def zero(self) -> int:
        if self._zero is None:
            raise ConditionViolationError("table has no additive identity")
        return self._zero

    def _add(self, x, y):
        return self.add_table[x, y]

    def _mul(self, x, y):
        return self.mul_table[x, y]

    def _neg(self, x):
        return self._neg_arr[x]

    def _inv(self, x):
        return self._inv_arr[x]


def tabulate(B: FiniteBrace) -> tuple[np.ndarray, np.ndarray]:
    """Full (add, mul) tables of a brace; rows index the left operand."""
    idx = B.elements()
    return B.add(idx[:, None], idx[None, :]), B.mul(idx[:, None], idx[None, :])


@dataclass
class AxiomReport:
    """Outcome of a brace axiom check; ``checks`` maps axiom name to verdict."""

    ok: bool
    mode: str
    order: int
    checks: dict
    counterexample: Optional[tuple]
    trials: int


def _first_mismatch(name, lhs, rhs, operands):
    bad = np.nonzero(lhs != rhs)
    if bad[0].size == 0:
        return None
    first = tuple(int(ax[0]) for ax in bad)
    witness = []
    for op in operands:
        arr = np.broadcast_to(op, lhs.shape)
        witness.append(int(arr[first]))
    return (name, tuple(witness))


def check_axioms(
    B: FiniteBrace,
    mode: str = "auto",
    exhaustive_cap: int = 200,
    trials: int = 100_000,
    seed: int = 0,
) -> AxiomReport:
    """Verify the brace axioms on ``B``.

    ``mode`` is "exhaustive" (all pairs and triples), "sampled" (seeded random
    triples; identity and inverse laws stay exhaustive since they are linear
    scans), or "auto", which picks exhaustive for orders up to
    ``exhaustive_cap``. The report is cached on the brace instance.
    """
    n = B.order
    if mode == "auto":
        mode = "exhaustive" if n <= exhaustive_cap else "sampled"
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")

    checks: dict[str, bool] = {}
    counterexample = None

    def record(result):
        nonlocal counterexample
        if result is not None and counterexample is None:
            counterexample = result

    if isinstance(B, TableBrace) and not B.entries_in_range:
        return AxiomReport(
            ok=False,
            mode=mode,
            order=n,
            checks={"closure": False},
            counterexample=("closure", ()),
            trials=0,
        )

    try:
        z = B.zero()
    except ConditionViolationError:
        checks["additive_identity"] = False
        checks["multiplicative_identity"] = False
        return AxiomReport(
            ok=False,
            mode=mode,
            order=n,
            checks=checks,
            counterexample=("additive_identity", ()),
            trials=0,
        )

    every = B.elements()

    got = B.add(z, every)
    checks["additive_identity"] = bool(np.array_equal(got, every))
    record(_first_mismatch("additive_identity", got, every, [every]))

    got = B.add(every, B.neg(every))
    want = np.full(n, z, dtype=np.int64)
    checks["additive_inverses"] = bool(np.array_equal(got, want))
    record(_first_mismatch("additive_inverses", got, want, [every]))

    got_l = B.mul(z, every)
    got_r = B.mul(every, z)
    checks["multiplicative_identity"] = bool(
        np.array_equal(got_l, every) and np.array_equal(got_r, every)
    )
    record(_first_mismatch("multiplicative_identity", got_l, every, [every]))
    record(_first_mismatch("multiplicative_identity", got_r, every, [every]))

    got = B.mul(every, B.inv(every))
    checks["multiplicative_inverses"] = bool(np.array_equal(got, want))
    record(_first_mismatch("multiplicative_inverses", got, want, [every]))

    if mode == "exhaustive":
        trials_run = 0
        a_all = every[:, None]
        b_all = every[None, :]
        got = B.add(a_all, b_all)
        swapped = B.add(b_all, a_all)
        checks["additive_commutativity"] = bool(np.array_equal(got, swapped))
        record(_first_mismatch("additive_commutativity", got, swapped, [a_all, b_all]))

        chunk = max(1, 500_000 // max(1, n * n))
        names = ["additive_associativity", "multiplicative_associativity", "compatibility"]
        verdicts = {name: True for name in names}
        for lo in range(0, n, chunk):
            a = every[lo : lo + chunk][:, None, None]
            b = every[None, :, None]
            c = every[None, None, :]
            triples = [a, b, c]
            lhs = B.add(B.add(a, b), c)
            rhs = B.add(a, B.add(b, c))
            if not np.array_equal(lhs, rhs):
                verdicts["additive_associativity"] = False
                record(_first_mismatch("additive_associativity", lhs, rhs, triples))
            lhs = B.mul(B.mul(a, b), c)
            rhs = B.mul(a, B.mul(b, c))
            if not np.array_equal(lhs, rhs):
                verdicts["multiplicative_associativity"] = False
                record(_first_mismatch("multiplicative_associativity", lhs, rhs, triples))
            lhs = B.add(B.mul(a, B.add(b, c)), a)
            rhs = B.add(B.mul(a, b), B.mul(a, c))
            if not np.array_equal(lhs, rhs):
                verdicts["compatibility"] = False
                record(_first_mismatch("compatibility", lhs, rhs, triples))
        checks.update(verdicts)
    else:
        trials_run = int(trials)
        rng = np.random.default_rng(seed)
        a = rng.integers(0, n, size=trials_run)
        b = rng.integers(0, n, size=trials_run)
        c = rng.integers(0, n, size=trials_run)

        got = B.add(a, b)
        swapped = B.add(b, a)
        checks["additive_commutativity"] = bool(np.array_equal(got, swapped))
        record(_first_mismatch("additive_commutativity", got, swapped, [a, b]))

        lhs = B.add(B.add(a, b), c)
        rhs = B.add(a, B.add(b, c))
        checks["additive_associativity"] = bool(np.array_equal(lhs, rhs))
        record(_first_mismatch("additive_associativity", lhs, rhs, [a, b, c]))

        lhs = B.mul(B.mul(a, b), c)
        rhs = B.mul(a, B.mul(b, c))
        checks["multiplicative_associativity"] = bool(np.array_equal(lhs, rhs))
        record(_first_mismatch("multiplicative_associativity", lhs, rhs, [a, b, c]))

        lhs = B.add(B.mul(a, B.add(b, c)), a)
        rhs = B.add(B.mul(a, b), B.mul(a, c))
        checks["compatibility"] = bool(np.array_equal(lhs, rhs))
        record(_first_mismatch("compatibility", lhs, rhs, [a, b, c]))

    report = AxiomReport(
        ok=all(checks.values()),
        mode=mode,
        order=n,
        checks=checks,
        counterexample=counterexample,
        trials=trials_run,
    )
    B._axiom_report = report
    return report


class _AdditiveSpan:
    """Growing additive subgroup, tracked as a bitmask plus member chunks.

    ``insert`` adds a whole cyclic tower of cosets at once: for a new element
    x it walks x, 2x, 3x, ... and unions the coset H + kx for each step that
    lands outside the current subgroup H, which keeps the number of insert
    calls logarithmic in the subgroup size.
    """

    def __init__(self, B: FiniteBrace):
        self.B = B
        self.mask = np.zeros(B.order, dtype=bool)
        self.mask[B.zero()] = True
        self._chunks = [np.array([B.zero()], dtype=np.int64)]
        self.size = 1

    @property
    def members(self) -> np.ndarray:
        if len(self._chunks) > 1:
            self._chunks = [np.concatenate(self._chunks)]
        return self._chunks[0]

    def insert(self, x: int) -> bool:
        x = int(x)
        if self.mask[x]:
            return False
        base = self.members
        rep = x
        while not self.mask[rep]:
            coset = self.B.add(base, rep)
            self.mask[coset] = True
            self._chunks.append(coset)
            self.size += coset.size
            rep = int(self.B.add(rep, x))
        return True

    def insert_many(self, values: np.ndarray) -> bool:
        grew = False
        fresh = np.unique(values[~self.mask[values]])
        for v in fresh:
            if self.insert(int(v)):
                grew = True
        return grew


@dataclass(frozen=True, eq=False)
class IdealRecord:
    """A computed ideal (or left ideal): sorted members plus provenance."""

    members: np.ndarray
    size: int
    seeds: tuple
    two_sided: bool
    mask: np.ndarray = field(repr=False)

    def contains(self, x) -> bool:
        return bool(np.all(self.mask[np.asarray(x, dtype=np.int64)]))

    def key(self) -> bytes:
        return self.members.tobytes()

    def __repr__(self) -> str:
        kind = "ideal" if self.two_sided else "left ideal"
        return f"IdealRecord({kind}, size={self.size}, seeds={self.seeds})"


def _record_from_span(span: _AdditiveSpan, seeds, two_sided: bool) -> IdealRecord:
    return IdealRecord(
        members=np.sort(span.members),
        size=span.size,
        seeds=tuple(int(s) for s in seeds),
        two_sided=two_sided,
        mask=span.mask,
    )


def ideal_closure(
    B: FiniteBrace,
    seeds,
    mode: str = "two_sided",
    budget: int = 1_000_000,
) -> IdealRecord:
    """Smallest (left) ideal containing ``seeds``.

    Fixpoint of three closures: additive span, lambda images, and (for
    two-sided ideals) conjugation, the latter two taken over a multiplicative
    generating set of B, which suffices because both kinds of maps compose
    multiplicatively in the subscript. Raises BudgetExceededError if the
    closure outgrows ``budget`` before completing.
    """
    if mode not in ("left", "two_sided"):
        raise ValueError(f"unknown mode {mode!r}")
    two_sided = mode == "two_sided"
    seed_list = [int(s) for s in np.atleast_1d(np.asarray(seeds, dtype=np.int64)).ravel()]
    span = _AdditiveSpan(B)
    for s in seed_list:
        if not 0 <= s < B.order:
            raise ValueError(f"seed {s} outside carrier")
        span.insert(s)

    gens = B.multiplicative_generators()
    inv_gens = B.inv(gens)
    ptr = 0
    while ptr < span.size and span.size < B.order:
        if span.size > budget:
            raise BudgetExceededError(f"closure exceeded budget {budget}")
        batch = span.members[ptr:]
        ptr = span.size
        for g, gi in zip(gens, inv_gens):
            span.insert_many(B.lam(g, batch))
            if two_sided:
                span.insert_many(B.mul(B.mul(g, batch), gi))
            if span.size == B.order:
                break
    return _record_from_span(span, seed_list, two_sided)


def _as_members(obj) -> np.ndarray:
    members = getattr(obj, "members", obj)
    return np.unique(np.asarray(members, dtype=np.int64))


def is_left_ideal(B: FiniteBrace, members) -> bool:
    """Exhaustive-equivalent check: additive subgroup, invariant under every lambda."""
    members = _as_members(members)
    if members.size == 0 or members[0] < 0 or members[-1] >= B.order:
        return False
    mask = np.zeros(B.order, dtype=bool)
    mask[members] = True
    if not mask[B.zero()]:
        return False
    span = _AdditiveSpan(B)
    for x in members:
        span.insert(int(x))
        if span.size > members.size:
            return False
    if span.size != members.size:
        return False
    for g in B.multiplicative_generators():
        if not np.all(mask[B.lam(int(g), members)]):
            return False
    return True


def is_ideal(B: FiniteBrace, members) -> bool:
    """Left ideal that is also normal in the multiplicative group."""
    members = _as_members(members)
    if not is_left_ideal(B, members):
        return False
    mask = np.zeros(B.order, dtype=bool)
    mask[members] = True
    for g in B.multiplicative_generators():
        conj = B.mul(B.mul(int(g), members), B.inv(int(g)))
        if not np.all(mask[conj]):
            return False
    return True


@dataclass
class SimplicityResult:
    """Verdict of an exhaustive simplicity scan."""

    simple: bool
    certificate: Optional[IdealRecord]
    closures_run: int


def is_simple(B: FiniteBrace, budget: int = 1_000_000) -> SimplicityResult:
    """Exhaustive test: the closure of every nonzero element must be everything.

    Any closure that stalls below the full carrier is returned as a
    certificate of non-simplicity.
    """
    if B.order == 1:
        return SimplicityResult(False, None, 0)
    closures = 0
    for x in range(B.order):
        if x == B.zero():
            continue
        rec = ideal_closure(B, [x], mode="two_sided", budget=budget)
        closures += 1
        if rec.size != B.order:
            return SimplicityResult(False, rec, closures)
    return SimplicityResult(True, None, closures)


def list_ideals(B: FiniteBrace, budget: int = 1_000_000) -> list[IdealRecord]:
    """All ideals, as closures of singletons completed under pairwise joins."""
    zero_rec = ideal_closure(B, [], mode="two_sided", budget=budget)
    found: dict[bytes, IdealRecord] = {zero_rec.key(): zero_rec}
    for x in range(B.order):
        if x == B.zero():
            continue
        rec = ideal_closure(B, [x], mode="two_sided", budget=budget)
        found.setdefault(rec.key(), rec)
    # close under joins: the join of two ideals is the closure of both seed sets
    changed = True
    while changed:
        changed = False
        records = list(found.values())
        for i in range(len(records)):
            for j in range(i + 1, len(records)):
                a, b = records[i], records[j]
                if a.contains(b.members) or b.contains(a.members):
                    continue
                joined = ideal_closure(
                    B, list(a.seeds) + list(b.seeds), mode="two_sided", budget=budget
                )
                if joined.key() not in found:
                    found[joined.key()] = joined
                    changed = True
    return sorted(found.values(), key=lambda r: (r.size, r.key()))


def additive_generators(B: FiniteBrace, within=None) -> np.ndarray:
    """Greedy additive generating set of the carrier (or of a subgroup's members)."""
    pool = B.elements() if within is None else _as_members(within)
    span = _AdditiveSpan(B)
    gens: list[int] = []
    for x in pool:
        if not span.mask[x]:
            gens.append(int(x))
            span.insert(int(x))
            if span.size == pool.size:
                break
    return np.array(gens if gens else [B.zero()], dtype=np.int64)


def multiplicative_generators(B: FiniteBrace) -> np.ndarray:
    return B.multiplicative_generators()


def star_span(B: FiniteBrace, left, right) -> np.ndarray:
    """Additive span of all products a*b with a in ``left``, b in ``right``.

    Since a*(b + c) = a*b + a*c, the products against an additive generating
    set of ``right`` already span the full set; that reduction is what makes
    this affordable on large carriers (and is cross-checked against the
    brute-force span in the test suite).
    """
    left = _as_members(left)
    right = _as_members(right)
    span = _AdditiveSpan(B)
    for g in additive_generators(B, within=right):
        span.insert_many(np.atleast_1d(B.star(left, int(g))))
    return np.sort(span.members)


@dataclass
class PrimeResult:
    """Verdict of a primeness check against a known ideal lattice."""

    prime: bool
    witness_pair: Optional[tuple]


def is_prime_brace(
    B: FiniteBrace,
    lattice,
    spot_checks: int = 8,
    seed: int = 0,
    budget: int = 1_000_000,
) -> PrimeResult:
    """Primeness given the full ideal lattice: every product of nonzero ideals is nonzero.

    The caller supplies the lattice (as IdealRecords or member arrays); it
    must contain the zero ideal and the full brace, every entry must verify
    as an ideal, and seeded spot checks confirm random singleton closures all
    land on lattice entries. Any discrepancy raises IncompleteLatticeError,
    since a missing ideal would make the primeness verdict unsound.
    """
    records = []
    for entry in lattice:
        members = _as_members(entry)
        mask = np.zeros(B.order, dtype=bool)
        mask[members] = True
        records.append(
            IdealRecord(members=members, size=members.size, seeds=(), two_sided=True, mask=mask)
        )
    sizes = {r.size for r in records}
    if 1 not in sizes or B.order not in sizes:
        raise IncompleteLatticeError("lattice must contain the zero ideal and the full brace")
    keys = {r.key() for r in records}
    for r in records:
        if not is_ideal(B, r.members):
            raise IncompleteLatticeError(f"lattice entry of size {r.size} is not an ideal")
    rng = np.random.default_rng(seed)
    for x in rng.integers(1, B.order, size=spot_checks):
        rec = ideal_closure(B, [int(x)], mode="two_sided", budget=budget)
        if rec.key() not in keys:
            raise IncompleteLatticeError(
                f"closure of element {int(x)} (size {rec.size}) is missing from the lattice"
            )
    nonzero = [r for r in records if r.size > 1]
    for left in nonzero:
        for right in nonzero:
            span = star_span(B, left, right)
            if span.size == 1:
                return PrimeResult(False, (left.size, right.size))
    return PrimeResult(True, None)
