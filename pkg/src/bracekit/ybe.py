"""Set-theoretic solution tables derived from braces, checks, and text I/O.

The canonical solution attached to a brace is r(x, y) = (sigma_x(y), gamma),
where sigma_x = lam_x and the second component is lam applied at the inverse
of sigma_x(y); involutivity, non-degeneracy, and the braid relation are then
verifiable facts about the two index tables, not assumptions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .braces import FiniteBrace
from .errors import AxiomsNotVerifiedError, SolutionFormatError

__all__ = [
    "SolutionReport",
    "SolutionTable",
    "check_solution",
    "export_solution",
    "import_solution",
    "solution_from_brace",
]

_HEADER = re.compile(r"^YBE v1 N=(\d+)$")


@dataclass(frozen=True, eq=False)
class SolutionTable:
    """Tables sigma and gamma with r(x, y) = (sigma[x, y], gamma[x, y])."""

    sigma: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=np.int64)
        gamma = np.asarray(self.gamma, dtype=np.int64)
        if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
            raise ValueError("sigma must be a square table")
        if gamma.shape != sigma.shape:
            raise ValueError("gamma must match sigma's shape")
        n = sigma.shape[0]
        for name, table in (("sigma", sigma), ("gamma", gamma)):
            if table.size and (table.min() < 0 or table.max() >= n):
                raise ValueError(f"{name} entries must lie in [0, {n})")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "gamma", gamma)

    @property
    def size(self) -> int:
        return int(self.sigma.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SolutionTable):
            return NotImplemented
        return np.array_equal(self.sigma, other.sigma) and np.array_equal(
            self.gamma, other.gamma
        )

    def __repr__(self) -> str:
        return f"SolutionTable(size={self.size})"


def solution_from_brace(B: FiniteBrace) -> SolutionTable:
    """Tabulate r(x, y) = (lam_x(y), lam_{lam_x(y)^-1}(x)) over all indices.

    Requires a cached passing axiom report on B (run check_axioms first); the
    second component uses lam at the multiplicative inverse, which equals the
    inverse automorphism because lam is a homomorphism into Aut(B, +).
    """
    report = getattr(B, "_axiom_report", None)
    if report is None or not report.ok:
        raise AxiomsNotVerifiedError(
            "no passing axiom report cached on this brace; run check_axioms first"
        )
    idx = B.elements()
    sigma = B.lam(idx[:, None], idx[None, :])
    gamma = B.lam(B.inv(sigma), idx[:, None])
    return SolutionTable(sigma=sigma, gamma=gamma)


@dataclass(frozen=True)
class SolutionReport:
    """Outcome of the three solution checks."""

    ok: bool
    involutive: bool
    nondegenerate: bool
    braid: bool
    braid_mode: str
    braid_checked: int
    counterexample: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "involutive": self.involutive,
            "nondegenerate": self.nondegenerate,
            "braid": self.braid,
            "braid_mode": self.braid_mode,
            "braid_checked": self.braid_checked,
            "counterexample": None
            if self.counterexample is None
            else list(self.counterexample),
        }


def _rows_are_permutations(table: np.ndarray) -> bool:
    n = table.shape[0]
    return bool(np.array_equal(np.sort(table, axis=1), np.tile(np.arange(n), (n, 1))))


def _braid_on(sigma, gamma, X, Y, Z):
    """Both braid words applied to the given triples; returns (lhs, rhs)."""

    def r12(x, y, z):
        return sigma[x, y], gamma[x, y], z

    def r23(x, y, z):
        return x, sigma[y, z], gamma[y, z]

    a = r12(*r23(*r12(X, Y, Z)))
    b = r23(*r12(*r23(X, Y, Z)))
    return a, b


def check_solution(
    table: SolutionTable,
    braid_cap: int = 200,
    trials: int = 1_000_000,
    seed: int = 0,
) -> SolutionReport:
    """Verify involutivity, non-degeneracy, and the braid relation.

    Involutivity and non-degeneracy are always exhaustive (N^2 pairs and 2N
    bijection checks).  The braid relation runs over all N^3 triples up to
    braid_cap, and over `trials` seeded random triples beyond it.
    """
    sigma, gamma = table.sigma, table.gamma
    n = table.size
    counterexample = None

    nondegenerate = _rows_are_permutations(sigma) and _rows_are_permutations(gamma.T)

    X, Y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    s, g = sigma[X, Y], gamma[X, Y]
    involutive = bool(
        np.array_equal(sigma[s, g], X) and np.array_equal(gamma[s, g], Y)
    )
    if not involutive:
        bad = np.argwhere((sigma[s, g] != X) | (gamma[s, g] != Y))[0]
        counterexample = (int(bad[0]), int(bad[1]))

    braid = True
    if n <= braid_cap:
        mode = "exhaustive"
        checked = n**3
        step = max(1, 2_000_000 // max(1, n * n))
        for lo in range(0, n, step):
            xs = np.arange(lo, min(lo + step, n))
            X3, Y3, Z3 = np.meshgrid(xs, np.arange(n), np.arange(n), indexing="ij")
            lhs, rhs = _braid_on(sigma, gamma, X3, Y3, Z3)
            agree = (lhs[0] == rhs[0]) & (lhs[1] == rhs[1]) & (lhs[2] == rhs[2])
            if not bool(np.all(agree)):
                braid = False
                bad = np.argwhere(~agree)[0]
                counterexample = counterexample or (
                    int(xs[bad[0]]),
                    int(bad[1]),
                    int(bad[2]),
                )
                break
    else:
        mode = "sampled"
        checked = int(trials)
        rng = np.random.default_rng(seed)
        X3, Y3, Z3 = rng.integers(0, n, size=(3, checked))
        lhs, rhs = _braid_on(sigma, gamma, X3, Y3, Z3)
        agree = (lhs[0] == rhs[0]) & (lhs[1] == rhs[1]) & (lhs[2] == rhs[2])
        if not bool(np.all(agree)):
            braid = False
            bad = int(np.argwhere(~agree)[0][0])
            counterexample = counterexample or (
                int(X3[bad]),
                int(Y3[bad]),
                int(Z3[bad]),
            )

    ok = involutive and nondegenerate and braid
    return SolutionReport(
        ok=ok,
        involutive=involutive,
        nondegenerate=nondegenerate,
        braid=braid,
        braid_mode=mode,
        braid_checked=checked,
        counterexample=counterexample,
    )


def _render(table: SolutionTable) -> bytes:
    lines = [f"YBE v1 N={table.size}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in table.sigma)
    lines.append("")
    lines.extend(" ".join(str(int(v)) for v in row) for row in table.gamma)
    return ("\n".join(lines) + "\n").encode("ascii")


def export_solution(table: SolutionTable, destination) -> int:
    """Write the YBE v1 text form; returns the number of bytes written."""
    payload = _render(table)
    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        Path(destination).write_bytes(payload)
    return len(payload)


def _parse_row(line: str, n: int, what: str, lineno: int) -> list[int]:
    parts = line.split(" ")
    if len(parts) != n:
        raise SolutionFormatError(
            f"line {lineno}: expected {n} {what} entries, got {len(parts)}"
        )
    try:
        row = [int(p) for p in parts]
    except ValueError as exc:
        raise SolutionFormatError(f"line {lineno}: non-integer entry") from exc
    if any(v < 0 or v >= n for v in row):
        raise SolutionFormatError(f"line {lineno}: entry out of range [0, {n})")
    return row


def import_solution(source) -> SolutionTable:
    """Parse the YBE v1 text form from a path, bytes, or readable object."""
    if isinstance(source, bytes):
        text = source.decode("ascii")
    elif hasattr(source, "read"):
        data = source.read()
        text = data.decode("ascii") if isinstance(data, bytes) else data
    else:
        text = Path(source).read_bytes().decode("ascii")
    lines = text.split("\n")
    if not lines or _HEADER.match(lines[0]) is None:
        raise SolutionFormatError("missing or malformed 'YBE v1 N=<N>' header")
    n = int(_HEADER.match(lines[0]).group(1))
    expected = 1 + n + 1 + n
    body = lines[1:]
    if len(body) < expected - 1:
        raise SolutionFormatError(
            f"truncated payload: expected {expected - 1} lines after the header"
        )
    sigma = [_parse_row(body[i], n, "sigma", i + 2) for i in range(n)]
    if body[n] != "":
        raise SolutionFormatError(f"line {n + 2}: expected a blank separator line")
    gamma = [_parse_row(body[n + 1 + i], n, "gamma", n + 3 + i) for i in range(n)]
    trailer = body[2 * n + 1 :]
    if any(t != "" for t in trailer):
        raise SolutionFormatError("unexpected content after the gamma table")
    return SolutionTable(sigma=np.array(sigma), gamma=np.array(gamma))
