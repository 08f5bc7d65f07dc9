"""Construction and validation of Vandermonde-based [[n, k, d]]_q quantum MDS codes.

An [[n, k, d]]_q code here encodes k source qudits into n coded qudits over
a prime field GF(q), q >= n, with the maximum-distance-separable equality
n = k + 2(d - 1).  The encoder is the quantum analogue of a Reed-Solomon
code: the generator rows are decreasing powers of n distinct evaluation
points, so every maximal square submatrix is invertible and any n - (d - 1)
coded qudits suffice to recover the source.

The joint pure state of the k-qudit reference block R and the n coded
qudits is the uniform superposition over the row space of

    G = [E | AB],   E = the first k standard basis columns,

with registers ordered R first, then Q1..Qn; the row indexed by the
message-plus-seed vector (a, b) lands on the basis state |a, (a, b) AB>.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .gf import Field, is_prime
from .linalg import MatrixGF, rank
from .reporting import CheckReport


@dataclass(frozen=True)
class CodeParams:
    """Parameters (n, k, d, q) of an [[n, k, d]]_q quantum MDS code.

    Invariants enforced at construction:
      * k >= 1, d >= 2;
      * n = k + 2(d - 1)  (MDS equality of the quantum Singleton bound);
      * q prime and q >= n (so n distinct evaluation points exist).
    """

    n: int
    k: int
    d: int
    q: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1: got k={self.k}")
        if self.d < 2:
            raise ValueError(f"d must be at least 2: got d={self.d}")
        if self.n != self.k + 2 * (self.d - 1):
            raise ValueError(
                f"n must equal k+2(d-1): got n={self.n}, k={self.k}, d={self.d} "
                f"(expected n={self.k + 2 * (self.d - 1)})"
            )
        if not is_prime(self.q):
            raise ValueError(f"q must be prime: got q={self.q}")
        if self.q < self.n:
            raise ValueError(f"q must be at least n: got q={self.q} < n={self.n}")

    @property
    def generator_rank(self) -> int:
        """Number of generator rows, k + d - 1 = (k + n) / 2."""
        return self.k + self.d - 1

    @property
    def num_registers(self) -> int:
        """Total qudit count of the joint state: k reference + n coded."""
        return self.k + self.n


class QuantumMdsCode:
    """A concrete [[n, k, d]]_q code with its Vandermonde generator.

    Attributes:
        params: the validated CodeParams.
        field: GF(q).
        alphas: the n distinct evaluation points (ints in [0, q-1]).
        AB: (k+d-1) x n matrix whose row r holds alpha_i ** (k+d-2-r);
            the bottom row is all ones (0**0 = 1).
        A: first k rows of AB.
        B: last d-1 rows of AB.
        G: (k+d-1) x (k+n) joint-state generator [E | AB], E the first k
           standard basis columns (the reference block R).

    Construction is deterministic: identical parameters and evaluation
    points always produce identical matrices.  Instances are immutable.
    """

    def __init__(self, params: CodeParams, alphas=None):
        self.params = params
        self.field = Field(params.q)
        n, k, d, q = params.n, params.k, params.d, params.q

        if alphas is None:
            alphas = tuple(range(n))
        else:
            alphas = tuple(int(a) for a in alphas)
            if len(alphas) != n:
                raise ValueError(
                    f"need exactly n={n} evaluation points, got {len(alphas)}"
                )
            if any(not 0 <= a < q for a in alphas):
                raise ValueError(
                    f"evaluation points must lie in [0, {q - 1}]: got {list(alphas)}"
                )
        if len(set(alphas)) != n:
            raise ValueError(f"evaluation points must be distinct: got {list(alphas)}")
        self.alphas = alphas

        m = params.generator_rank
        ab = np.array(
            [[pow(a, m - 1 - r, q) for a in alphas] for r in range(m)],
            dtype=np.int64,
        )
        self.AB = MatrixGF(ab, self.field)
        self.A = MatrixGF(ab[:k, :], self.field)
        self.B = MatrixGF(ab[k:, :], self.field)

        ref_block = np.zeros((m, k), dtype=np.int64)
        ref_block[:k, :k] = np.eye(k, dtype=np.int64)
        self.G = MatrixGF(np.hstack((ref_block, ab)), self.field)

        # distinct points make AB full rank; guard anyway, the entropy
        # oracle's rank hypothesis rests on it
        if rank(self.AB) != m:
            raise ValueError("generator is rank-deficient; evaluation points invalid")

    def __repr__(self) -> str:
        p = self.params
        return f"QuantumMdsCode([[{p.n},{p.k},{p.d}]]_{p.q}, alphas={list(self.alphas)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuantumMdsCode)
            and self.params == other.params
            and self.alphas == other.alphas
        )

    def __hash__(self):
        return hash((self.params, self.alphas))


def construct(params: CodeParams, alphas=None) -> QuantumMdsCode:
    """Build the code for ``params``; default evaluation points are 0..n-1."""
    return QuantumMdsCode(params, alphas)


def _check_surviving(code: QuantumMdsCode, surviving) -> list[int]:
    """Validate a surviving set of 1-based coded-qudit indices."""
    n, d = code.params.n, code.params.d
    idx = sorted(int(i) for i in surviving)
    if len(set(idx)) != len(idx):
        raise ValueError(f"surviving set has duplicate indices: {idx}")
    if any(not 1 <= i <= n for i in idx):
        raise ValueError(f"surviving indices must lie in 1..{n}: got {idx}")
    need = n - (d - 1)
    if len(idx) != need:
        raise ValueError(
            f"surviving set must have exactly n-(d-1)={need} indices, got {len(idx)}"
        )
    return idx


def erasure_submatrices(code: QuantumMdsCode, surviving) -> tuple[MatrixGF, MatrixGF]:
    """Column submatrices of AB for a surviving set and its complement.

    ``surviving`` is the set of n-(d-1) coded-qudit indices (1-based) that
    were not erased.  Returns (AB_surviving, AB_erased), columns in
    ascending index order.  The surviving block is a full-size square
    Vandermonde submatrix and the bottom (d-1)-row block of the erased part
    is itself square Vandermonde; both invertibility facts are asserted
    here because the decoding unitaries depend on them.
    """
    idx = _check_surviving(code, surviving)
    erased = [i for i in range(1, code.params.n + 1) if i not in idx]
    ab_s = code.AB.column_submatrix([i - 1 for i in idx])
    ab_e = code.AB.column_submatrix([i - 1 for i in erased])

    m = code.params.generator_rank
    if rank(ab_s) != m:
        raise ValueError(f"surviving-column block {idx} is not invertible")
    b_e = ab_e.row_submatrix(range(code.params.k, m))
    if rank(b_e) != code.params.d - 1:
        raise ValueError(f"erased-column seed block {erased} is not invertible")
    return ab_s, ab_e


def validate(code: QuantumMdsCode) -> CheckReport:
    """Exhaustively check the code invariants; failures become report entries.

    Checks evaluation-point distinctness, the rank of AB and G, the
    reference-block layout of G, invertibility of every full-size square
    column submatrix of AB, and invertibility of every (d-1)-column
    submatrix of B.
    """
    p = code.params
    m = p.generator_rank
    report = CheckReport(f"validation of [[{p.n},{p.k},{p.d}]]_{p.q}")

    report.add(
        "evaluation points distinct",
        len(set(code.alphas)) == p.n,
        f"alphas={list(code.alphas)}",
    )
    report.add(f"rank(AB) = {m}", rank(code.AB) == m)
    report.add(f"rank(G) = {m}", rank(code.G) == m)

    ref = code.G.array[:, : p.k]
    expected_ref = np.zeros((m, p.k), dtype=np.int64)
    expected_ref[: p.k, : p.k] = np.eye(p.k, dtype=np.int64)
    report.add(
        "reference block of G is the first k standard basis columns",
        bool(np.array_equal(ref, expected_ref)),
    )

    for cols in itertools.combinations(range(p.n), m):
        sub = code.AB.column_submatrix(cols)
        report.add(
            f"AB columns {[c + 1 for c in cols]} invertible",
            rank(sub) == m,
        )
    for cols in itertools.combinations(range(p.n), p.d - 1):
        sub = code.B.column_submatrix(cols)
        report.add(
            f"B columns {[c + 1 for c in cols]} invertible",
            rank(sub) == p.d - 1,
        )
    return report


# JSON code descriptor: {"q":, "n":, "k":, "d":, "alphas": [...]} -- accepted
# as CLI input and emitted by the construct command.

def to_descriptor(code: QuantumMdsCode) -> dict:
    p = code.params
    return {"q": p.q, "n": p.n, "k": p.k, "d": p.d, "alphas": list(code.alphas)}


def from_descriptor(descriptor: dict) -> QuantumMdsCode:
    """Build a code from a descriptor dict, validating shape and values."""
    if not isinstance(descriptor, dict):
        raise ValueError("code descriptor must be a JSON object")
    missing = [key for key in ("q", "n", "k", "d") if key not in descriptor]
    if missing:
        raise ValueError(f"code descriptor missing keys: {missing}")
    for key in ("q", "n", "k", "d"):
        if not isinstance(descriptor[key], int):
            raise ValueError(f"descriptor field {key!r} must be an integer")
    params = CodeParams(
        n=descriptor["n"], k=descriptor["k"], d=descriptor["d"], q=descriptor["q"]
    )
    alphas = descriptor.get("alphas")
    if alphas is not None and not isinstance(alphas, (list, tuple)):
        raise ValueError("descriptor field 'alphas' must be a list of integers")
    return QuantumMdsCode(params, alphas)


def smallest_prime_at_least(n: int) -> int:
    """The least prime >= n (Bertrand guarantees one below 2n)."""
    candidate = max(n, 2)
    while not is_prime(candidate):
        candidate += 1
    return candidate
