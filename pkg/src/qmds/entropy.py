"""Exact subsystem entropies of the joint reference-plus-coded state.

For a pure state built as a uniform superposition over the row space of a
full-row-rank generator H over GF(q), the entropy (in q-ary units) of the
qudits belonging to a column subset equals the dimension of the
intersection of the two column spans of the bipartition.  That rank
identity is the exact oracle used throughout this module; every entropy it
returns is a nonnegative integer.

The joint state of an [[n, k, d]]_q code has k + n registers: the k-qudit
reference block R (treated as atomic here) followed by the coded qudits
Q1..Qn.  Every subsystem entropy should match the size pyramid

    H(S) = min(|S|, (k + n) - |S|),

peaking at k + d - 1; the profile and check functions verify exactly that,
plus the decoding / no-leakage conditions, product-state identities, and
the standard quantum entropy inequalities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code import CodeParams, QuantumMdsCode, to_descriptor
from .linalg import intersection_dim, rank
from .reporting import CheckReport


@dataclass(frozen=True)
class SubsystemSpec:
    """A subsystem of the k + n registers, with R atomic (all k or none).

    q_indices holds 1-based coded-qudit indices; bounds against a concrete
    code are checked where the spec is used.
    """

    include_R: bool
    q_indices: frozenset[int]

    def __init__(self, include_R: bool, q_indices=()):
        object.__setattr__(self, "include_R", bool(include_R))
        idx = frozenset(int(i) for i in q_indices)
        if any(i < 1 for i in idx):
            raise ValueError(f"coded-qudit indices are 1-based: got {sorted(idx)}")
        object.__setattr__(self, "q_indices", idx)

    def size(self, k: int) -> int:
        """Qudit count: R contributes k, each Q_i contributes 1."""
        return (k if self.include_R else 0) + len(self.q_indices)

    def registers(self, k: int) -> tuple[int, ...]:
        """0-based register positions (R block first, then coded qudits)."""
        positions = list(range(k)) if self.include_R else []
        positions += [k + i - 1 for i in sorted(self.q_indices)]
        return tuple(positions)

    def complement(self, n: int) -> "SubsystemSpec":
        return SubsystemSpec(
            not self.include_R,
            frozenset(range(1, n + 1)) - self.q_indices,
        )

    def labels(self) -> tuple[str, ...]:
        names = ("R",) if self.include_R else ()
        return names + tuple(f"Q{i}" for i in sorted(self.q_indices))

    def sort_key(self) -> tuple[int, int]:
        """Canonical subset encoding: (R flag, bitmask with Q1 = bit 0)."""
        return (int(self.include_R), sum(1 << (i - 1) for i in self.q_indices))


def _check_spec(code: QuantumMdsCode, sub: SubsystemSpec) -> None:
    n = code.params.n
    bad = [i for i in sub.q_indices if i > n]
    if bad:
        raise ValueError(f"subsystem indices out of range 1..{n}: {sorted(bad)}")


def register_subset_entropy(code: QuantumMdsCode, registers) -> int:
    """Entropy (q-ary units) of an arbitrary register subset via the rank identity.

    ``registers`` are 0-based positions into the k + n columns of G.  This
    is the general oracle; it also evaluates subsets that split the
    reference block, for which no closed-form expectation is asserted.
    """
    total = code.params.num_registers
    positions = sorted(int(r) for r in registers)
    if len(set(positions)) != len(positions):
        raise ValueError(f"duplicate register positions: {positions}")
    if any(not 0 <= r < total for r in positions):
        raise ValueError(f"register positions must lie in 0..{total - 1}: {positions}")
    m = code.params.generator_rank
    if rank(code.G) != m:
        raise ValueError("generator must have full row rank")
    inside = code.G.column_submatrix(positions)
    outside = code.G.column_submatrix([p for p in range(total) if p not in positions])
    return intersection_dim(inside, outside)


def subsystem_entropy(code: QuantumMdsCode, sub: SubsystemSpec) -> int:
    """Exact entropy of a subsystem (R atomic), in q-ary units.

    Equals the entropy of the complement: the joint state is pure, and the
    rank identity dim(<inside> n <outside>) is symmetric in the bipartition.
    """
    _check_spec(code, sub)
    return register_subset_entropy(code, sub.registers(code.params.k))


def expected_subsystem_entropy(sub_size: int, k: int, d: int) -> int:
    """The size-pyramid value min(size, 2(k+d-1) - size)."""
    total = 2 * (k + d - 1)
    if not 0 <= sub_size <= total:
        raise ValueError(f"subsystem size must lie in [0, {total}]: got {sub_size}")
    return min(sub_size, total - sub_size)


@dataclass(frozen=True)
class ProfileEntry:
    """One profile row; ``spec`` is None for partial-R (extended) rows."""

    spec: SubsystemSpec | None
    labels: tuple[str, ...]
    size: int
    entropy: int
    expected: int | None
    match: bool | None

    def to_dict(self) -> dict:
        return {
            "subsystem": list(self.labels),
            "size": self.size,
            "entropy": self.entropy,
            "expected": self.expected,
            "match": self.match,
        }


@dataclass
class EntropyProfile:
    """All subsystem entropies of one code, with expectations attached."""

    params: CodeParams
    alphas: tuple[int, ...]
    entries: list[ProfileEntry]

    def __post_init__(self):
        self._lookup = {
            (e.spec.include_R, e.spec.q_indices): e.entropy
            for e in self.entries
            if e.spec is not None
        }

    def entropy_of(self, include_R: bool, q_indices) -> int:
        """Entropy of an R-atomic subsystem already present in the profile."""
        return self._lookup[(bool(include_R), frozenset(q_indices))]

    @property
    def all_match(self) -> bool:
        return all(e.match for e in self.entries if e.match is not None)

    def mismatches(self) -> list[ProfileEntry]:
        return [e for e in self.entries if e.match is False]

    def to_dict(self) -> dict:
        descriptor = {
            "q": self.params.q,
            "n": self.params.n,
            "k": self.params.k,
            "d": self.params.d,
            "alphas": list(self.alphas),
        }
        return {"code": descriptor, "entries": [e.to_dict() for e in self.entries]}

    def csv_rows(self) -> list[tuple[int, int]]:
        """Size-aggregated (size, entropy) pairs for figure reproduction.

        R-atomic entries only; a valid code yields one row per size.
        """
        pairs = {
            (e.size, e.entropy) for e in self.entries if e.spec is not None
        }
        return sorted(pairs)


def _entry_for(code: QuantumMdsCode, sub: SubsystemSpec) -> ProfileEntry:
    p = code.params
    size = sub.size(p.k)
    h = subsystem_entropy(code, sub)
    expected = expected_subsystem_entropy(size, p.k, p.d)
    return ProfileEntry(sub, sub.labels(), size, h, expected, h == expected)


def full_profile(code: QuantumMdsCode) -> EntropyProfile:
    """Entropies of all 2 * 2^n subsystems (R in or out, every Q subset).

    Entries are sorted canonically by the (R flag, Q bitmask) encoding so
    output is deterministic and order-independent of evaluation.
    """
    n = code.params.n
    subs = [
        SubsystemSpec(inc, combo)
        for inc in (False, True)
        for size in range(n + 1)
        for combo in itertools.combinations(range(1, n + 1), size)
    ]
    subs.sort(key=SubsystemSpec.sort_key)
    entries = [_entry_for(code, sub) for sub in subs]
    return EntropyProfile(code.params, code.alphas, entries)


def extended_profile(code: QuantumMdsCode) -> EntropyProfile:
    """full_profile plus rows for subsets that split the reference block.

    Partial-R rows are labeled R1..Rk per reference qudit and carry no
    expected value (expected and match are null): the size-pyramid formula
    treats R as atomic, so nothing is asserted for its proper subsets.
    """
    profile = full_profile(code)
    k, n = code.params.k, code.params.n
    extra: list[ProfileEntry] = []
    for r_size in range(1, k):
        for r_part in itertools.combinations(range(k), r_size):
            for q_size in range(n + 1):
                for q_part in itertools.combinations(range(1, n + 1), q_size):
                    registers = list(r_part) + [k + i - 1 for i in q_part]
                    h = register_subset_entropy(code, registers)
                    labels = tuple(f"R{r + 1}" for r in r_part) + tuple(
                        f"Q{i}" for i in q_part
                    )
                    extra.append(
                        ProfileEntry(None, labels, len(registers), h, None, None)
                    )
    return EntropyProfile(code.params, code.alphas, profile.entries + extra)


def check_decoding_condition(profile: EntropyProfile) -> CheckReport:
    """Recovery and no-leakage conditions on the profile entropies.

    For every surviving set I of size n-(d-1) the mutual information
    between R and Q_I must equal 2H(R) = 2k (all reference entanglement is
    preserved); for every potential erasure set of size d-1 it must vanish
    (nothing leaks to qudits that may be lost).  All checks are exact
    integer identities.
    """
    p = profile.params
    n, k, d = p.n, p.k, p.d
    H = profile.entropy_of
    h_r = H(True, ())
    report = CheckReport(f"decoding conditions for [[{n},{k},{d}]]_{p.q}")
    for surviving in itertools.combinations(range(1, n + 1), n - (d - 1)):
        mutual = h_r + H(False, surviving) - H(True, surviving)
        report.add(
            f"recovery I={list(surviving)}: I(R;Q_I) = {mutual}",
            mutual == 2 * k,
            f"expected 2k = {2 * k}",
        )
    for erasable in itertools.combinations(range(1, n + 1), d - 1):
        mutual = h_r + H(False, erasable) - H(True, erasable)
        report.add(
            f"no-leakage I={list(erasable)}: I(R;Q_I) = {mutual}",
            mutual == 0,
            "expected 0",
        )
    return report


def check_entropy_inequalities(profile: EntropyProfile) -> CheckReport:
    """Subadditivity, triangle, strong subadditivity, weak monotonicity.

    Runs over every assignment of the n + 1 atomic parts {R, Q1..Qn} to
    three disjoint groups (A, B, C) -- 3^(n+1) assignments, each checked
    exactly -- which covers every inequality instance over atomic-part
    unions the entropy characterization relies on.
    """
    p = profile.params
    n = p.n
    H = profile.entropy_of

    def h(group):
        include_r, qs = group
        return H(include_r, qs)

    def union(g1, g2):
        return (g1[0] or g2[0], g1[1] | g2[1])

    families = {
        "subadditivity H(AB) <= H(A)+H(B)": [],
        "triangle |H(A)-H(B)| <= H(AB)": [],
        "strong subadditivity H(AB)+H(BC) >= H(ABC)+H(B)": [],
        "weak monotonicity H(AB)+H(BC) >= H(A)+H(C)": [],
    }
    total = 3 ** (n + 1)
    for assign in itertools.product((0, 1, 2), repeat=n + 1):
        groups = []
        for which in (0, 1, 2):
            include_r = assign[0] == which
            qs = frozenset(i for i in range(1, n + 1) if assign[i] == which)
            groups.append((include_r, qs))
        a, b, c = groups
        ha, hb, hc = h(a), h(b), h(c)
        hab, hbc = h(union(a, b)), h(union(b, c))
        habc = h(union(union(a, b), c))
        checks = [
            ("subadditivity H(AB) <= H(A)+H(B)", hab <= ha + hb),
            ("triangle |H(A)-H(B)| <= H(AB)", abs(ha - hb) <= hab),
            ("strong subadditivity H(AB)+H(BC) >= H(ABC)+H(B)", hab + hbc >= habc + hb),
            ("weak monotonicity H(AB)+H(BC) >= H(A)+H(C)", hab + hbc >= ha + hc),
        ]
        for name, ok in checks:
            if not ok:
                families[name].append(assign)

    report = CheckReport(
        f"entropy inequalities for [[{n},{p.k},{p.d}]]_{p.q}"
    )
    for name, violations in families.items():
        detail = f"{total} assignments, {len(violations)} violations"
        if violations:
            detail += f"; first violating assignment {violations[0]}"
        report.add(name, not violations, detail)
    return report


def product_state_checks(profile: EntropyProfile) -> CheckReport:
    """Product-state identities among small groups of coded qudits.

    Any group of at most k coded qudits is in a product state with any
    disjoint group of at most d-1 coded qudits (entropies add), and any
    group of at most k coded qudits is itself fully product (entropy is
    the sum of single-qudit entropies).
    """
    p = profile.params
    n, k, d = p.n, p.k, p.d
    H = profile.entropy_of
    report = CheckReport(f"product-state identities for [[{n},{k},{d}]]_{p.q}")

    pair_violations = []
    pair_count = 0
    for s1 in range(k + 1):
        for first in itertools.combinations(range(1, n + 1), s1):
            rest = [i for i in range(1, n + 1) if i not in first]
            for s2 in range(d):
                for second in itertools.combinations(rest, s2):
                    pair_count += 1
                    joint = H(False, first + second)
                    split = H(False, first) + H(False, second)
                    if joint != split:
                        pair_violations.append((first, second, joint, split))
    detail = f"{pair_count} disjoint pairs, {len(pair_violations)} violations"
    if pair_violations:
        detail += f"; first: {pair_violations[0]}"
    report.add(
        "H(K1 u K2) = H(K1)+H(K2) for |K1| <= k, |K2| <= d-1 disjoint",
        not pair_violations,
        detail,
    )

    sum_violations = []
    sum_count = 0
    for size in range(k + 1):
        for group in itertools.combinations(range(1, n + 1), size):
            sum_count += 1
            joint = H(False, group)
            split = sum(H(False, (i,)) for i in group)
            if joint != split:
                sum_violations.append((group, joint, split))
    detail = f"{sum_count} groups, {len(sum_violations)} violations"
    if sum_violations:
        detail += f"; first: {sum_violations[0]}"
    report.add(
        "H(K) = sum_i H(Qi) for |K| <= k",
        not sum_violations,
        detail,
    )
    return report
