"""Integer-coefficient qubit encodings and the diagonal SVP Hamiltonian.

Each lattice coefficient x_i in [-k, k] occupies one register of qubits;
registers are concatenated in basis-vector order and bit p of register i
is global bit i*width + p (little-endian: bit 0 is the least significant
bit of the basis-state index).  A set bit has q = 1, i.e. sigma_z
eigenvalue -1 under the q = (1 - sigma_z)/2 convention used throughout.

Encodings and register widths:

    one-hot         2k+1 qubits, x = -k + p for a single set bit at slot p;
                    needs the penalty term lambda * sum_i (w_i - 1)^2
    hamming-weight  2k qubits,   x = k - popcount (always feasible)
    binary          k+1 qubits,  x = sum_p 2^p q_p - 2^k (always feasible)

The problem Hamiltonian is diagonal with entries

    H_p[s] = sum_ij G_ij Q_i(s) Q_j(s),        J = 1

where Q_i(s) is the register-i eigenvalue; for one-hot, infeasible
bitstrings keep their natural Q = sum_p (-k+p) q_p value and are pushed up
by the penalty instead of being masked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ONE_HOT = "one-hot"
HAMMING_WEIGHT = "hamming-weight"
BINARY = "binary"
KINDS = (ONE_HOT, HAMMING_WEIGHT, BINARY)

# Simulation guard: full statevectors beyond this are refused.
MAX_QUBITS = 24


@dataclass(frozen=True)
class EncodingScheme:
    """Encoding kind plus the (n, k) shape of the coefficient box."""

    kind: str
    k: int
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown encoding kind {self.kind!r}, expected one of {KINDS}")
        if self.k < 1 or self.n < 1:
            raise ValueError(f"need k >= 1 and n >= 1, got k={self.k}, n={self.n}")
        if self.num_qubits > MAX_QUBITS:
            raise ValueError(
                f"{self.num_qubits} qubits exceeds the {MAX_QUBITS}-qubit simulation guard"
            )

    @property
    def qubits_per_register(self) -> int:
        if self.kind == ONE_HOT:
            return 2 * self.k + 1
        if self.kind == HAMMING_WEIGHT:
            return 2 * self.k
        return self.k + 1

    @property
    def num_qubits(self) -> int:
        return self.n * self.qubits_per_register

    def register_bits(self, bits: int, i: int) -> int:
        """Bits of register i extracted from a basis-state index."""
        w = self.qubits_per_register
        return (bits >> (i * w)) & ((1 << w) - 1)


@dataclass(frozen=True)
class DiagonalHamiltonian:
    """Energy per computational basis state of an N-qubit diagonal operator."""

    energies: np.ndarray
    label: str
    num_qubits: int

    def __post_init__(self):
        arr = np.asarray(self.energies, dtype=float)
        if arr.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"expected {1 << self.num_qubits} entries for {self.num_qubits} qubits, "
                f"got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("Hamiltonian entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "energies", arr)

    @property
    def dim(self) -> int:
        return self.energies.shape[0]


@dataclass(frozen=True)
class DecodeResult:
    """Decoded coefficient vector, or the first register violating one-hot."""

    x: tuple[int, ...] | None
    infeasible_register: int | None = None

    @property
    def feasible(self) -> bool:
        return self.x is not None


def decode(scheme: EncodingScheme, bits: int) -> DecodeResult:
    """Map a basis-state index to its integer coefficient vector."""
    if not 0 <= bits < (1 << scheme.num_qubits):
        raise ValueError(f"bitstring {bits} out of range for {scheme.num_qubits} qubits")
    xs = []
    for i in range(scheme.n):
        reg = scheme.register_bits(bits, i)
        if scheme.kind == ONE_HOT:
            if reg == 0 or (reg & (reg - 1)) != 0:
                return DecodeResult(x=None, infeasible_register=i)
            xs.append(-scheme.k + reg.bit_length() - 1)
        elif scheme.kind == HAMMING_WEIGHT:
            xs.append(scheme.k - reg.bit_count())
        else:
            xs.append(reg - (1 << scheme.k))
    return DecodeResult(x=tuple(xs))


def encode_states(scheme: EncodingScheme, x) -> list[int]:
    """All basis-state indices whose decode equals the coefficient vector x.

    One per register for one-hot and binary; C(2k, k - x_i) choices per
    register for hamming-weight.
    """
    x = tuple(int(v) for v in x)
    if len(x) != scheme.n:
        raise ValueError(f"expected {scheme.n} coefficients, got {len(x)}")
    w = scheme.qubits_per_register
    per_register: list[list[int]] = []
    for xi in x:
        if scheme.kind == BINARY:
            lo, hi = -(1 << scheme.k), (1 << scheme.k) - 1
            if not lo <= xi <= hi:
                raise ValueError(f"{xi} outside binary range [{lo}, {hi}]")
            per_register.append([xi + (1 << scheme.k)])
            continue
        if not -scheme.k <= xi <= scheme.k:
            raise ValueError(f"{xi} outside coefficient range [-{scheme.k}, {scheme.k}]")
        if scheme.kind == ONE_HOT:
            per_register.append([1 << (xi + scheme.k)])
        else:
            ones = scheme.k - xi
            per_register.append([r for r in range(1 << w) if r.bit_count() == ones])
    states = [0]
    for i, choices in enumerate(per_register):
        states = [s | (r << (i * w)) for s in states for r in choices]
    return sorted(states)


def _register_q_table(scheme: EncodingScheme) -> np.ndarray:
    """Q eigenvalue for every value of a single register."""
    w = scheme.qubits_per_register
    regs = np.arange(1 << w, dtype=np.int64)
    if scheme.kind == BINARY:
        return regs.astype(float) - float(1 << scheme.k)
    pops = np.bitwise_count(regs).astype(float)
    if scheme.kind == HAMMING_WEIGHT:
        return scheme.k - pops
    # one-hot: sum_p (-k+p) q_p = sum_p p*q_p - k*popcount
    slot_sum = np.zeros(1 << w)
    for p in range(w):
        slot_sum += p * ((regs >> p) & 1)
    return slot_sum - scheme.k * pops


def _register_values(scheme: EncodingScheme, table: np.ndarray) -> np.ndarray:
    """Broadcast a per-register table over all 2^N states; shape (n, 2^N)."""
    w = scheme.qubits_per_register
    states = np.arange(1 << scheme.num_qubits, dtype=np.int64)
    out = np.empty((scheme.n, states.shape[0]))
    for i in range(scheme.n):
        out[i] = table[(states >> (i * w)) & ((1 << w) - 1)]
    return out


def feasible_mask(scheme: EncodingScheme) -> np.ndarray:
    """Boolean mask over all 2^N basis states; all-true except one-hot."""
    if scheme.kind != ONE_HOT:
        return np.ones(1 << scheme.num_qubits, dtype=bool)
    w = scheme.qubits_per_register
    regs = np.arange(1 << w, dtype=np.int64)
    ok = np.bitwise_count(regs) == 1
    mask = np.ones(1 << scheme.num_qubits, dtype=bool)
    states = np.arange(1 << scheme.num_qubits, dtype=np.int64)
    for i in range(scheme.n):
        mask &= ok[(states >> (i * w)) & ((1 << w) - 1)]
    return mask


def build_problem(scheme: EncodingScheme, G: np.ndarray) -> DiagonalHamiltonian:
    """H_p[s] = Q(s)^T G Q(s) over the full 2^N-state space."""
    G = np.asarray(G, dtype=float)
    if G.shape != (scheme.n, scheme.n):
        raise ValueError(f"Gram matrix shape {G.shape} does not match n={scheme.n}")
    Q = _register_values(scheme, _register_q_table(scheme))
    energies = np.einsum("is,ij,js->s", Q, G, Q)
    return DiagonalHamiltonian(energies=energies, label="problem", num_qubits=scheme.num_qubits)


def build_penalty(scheme: EncodingScheme, lam: float) -> DiagonalHamiltonian:
    """One-hot constraint penalty lambda * sum_i (w_i - 1)^2, zero on
    feasible states.  The other encodings are penalty-free by construction."""
    if scheme.kind != ONE_HOT:
        raise ValueError(f"penalty is only defined for one-hot, not {scheme.kind!r}")
    if lam <= 0:
        raise ValueError(f"penalty strength must be positive, got {lam}")
    w = scheme.qubits_per_register
    regs = np.arange(1 << w, dtype=np.int64)
    table = (np.bitwise_count(regs).astype(float) - 1.0) ** 2
    weights = _register_values(scheme, table)
    return DiagonalHamiltonian(
        energies=lam * weights.sum(axis=0), label="penalty", num_qubits=scheme.num_qubits
    )


def compose_svp(
    problem: DiagonalHamiltonian, penalty: DiagonalHamiltonian | None = None
) -> DiagonalHamiltonian:
    """H_SVP = H_p + H_penalty (penalty absent for penalty-free encodings)."""
    if penalty is None:
        energies = problem.energies.copy()
    else:
        if penalty.dim != problem.dim:
            raise ValueError(f"length mismatch: {problem.dim} vs {penalty.dim}")
        energies = problem.energies + penalty.energies
    return DiagonalHamiltonian(energies=energies, label="svp", num_qubits=problem.num_qubits)


def choose_lambda(G: np.ndarray, k: int, strategy="conservative") -> float:
    """Penalty strength.  "conservative" returns k^2 * sum|G_ij| + 1, which
    exceeds the largest box norm so violating states can never sit at or
    below the first excited level; a number is passed through as-is."""
    if isinstance(strategy, (int, float)) and not isinstance(strategy, bool):
        return float(strategy)
    if strategy == "conservative":
        G = np.asarray(G, dtype=float)
        return float(k**2 * np.abs(G).sum() + 1.0)
    raise ValueError(f"unknown lambda strategy {strategy!r}")
