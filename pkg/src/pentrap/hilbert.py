"""Dense two-spin (x) boson Hilbert space and the handful of operations on it.

Basis ordering
--------------
A state lives in (spin1 (x) spin2) (x) Fock.  Spins are most significant:

    index(s1, s2, n) = (2*s1 + s2) * (n_max + 1) + n,   s = 0 (down), 1 (up)

so amplitudes reshape to (4, n_max+1) with rows |dd>, |du>, |ud>, |uu>.
Dimensions stay tiny (4*(n_max+1) <= a few hundred), so everything is a
dense complex matrix and evolution goes through an eigendecomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .constants import CODATA
from .errors import ConfigError, PhysicsDomainError

DOWN, UP = 0, 1

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


@dataclass(frozen=True)
class HilbertSpace:
    """Two spins and one boson mode truncated at ``fock_cutoff`` quanta."""

    fock_cutoff: int

    def __post_init__(self) -> None:
        if int(self.fock_cutoff) != self.fock_cutoff or self.fock_cutoff < 4:
            raise ConfigError("fock_cutoff must be an integer >= 4")

    @property
    def n_levels(self) -> int:
        return self.fock_cutoff + 1

    @property
    def dimension(self) -> int:
        return 4 * self.n_levels

    def index(self, s1: int, s2: int, n: int) -> int:
        """Flat index of basis state |s1 s2> (x) |n> (s: 0 down, 1 up)."""
        if s1 not in (0, 1) or s2 not in (0, 1):
            raise ValueError("spin labels must be 0 (down) or 1 (up)")
        if not 0 <= n <= self.fock_cutoff:
            raise ValueError(f"boson level {n} outside cutoff {self.fock_cutoff}")
        return (2 * s1 + s2) * self.n_levels + n

    def labels(self) -> list[str]:
        arrows = {0: "d", 1: "u"}
        return [
            f"|{arrows[s1]}{arrows[s2]},{n}>"
            for s1 in (0, 1)
            for s2 in (0, 1)
            for n in range(self.n_levels)
        ]


@dataclass(frozen=True)
class QuantumState:
    """Normalized pure state; ``amplitudes`` is a complex vector.

    Treat the amplitude array as read-only.
    """

    space: HilbertSpace
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.shape != (self.space.dimension,):
            raise ValueError(
                f"amplitude vector has shape {amp.shape}, expected "
                f"({self.space.dimension},)"
            )
        object.__setattr__(self, "amplitudes", amp)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def overlap(self, other: "QuantumState") -> complex:
        _check_same_space(self.space, other.space)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def spin_boson_matrix(self) -> np.ndarray:
        """Amplitudes as a (4, n_levels) matrix: spin row, boson column."""
        return self.amplitudes.reshape(4, self.space.n_levels)


@dataclass(frozen=True)
class Operator:
    """Dense operator on a :class:`HilbertSpace`."""

    space: HilbertSpace
    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=complex)
        d = self.space.dimension
        if mat.shape != (d, d):
            raise ValueError(f"matrix has shape {mat.shape}, expected ({d}, {d})")
        object.__setattr__(self, "matrix", mat)

    def hermiticity_defect(self) -> float:
        """Relative norm of the anti-Hermitian part."""
        scale = max(float(np.linalg.norm(self.matrix)), 1.0e-300)
        return float(np.linalg.norm(self.matrix - self.matrix.conj().T)) / scale

    def __matmul__(self, other: "Operator") -> "Operator":
        _check_same_space(self.space, other.space)
        return Operator(self.space, self.matrix @ other.matrix)

    def apply(self, state: QuantumState) -> QuantumState:
        _check_same_space(self.space, state.space)
        return QuantumState(self.space, self.matrix @ state.amplitudes)


def _check_same_space(a: HilbertSpace, b: HilbertSpace) -> None:
    if a.fock_cutoff != b.fock_cutoff:
        raise ValueError(
            f"operands live on different spaces (cutoffs {a.fock_cutoff} "
            f"vs {b.fock_cutoff})"
        )


def basis_state(space: HilbertSpace, s1: int, s2: int, n: int) -> QuantumState:
    """Computational basis state |s1 s2> (x) |n>."""
    amp = np.zeros(space.dimension, dtype=complex)
    amp[space.index(s1, s2, n)] = 1.0
    return QuantumState(space, amp)


def ladder_ops(space: HilbertSpace) -> tuple[Operator, Operator, Operator]:
    """Boson (a, a_dagger, n) on the full space.

    The commutator [a, a_dagger] equals the identity on every level below
    the cutoff; the truncation shows up only in the top diagonal entry.
    """
    nl = space.n_levels
    a_small = np.diag(np.sqrt(np.arange(1, nl)), k=1).astype(complex)
    a = np.kron(np.eye(4), a_small)
    adag = a.conj().T
    num = np.kron(np.eye(4), np.diag(np.arange(nl, dtype=float)))
    return (
        Operator(space, a),
        Operator(space, adag),
        Operator(space, num),
    )


def spin_ops(space: HilbertSpace, which: int) -> tuple[Operator, Operator, Operator]:
    """(sigma_plus, sigma_minus, sigma_z) for spin ``which`` in {1, 2}."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    sp = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)  # |up><down| with DOWN=0
    sz = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
    eye2 = np.eye(2, dtype=complex)
    eyeb = np.eye(space.n_levels, dtype=complex)

    def full(op2):
        if which == 1:
            return np.kron(np.kron(op2, eye2), eyeb)
        return np.kron(np.kron(eye2, op2), eyeb)

    return (
        Operator(space, full(sp)),
        Operator(space, full(sp.conj().T)),
        Operator(space, full(sz)),
    )


def excitation_number(space: HilbertSpace) -> Operator:
    """Conserved ladder charge: boson number plus number of up spins."""
    _, _, num = ladder_ops(space)
    _, _, z1 = spin_ops(space, 1)
    _, _, z2 = spin_ops(space, 2)
    eye = np.eye(space.dimension)
    mat = num.matrix + 0.5 * (z1.matrix + eye) + 0.5 * (z2.matrix + eye)
    return Operator(space, mat)


def evolve(state: QuantumState, hamiltonian: Operator, t: float) -> QuantumState:
    """Propagate ``state`` under a constant Hamiltonian (J) for ``t`` seconds.

    Uses the eigendecomposition of H/hbar, which keeps the propagator
    unitary to machine precision for the small dense matrices used here.

    Raises
    ------
    PhysicsDomainError
        If the operator is not Hermitian (relative defect > 1e-10).
    """
    _check_same_space(state.space, hamiltonian.space)
    defect = hamiltonian.hermiticity_defect()
    if defect > 1.0e-10:
        raise PhysicsDomainError(
            f"evolve requires a Hermitian generator (defect {defect:.3e})"
        )
    w = hamiltonian.matrix / CODATA.hbar
    w = 0.5 * (w + w.conj().T)
    eigvals, eigvecs = np.linalg.eigh(w)
    phases = np.exp(-1.0j * eigvals * t)
    amp = eigvecs @ (phases * (eigvecs.conj().T @ state.amplitudes))
    return QuantumState(state.space, amp)


def propagator(hamiltonian: Operator, t: float) -> Operator:
    """Unitary exp(-i H t / hbar) as an :class:`Operator`."""
    defect = hamiltonian.hermiticity_defect()
    if defect > 1.0e-10:
        raise PhysicsDomainError(
            f"propagator requires a Hermitian generator (defect {defect:.3e})"
        )
    w = hamiltonian.matrix / CODATA.hbar
    w = 0.5 * (w + w.conj().T)
    eigvals, eigvecs = np.linalg.eigh(w)
    u = (eigvecs * np.exp(-1.0j * eigvals * t)) @ eigvecs.conj().T
    return Operator(hamiltonian.space, u)


@dataclass(frozen=True)
class NumberDistribution:
    """Boson-number statistics of a state (optionally sampled)."""

    probabilities: np.ndarray  # P(n), length n_levels
    mean: float
    variance: float

    def as_dict(self) -> dict:
        return {"mean": self.mean, "variance": self.variance}


def measure_number(
    state: QuantumState,
    shots: int | None = None,
    rng: np.random.Generator | None = None,
) -> NumberDistribution:
    """Statistics of the boson-number observable.

    By default the exact distribution is returned.  With ``shots`` the
    distribution is sampled (seed via ``rng``) and empirical moments are
    reported, for studies of finite measurement statistics.
    """
    mat = state.spin_boson_matrix()
    probs = np.abs(mat) ** 2
    pn = probs.sum(axis=0)
    total = pn.sum()
    if not math.isclose(total, 1.0, rel_tol=0.0, abs_tol=1.0e-9):
        raise PhysicsDomainError(
            f"state norm deviates from 1 by {abs(total - 1.0):.3e}; "
            "normalize before measuring"
        )
    pn = pn / total
    levels = np.arange(pn.size, dtype=float)
    if shots is not None:
        if shots <= 0:
            raise ConfigError("shots must be a positive integer")
        rng = rng if rng is not None else np.random.default_rng()
        counts = rng.multinomial(shots, pn)
        sampled = counts / shots
        mean = float(sampled @ levels)
        var = float(sampled @ (levels - mean) ** 2)
        return NumberDistribution(probabilities=sampled, mean=mean, variance=var)
    mean = float(pn @ levels)
    var = float(pn @ (levels - mean) ** 2)
    return NumberDistribution(probabilities=pn, mean=mean, variance=var)


def fidelity(state: QuantumState, target: QuantumState) -> float:
    """|<target|state>|^2 (invariant under global phases of either side)."""
    return float(abs(state.overlap(target)) ** 2)


def spin_density_matrix(state: QuantumState) -> np.ndarray:
    """4x4 reduced density matrix of the two spins (boson traced out)."""
    mat = state.spin_boson_matrix()
    return mat @ mat.conj().T


def concurrence(state: QuantumState) -> float:
    """Two-spin entanglement monotone of the boson-traced state.

    Spin-flip construction: with rho the reduced two-spin density matrix
    and rho_tilde = (sy (x) sy) rho* (sy (x) sy), the concurrence is
    max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
    eigenvalues of rho @ rho_tilde.
    """
    rho = spin_density_matrix(state)
    yy = np.kron(_SIGMA_Y, _SIGMA_Y)
    rho_tilde = yy @ rho.conj() @ yy
    eigs = np.linalg.eigvals(rho @ rho_tilde)
    # Tiny negative/imaginary parts are linear-algebra noise.
    roots = np.sqrt(np.abs(eigs.real))
    roots.sort()
    return float(max(0.0, roots[-1] - roots[-2] - roots[-3] - roots[-4]))


def save_state(state: QuantumState, path: str | Path) -> None:
    """Write a state as text: one ``index real imag`` line per amplitude."""
    lines = [
        f"# pentrap state, fock_cutoff = {state.space.fock_cutoff}",
        "# index real imag  (index: (2*s1 + s2)*(levels) + n)",
    ]
    for i, amp in enumerate(state.amplitudes):
        lines.append(f"{i} {float(amp.real)!r} {float(amp.imag)!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_state(path: str | Path) -> QuantumState:
    """Read a state written by :func:`save_state`."""
    path = Path(path)
    cutoff = None
    entries: dict[int, complex] = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line.startswith("#"):
            if line.startswith("# pentrap state"):
                cutoff = int(line.rpartition("=")[2])
            continue
        if not line:
            continue
        idx_s, re_s, im_s = line.split()
        entries[int(idx_s)] = float(re_s) + 1.0j * float(im_s)
    if cutoff is None:
        raise ConfigError(f"{path}: missing fock_cutoff header line")
    space = HilbertSpace(cutoff)
    amp = np.zeros(space.dimension, dtype=complex)
    for idx, val in entries.items():
        if not 0 <= idx < space.dimension:
            raise ConfigError(f"{path}: index {idx} outside dimension {space.dimension}")
        amp[idx] = val
    return QuantumState(space, amp)
