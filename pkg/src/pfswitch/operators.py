"""Truncated bosonic operators on the three-mode (Q1, C, Q2) Hilbert space.

Conventions used throughout the package:

* frequencies and anharmonicities are linear frequencies in GHz (the values
  a spectroscopy table quotes as omega/2pi); the factor 2*pi enters exactly
  once, inside time evolution, so that time is measured in nanoseconds;
* the mode order is fixed as (Q1, C, Q2) and basis kets are written
  |n1, nc, n2>;
* flat indices follow the Kronecker-product convention of numpy.kron with
  that mode order, i.e. index = (n1 * dim_c + nc) * dim_2 + n2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvalidDimensionError

__all__ = [
    "ModeSpec",
    "HilbertSpace",
    "destroy",
    "embed",
    "duffing_hamiltonian",
    "duffing_energies",
]


@dataclass(frozen=True)
class ModeSpec:
    """One anharmonic (Duffing) mode.

    frequency      0-1 transition frequency in GHz (> 0)
    anharmonicity  level spacing change per excitation in GHz
    levels         truncation dimension (>= 3 so that two-excitation
                   states, which static ZZ lives on, are representable)
    """

    frequency: float
    anharmonicity: float
    levels: int = 5

    def __post_init__(self):
        if self.levels < 3:
            raise InvalidDimensionError(
                f"mode truncation must keep at least 3 levels, got {self.levels}"
            )
        if self.frequency <= 0:
            raise ValueError(f"mode frequency must be positive, got {self.frequency}")


@dataclass(frozen=True)
class HilbertSpace:
    """Tensor-product space of the (Q1, C, Q2) chain."""

    dims: tuple[int, int, int]

    def __post_init__(self):
        if len(self.dims) != 3 or any(d < 2 for d in self.dims):
            raise InvalidDimensionError(f"need three mode dimensions >= 2, got {self.dims}")

    @property
    def size(self) -> int:
        d1, dc, d2 = self.dims
        return d1 * dc * d2

    def index(self, label: tuple[int, int, int]) -> int:
        """Flat index of the basis ket |n1, nc, n2>."""
        n1, nc, n2 = label
        d1, dc, d2 = self.dims
        if not (0 <= n1 < d1 and 0 <= nc < dc and 0 <= n2 < d2):
            raise InvalidDimensionError(f"label {label} outside space {self.dims}")
        return (n1 * dc + nc) * d2 + n2

    def label(self, index: int) -> tuple[int, int, int]:
        """Inverse of :meth:`index`."""
        d1, dc, d2 = self.dims
        if not 0 <= index < self.size:
            raise InvalidDimensionError(f"index {index} outside space of size {self.size}")
        n2 = index % d2
        rest = index // d2
        return rest // dc, rest % dc, n2

    def labels(self) -> list[tuple[int, int, int]]:
        """All basis labels in flat-index order."""
        d1, dc, d2 = self.dims
        return list(product(range(d1), range(dc), range(d2)))

    def excitations(self) -> np.ndarray:
        """Total excitation number n1 + nc + n2 for every flat index."""
        return np.array([sum(lbl) for lbl in self.labels()])


def destroy(dim: int) -> np.ndarray:
    """Lowering operator on a `dim`-level mode: sqrt(n) on the superdiagonal."""
    if dim < 2:
        raise InvalidDimensionError(f"lowering operator needs dim >= 2, got {dim}")
    return np.diag(np.sqrt(np.arange(1.0, dim)), k=1)


def embed(op: np.ndarray, mode: int, space: HilbertSpace) -> np.ndarray:
    """Lift a single-mode operator to the full space: I x ... x op x ... x I."""
    if mode not in (0, 1, 2):
        raise InvalidDimensionError(f"mode index must be 0, 1 or 2, got {mode}")
    op = np.asarray(op)
    d = space.dims[mode]
    if op.shape != (d, d):
        raise InvalidDimensionError(
            f"operator shape {op.shape} does not match mode {mode} dimension {d}"
        )
    factors = [np.eye(dim) for dim in space.dims]
    factors[mode] = op
    return np.kron(np.kron(factors[0], factors[1]), factors[2])


def duffing_energies(mode: ModeSpec) -> np.ndarray:
    """Bare level energies E(n) = n*w + n(n-1)*delta/2 in GHz."""
    n = np.arange(mode.levels)
    return n * mode.frequency + n * (n - 1) * mode.anharmonicity / 2.0


def duffing_hamiltonian(mode: ModeSpec) -> np.ndarray:
    """Single-mode Duffing Hamiltonian, diagonal in the Fock basis."""
    return np.diag(duffing_energies(mode))
