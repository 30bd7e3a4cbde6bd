"""Operator model of the circle group at desk scale.

The cyclic shift on C^n is a unitary operator whose eigenvalues are exactly
the n-th roots of unity; the discrete Fourier matrix diagonalizes it, and the
continuous logarithm becomes the operator that is diagonal in the Fourier
basis with entries i*2*pi*k/n. Everything is dense, double precision, and
built by direct construction (the diagonalization is known, so no eigensolver
is involved); this module is illustrative, not performance-critical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np


@dataclass(frozen=True)
class DenseOperator:
    dim: int
    entries: np.ndarray  # (dim, dim) complex128

    def __post_init__(self):
        if self.dim < 1 or self.entries.shape != (self.dim, self.dim):
            raise ValueError(f"expected a {self.dim}x{self.dim} matrix")


def shift_operator(n: int) -> DenseOperator:
    """Cyclic shift: entry (i, (i+1) mod n) = 1; a permutation, hence unitary."""
    s = np.zeros((n, n), dtype=np.complex128)
    s[np.arange(n), (np.arange(n) + 1) % n] = 1
    return DenseOperator(n, s)


def dft_matrix(n: int) -> DenseOperator:
    """Unitary DFT: entry (j, k) = exp(-2*pi*i*j*k/n)/sqrt(n)."""
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    f = np.exp(-2j * np.pi * j * k / n) / np.sqrt(n)
    return DenseOperator(n, f)


def eigenvalues_of_shift(n: int) -> np.ndarray:
    """diag(F S F*): the n-th roots of unity, one per Fourier mode."""
    f = dft_matrix(n).entries
    s = shift_operator(n).entries
    return np.diag(f @ s @ f.conj().T)


def log_operator(n: int) -> DenseOperator:
    """The logarithm as a linear operator: diagonal i*2*pi*k/n in the Fourier basis.

    Principal branch throughout (branch index 0 on every eigenvalue), so
    exponentiating the diagonal recovers the shift operator.
    """
    f = dft_matrix(n).entries
    d = np.diag(2j * np.pi * np.arange(n) / n)
    return DenseOperator(n, f.conj().T @ d @ f)


def exp_operator(op: DenseOperator) -> DenseOperator:
    """Matrix exponential via the known Fourier diagonalization."""
    f = dft_matrix(op.dim).entries
    diag = np.diag(f @ op.entries @ f.conj().T)
    return DenseOperator(op.dim, f.conj().T @ np.diag(np.exp(diag)) @ f)


def dump_operator(op: DenseOperator, stream: TextIO) -> None:
    """Plain text, one row per line, entries as re+imi with 17 significant digits."""
    for row in op.entries:
        stream.write(" ".join(f"{z.real:.17g}{z.imag:+.17g}i" for z in row) + "\n")
