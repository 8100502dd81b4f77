"""Dense complex matrix kernel sized for the (s+1)-dimensional number basis.

Matrices are plain ``numpy.ndarray`` values of dtype complex; everything here
is a pure function and all inputs are left untouched.  Dimensions at play are
tiny (a few hundred at most), so the kernel is deliberately dense and naive.
"""

from __future__ import annotations

import numpy as np


def _check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def dyad(m: int, n: int, dim: int) -> np.ndarray:
    """Outer product |m><n|: a single 1 at row m, column n."""
    if not (0 <= m < dim and 0 <= n < dim):
        raise IndexError(f"dyad indices ({m}, {n}) out of range for dim {dim}")
    out = np.zeros((dim, dim), dtype=complex)
    out[m, n] = 1.0
    return out


def basis(n: int, dim: int) -> np.ndarray:
    """Number-basis ket |n> as a length-dim vector."""
    if not 0 <= n < dim:
        raise IndexError(f"basis index {n} out of range for dim {dim}")
    e = np.zeros(dim, dtype=complex)
    e[n] = 1.0
    return e


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_shape(a, b)
    return a @ b


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_shape(a, b)
    return a + b


def sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_shape(a, b)
    return a - b


def scale(alpha: complex, a: np.ndarray) -> np.ndarray:
    return alpha * a


def dag(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def transpose(a: np.ndarray) -> np.ndarray:
    """Plain transpose, no conjugation."""
    return a.T


def mat_pow(a: np.ndarray, p: int) -> np.ndarray:
    """p-th matrix power for p >= 0; p = 0 gives the identity."""
    if p < 0:
        raise ValueError(f"power must be nonnegative, got {p}")
    return np.linalg.matrix_power(a, p)


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    """Largest entrywise deviation |a_ij - b_ij|; zero iff the arrays are equal."""
    _check_same_shape(a, b)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def is_unitary(a: np.ndarray, tol: float) -> bool:
    """True iff both a*a† and a†*a are within tol of the identity, entrywise."""
    eye = identity(a.shape[0])
    return (max_abs_diff(a @ dag(a), eye) <= tol
            and max_abs_diff(dag(a) @ a, eye) <= tol)


# --- JSON wire format -------------------------------------------------------
#
# Matrix: {"dim": n, "entries": [[re, im], ...]}, row-major, length n*n.
# Vector: same object shape with length-n entries.
# Floats serialize through repr, so parse(serialize(x)) is bit-exact.


def matrix_to_dict(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return {
        "dim": int(a.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_dict(obj: dict) -> np.ndarray:
    dim, flat = _parse_entries(obj)
    if len(flat) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for dim {dim}, got {len(flat)}")
    return np.array(flat, dtype=complex).reshape(dim, dim)


def vector_to_dict(v: np.ndarray) -> dict:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return {
        "dim": int(v.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in v],
    }


def vector_from_dict(obj: dict) -> np.ndarray:
    dim, flat = _parse_entries(obj)
    if len(flat) != dim:
        raise ValueError(f"expected {dim} entries, got {len(flat)}")
    return np.array(flat, dtype=complex)


def _parse_entries(obj: dict) -> tuple[int, list[complex]]:
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dim must be a positive integer, got {dim!r}")
    flat = []
    for pair in obj["entries"]:
        re, im = pair
        z = complex(float(re), float(im))
        if not (np.isfinite(z.real) and np.isfinite(z.imag)):
            raise ValueError("non-finite entry in serialized data")
        flat.append(z)
    return dim, flat
