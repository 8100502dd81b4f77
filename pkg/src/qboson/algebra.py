"""Operator family of the finite q-boson representation.

Builders for the weighted step operators, the bare and cyclic shifts, the
diagonal clock operator, the finite Fourier matrix, and the phase-basis
operators obtained by Fourier conjugation, ending in the polar decomposition
of the rotated step operators.

Every matrix function of the cyclic shift is produced in closed form by
conjugating a diagonal with the Fourier matrix; no eigensolver is used
anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cmatrix import dag, dyad, max_abs_diff
from .qnumerics import AlgebraConfig, primitive_root, q_number, sqrt_q_number


def annihilation(cfg: AlgebraConfig) -> np.ndarray:
    """Step-down operator: weight sqrt([n]) on |n-1><n| for n = 1..s.

    Kills the vacuum |0>, and its (s+1)-th power vanishes identically.
    """
    off = [sqrt_q_number(n, cfg) for n in range(1, cfg.dim)]
    return np.diag(np.asarray(off, dtype=complex), k=1)


def creation(cfg: AlgebraConfig) -> np.ndarray:
    """Step-up operator: weight sqrt([n+1]) on |n+1><n| for n = 0..s-1.

    Carries the same radical weights as the step-down operator, i.e. it is
    its plain transpose (not the conjugate transpose: sqrt([n]) picks up a
    factor i wherever [n] < 0).  Kills the top state |s> because [s+1] = 0.
    """
    return annihilation(cfg).T


def number(cfg: AlgebraConfig) -> np.ndarray:
    """Number operator diag(0, 1, ..., s)."""
    return np.diag(np.arange(cfg.dim)).astype(complex)


def nilpotency_index(cfg: AlgebraConfig) -> int:
    """Smallest power at which the step operators vanish.

    Equal to s+1 when s+1 is odd.  When s+1 is even the q-integer
    [(s+1)/2] = 0 zeroes an interior weight, the chain splits into two
    halves, and the index drops to (s+1)/2; this holds for every admissible
    root index k.
    """
    d = cfg.dim
    return d // 2 if d % 2 == 0 else d


def clock(cfg: AlgebraConfig) -> np.ndarray:
    """Diagonal unimodular clock operator diag(q^0, q^1, ..., q^s)."""
    return np.diag(_root_powers(cfg))


def _root_powers(cfg: AlgebraConfig) -> np.ndarray:
    # q^n for n = 0..s, exponents reduced mod s+1 (symmetrically, for small
    # angles) so every entry is an exactly-evaluated primitive-root power
    d = cfg.dim
    m = (cfg.k * np.arange(d)) % d
    m = np.where(2 * m > d, m - d, m)
    return np.exp(2j * np.pi * m / d)


def shift(cfg: AlgebraConfig) -> np.ndarray:
    """Bare raising shift: 1 on |n+1><n| for n = 0..s-1, nothing out of |s>.

    A partial isometry, not unitary: it composes with its adjoint to the
    identity minus an end projector.
    """
    return np.diag(np.ones(cfg.s, dtype=complex), k=-1)


def shift_dag(cfg: AlgebraConfig) -> np.ndarray:
    """Bare lowering shift: 1 on |n><n+1| for n = 0..s-1."""
    return dag(shift(cfg))


def cyclic_shift(cfg: AlgebraConfig) -> np.ndarray:
    """Unitary cyclic shift: the bare raising shift closed up by |0><s|."""
    return shift(cfg) + dyad(0, cfg.s, cfg.dim)


def q_number_matrix(cfg: AlgebraConfig, offset: int = 0) -> np.ndarray:
    """Diagonal of q-integers diag([offset], [1+offset], ..., [s+offset])."""
    return np.diag([q_number(n + offset, cfg) for n in range(cfg.dim)]).astype(complex)


def sqrt_q_number_matrix(cfg: AlgebraConfig, offset: int = 0) -> np.ndarray:
    """Diagonal of principal q-integer roots diag(sqrt[offset], ..., sqrt[s+offset])."""
    return np.diag([sqrt_q_number(n + offset, cfg) for n in range(cfg.dim)])


def fourier(cfg: AlgebraConfig) -> np.ndarray:
    """Finite Fourier matrix with kernel q^{mn} / sqrt(s+1); unitary.

    Exponents m*n*k are reduced mod s+1 and looked up in a table of the
    s+1 unit roots, so every entry is an exactly-evaluated phase.
    """
    d = cfg.dim
    idx = np.arange(d)
    folded = np.where(2 * idx > d, idx - d, idx)
    roots = np.exp(2j * np.pi * folded / d)
    return roots[(cfg.k * np.outer(idx, idx)) % d] / math.sqrt(d)


def phase_state(m: int, cfg: AlgebraConfig) -> np.ndarray:
    """Phase state |phi_m>: the image of |m> under the Fourier matrix.

    The s+1 phase states form an orthonormal basis dual to the number states.
    """
    if not 0 <= m <= cfg.s:
        raise IndexError(f"phase state index {m} out of range for s={cfg.s}")
    return fourier(cfg)[:, m].copy()


def fourier_conjugate(a: np.ndarray, cfg: AlgebraConfig) -> np.ndarray:
    """Rotate an operator into the phase basis: F a F†."""
    f = fourier(cfg)
    if a.shape != f.shape:
        raise ValueError(f"operator shape {a.shape} does not match dim {cfg.dim}")
    return f @ a @ dag(f)


def q_bracket(u: np.ndarray, cfg: AlgebraConfig) -> np.ndarray:
    """Deformed-number quotient (u - u†) / (q - 1/q) of a unitary u."""
    q = primitive_root(cfg)
    return (u - dag(u)) / (q - 1.0 / q)


def q_bracket_shifted(u: np.ndarray, cfg: AlgebraConfig) -> np.ndarray:
    """Index-shifted quotient (q u - u†/q) / (q - 1/q) of a unitary u."""
    q = primitive_root(cfg)
    return (q * u - dag(u) / q) / (q - 1.0 / q)


def phase_braces(cfg: AlgebraConfig) -> tuple[np.ndarray, np.ndarray]:
    """Deformed number operators diagonal in the phase basis.

    Returns the pair ({down}, {up}) built from the adjoint of the cyclic
    shift by the defining quotients; eigenvalues are the q-integers [n] and
    [n+1].  The same operators also arise by Fourier-conjugating the
    q-integer diagonals, and the two construction routes are cross-checked
    here against the configured tolerance.
    """
    u = dag(cyclic_shift(cfg))
    quotient = (q_bracket(u, cfg), q_bracket_shifted(u, cfg))
    spectral = (fourier_conjugate(q_number_matrix(cfg), cfg),
                fourier_conjugate(q_number_matrix(cfg, offset=1), cfg))
    # construction self-check: floored below so a user tolerance tighter than
    # floating point turns up as a failed verification, not a build crash
    bound = max(cfg.tol, 1e-10) * cfg.dim
    for built, reference in zip(quotient, spectral):
        err = max_abs_diff(built, reference)
        if err > bound:
            raise ArithmeticError(
                f"phase-brace construction routes disagree by {err:.3e} (tol {bound:.3e})"
            )
    return quotient


def phase_brace_roots(cfg: AlgebraConfig) -> tuple[np.ndarray, np.ndarray]:
    """Square roots of the phase-basis deformed number operators.

    Built by conjugating the principal-branch root diagonals with the
    Fourier matrix; squaring either result reproduces the corresponding
    output of :func:`phase_braces`.  With the principal branch the roots are
    not conjugate-symmetric whenever some q-integer is negative, which
    happens for every s >= 2.
    """
    f = fourier(cfg)
    fdag = dag(f)
    return (f @ sqrt_q_number_matrix(cfg) @ fdag,
            f @ sqrt_q_number_matrix(cfg, offset=1) @ fdag)


@dataclass(frozen=True)
class PolarDecomposition:
    """Unitary-times-radial split of the phase-basis step-down operator.

    unitary : the inverse clock, a diagonal unimodular matrix.
    radial : root of the phase-basis deformed number operator.
    reconstruction_error : deviation of unitary @ radial from the
        step-down operator rotated into the phase basis.
    factor_errors : deviations of all four factor orderings, the step-up
        ones included.
    radial_hermiticity_error : deviation of the radial factor from its own
        conjugate transpose.  Nonzero under the principal branch whenever a
        q-integer is negative, so the split is genuinely unitary-times-
        hermitian only where the spectrum stays nonnegative.
    """

    unitary: np.ndarray
    radial: np.ndarray
    reconstruction_error: float
    factor_errors: dict[str, float]
    radial_hermiticity_error: float


def polar_decompose(cfg: AlgebraConfig) -> PolarDecomposition:
    """Polar decomposition of the step operators rotated into the phase basis.

    The rotated step-down operator factors as (inverse clock) @ (radial root),
    with the radial part diagonal in the phase basis; the rotated step-up
    operator factors with the same pieces in the opposite order.  Both
    operators are built independently by Fourier conjugation and compared
    against the factored forms.
    """
    f = fourier(cfg)
    fdag = dag(f)
    g = clock(cfg)
    g_inv = dag(g)
    step_down = f @ annihilation(cfg) @ fdag
    step_up = f @ creation(cfg) @ fdag
    r_down, r_up = phase_brace_roots(cfg)
    errors = {
        "down_unitary_radial": max_abs_diff(step_down, g_inv @ r_down),
        "down_radial_unitary": max_abs_diff(step_down, r_up @ g_inv),
        "up_radial_unitary": max_abs_diff(step_up, r_down @ g),
        "up_unitary_radial": max_abs_diff(step_up, g @ r_up),
    }
    return PolarDecomposition(
        unitary=g_inv,
        radial=r_down,
        reconstruction_error=errors["down_unitary_radial"],
        factor_errors=errors,
        radial_hermiticity_error=max_abs_diff(r_down, dag(r_down)),
    )


@dataclass(frozen=True)
class OperatorSet:
    """The full operator family of one configuration, all of dimension s+1."""

    config: AlgebraConfig
    a: np.ndarray
    a_dag: np.ndarray
    n_op: np.ndarray
    g: np.ndarray
    h: np.ndarray
    h_dag: np.ndarray
    brace_g: np.ndarray
    brace_g1: np.ndarray
    fourier: np.ndarray
    big_h: np.ndarray
    big_h_dag: np.ndarray
    a_tilde: np.ndarray
    a_tilde_dag: np.ndarray
    n_tilde: np.ndarray
    brace_hdag: np.ndarray
    brace_hdag1: np.ndarray


def build_operator_set(cfg: AlgebraConfig) -> OperatorSet:
    """Construct every operator of the family for one configuration."""
    a = annihilation(cfg)
    n_op = number(cfg)
    f = fourier(cfg)
    fdag = dag(f)
    big_h = cyclic_shift(cfg)
    brace_hdag, brace_hdag1 = phase_braces(cfg)
    return OperatorSet(
        config=cfg,
        a=a,
        a_dag=a.T,
        n_op=n_op,
        g=clock(cfg),
        h=shift(cfg),
        h_dag=shift_dag(cfg),
        brace_g=q_number_matrix(cfg),
        brace_g1=q_number_matrix(cfg, offset=1),
        fourier=f,
        big_h=big_h,
        big_h_dag=dag(big_h),
        a_tilde=f @ a @ fdag,
        a_tilde_dag=f @ a.T @ fdag,
        n_tilde=f @ n_op @ fdag,
        brace_hdag=brace_hdag,
        brace_hdag1=brace_hdag1,
    )
