"""Complex Hermitian linear algebra, exterior powers, and block majorization checks.

Everything here works on plain complex numpy arrays.  Hermitian forms are
square arrays H with H == H.conj().T up to a small tolerance; eigenvalue
routines return descending real spectra.  Compound matrices (the induced
action on wedge powers) are laid out over lexicographic multi-indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
ORTHO_TOL = 1e-10


def hermitian_defect(a: np.ndarray) -> float:
    """Max absolute deviation of a from its conjugate transpose."""
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def check_hermitian(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    defect = hermitian_defect(a)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: max asymmetry {defect:.3e} > {tol:.1e}")
    return 0.5 * (a + a.conj().T)


@dataclass(frozen=True)
class EigenSpectrum:
    """Descending real eigenvalues with a unitary column frame."""

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.values) > 1e-12):
            raise ValueError("eigenvalues not in descending order")


def hermitian_eigen(a: np.ndarray, tol: float = 1e-10) -> EigenSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Rejects inputs whose asymmetry exceeds ``tol``.
    """
    h = check_hermitian(a, tol)
    vals, vecs = np.linalg.eigh(h)
    order = np.arange(len(vals))[::-1]  # eigh is ascending; stable reversal
    return EigenSpectrum(values=vals[order].copy(), vectors=vecs[:, order].copy())


def rel_eigen(a: np.ndarray, g: np.ndarray, tol: float = 1e-10) -> EigenSpectrum:
    """Eigenvalues of the Hermitian pencil (a, g) with g positive definite.

    Reduces via the Cholesky factor g = C C* to a single Hermitian solve of
    C^-1 a C^-*.  Returned vectors X are g-orthonormal: X* g X = I.
    """
    a = check_hermitian(a, tol)
    g = check_hermitian(g, tol)
    try:
        c = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        smallest = float(np.linalg.eigvalsh(g)[0])
        raise ValueError(f"metric matrix not positive definite (smallest eigenvalue {smallest:.3e})")
    b = np.linalg.solve(c, np.linalg.solve(c, a.conj().T).conj().T)
    spec = hermitian_eigen(0.5 * (b + b.conj().T))
    vectors = np.linalg.solve(c.conj().T, spec.vectors)
    return EigenSpectrum(values=spec.values, vectors=vectors)


def multi_indices(m: int, ell: int) -> list[tuple[int, ...]]:
    """Strictly increasing ell-tuples from range(m), lexicographic order."""
    if not 0 < ell <= m:
        raise ValueError(f"ell must satisfy 1 <= ell <= {m}, got {ell}")
    return list(itertools.combinations(range(m), ell))


def compound_matrix(mat: np.ndarray, ell: int) -> np.ndarray:
    """The ell-th compound: matrix of all ell x ell minors over lex multi-indices.

    Row index runs over row multi-indices of ``mat``, column index over column
    multi-indices, entry (I, J) = det(mat[I, J]).  Linear extension of the
    action v1 ^ ... ^ v_ell -> (mat v1) ^ ... ^ (mat v_ell).
    """
    mat = np.asarray(mat, dtype=complex)
    rows, cols = mat.shape
    if not 0 < ell <= min(rows, cols):
        raise ValueError(f"ell={ell} out of range for a {rows}x{cols} matrix")
    row_idx = multi_indices(rows, ell)
    col_idx = multi_indices(cols, ell)
    out = np.empty((len(row_idx), len(col_idx)), dtype=complex)
    for i, ri in enumerate(row_idx):
        sub = mat[np.ix_(ri, range(cols))]
        for j, cj in enumerate(col_idx):
            out[i, j] = np.linalg.det(sub[:, cj])
    return out


def wedge_coefficients(factors: np.ndarray) -> np.ndarray:
    """Coefficients of v1 ^ ... ^ v_ell in the lexicographic minor basis.

    ``factors`` has the vectors as columns; coefficient for multi-index I is
    det(factors[I, :]).
    """
    factors = np.asarray(factors, dtype=complex)
    m, ell = factors.shape
    return np.array([np.linalg.det(factors[list(idx), :]) for idx in multi_indices(m, ell)])


def wedge_inner(factors_a: np.ndarray, factors_b: np.ndarray) -> complex:
    """Hermitian inner product of two simple wedge vectors given by factor lists.

    <a, conj(b)> = det(<v_i, conj(w_j)>) with the standard Hermitian pairing
    on coordinate space; agrees with the coefficient-basis inner product by
    the Binet-Cauchy identity.
    """
    a = np.asarray(factors_a, dtype=complex)
    b = np.asarray(factors_b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"degree/dimension mismatch: {a.shape} vs {b.shape}")
    gram = a.T @ b.conj()  # gram[i, j] = <v_i, conj(w_j)>
    return complex(np.linalg.det(gram))


def sum_top_eigenvalues(values: np.ndarray, ell: int) -> float:
    return float(np.sum(values[:ell]))


def prod_top_eigenvalues(values: np.ndarray, ell: int) -> float:
    return float(np.prod(values[:ell]))


def block_trace_ratio(a: np.ndarray, g: np.ndarray, ell: int) -> float:
    """tr(G_ell^-1 A_ell) over the leading ell x ell blocks."""
    a_block = np.asarray(a)[:ell, :ell]
    g_block = np.asarray(g)[:ell, :ell]
    return float(np.real(np.trace(np.linalg.solve(g_block, a_block))))


def block_det_ratio(a: np.ndarray, g: np.ndarray, ell: int) -> float:
    """det(A_ell) / det(G_ell) over the leading blocks."""
    a_block = np.asarray(a)[:ell, :ell]
    g_block = np.asarray(g)[:ell, :ell]
    det_g = np.linalg.det(g_block)
    if abs(det_g) < 1e-300:
        raise ValueError("leading block of metric matrix is singular")
    return float(np.real(np.linalg.det(a_block) / det_g))


@dataclass(frozen=True)
class MajorizationCheck:
    spectral: float
    block: float
    holds: bool
    equality: bool


def partial_trace_bound_check(a: np.ndarray, g: np.ndarray, ell: int,
                              slack: float = 1e-10) -> MajorizationCheck:
    """Partial-trace majorization: top-ell relative eigenvalue sum vs block trace.

    ``spectral`` is the sum of the top ell eigenvalues of the pencil (a, g);
    ``block`` is the trace of the leading ell-block after orthonormalizing the
    coordinate frame against g.  ``holds`` asserts spectral >= block - slack.
    """
    spec = rel_eigen(a, g)
    sigma = sum_top_eigenvalues(spec.values, ell)
    block = block_trace_ratio(a, g, ell)
    return MajorizationCheck(
        spectral=sigma,
        block=block,
        holds=bool(sigma >= block - slack),
        equality=bool(abs(sigma - block) <= slack * max(1.0, abs(sigma))),
    )


def partial_det_bound_check(a: np.ndarray, g: np.ndarray, ell: int,
                            slack: float = 1e-10) -> MajorizationCheck:
    """Partial-product majorization: top-ell relative eigenvalue product vs det ratio."""
    spec = rel_eigen(a, g)
    prod = prod_top_eigenvalues(spec.values, ell)
    block = block_det_ratio(a, g, ell)
    slack_abs = slack * max(1.0, abs(prod))
    return MajorizationCheck(
        spectral=prod,
        block=block,
        holds=bool(prod >= block - slack_abs),
        equality=bool(abs(prod - block) <= slack_abs),
    )


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian, phase-fixed diagonal."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(dim: int, rng: np.random.Generator, psd: bool = False,
                     rank: int | None = None) -> np.ndarray:
    """Random Hermitian test matrix; optionally positive semidefinite of given rank."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    if psd:
        if rank is not None and rank < dim:
            z[:, rank:] = 0.0
        h = z @ z.conj().T / dim
    else:
        h = 0.5 * (z + z.conj().T)
    return h


def random_spd(dim: int, rng: np.random.Generator, spread: float = 1.0) -> np.ndarray:
    """Random Hermitian positive definite matrix with moderate conditioning."""
    u = haar_unitary(dim, rng)
    vals = np.exp(spread * rng.uniform(-1.0, 1.0, size=dim))
    return (u * vals) @ u.conj().T
