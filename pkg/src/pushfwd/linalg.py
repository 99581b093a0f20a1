"""Dense linear algebra over a prime field: rank and kernel dimension.

Row reduction mod p is the hot inner loop of the Riemann-Roch oracle, so
two interchangeable implementations live here: a numba-compiled
elimination (the default) and a pure-numpy fallback.  Set

    PUSHFWD_BACKEND=numpy

to force the fallback; ``numba`` selects the compiled kernel explicitly.
Both require p to be prime and below 2**31 so products of residues stay
inside int64.
"""

from __future__ import annotations

import os

import numpy as np

MAX_PRIME = 2**31


def rank_mod_p_numpy(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p, vectorized row reduction."""
    a = np.asarray(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1 :, c])[0] + r + 1
        if below.size:
            a[below] = (a[below] - a[below, c, None] * a[r]) % p
        r += 1
    return r


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

if HAVE_NUMBA:

    @njit(cache=True)
    def _rank_mod_p_jit(a, p):  # pragma: no cover - exercised via wrapper
        nrows, ncols = a.shape
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            # modular inverse by Fermat: a^(p-2) mod p
            base = a[r, c]
            exp = p - 2
            inv = 1
            while exp > 0:
                if exp & 1:
                    inv = inv * base % p
                base = base * base % p
                exp >>= 1
            for j in range(c, ncols):
                a[r, j] = a[r, j] * inv % p
            for i in range(r + 1, nrows):
                f = a[i, c]
                if f != 0:
                    for j in range(c, ncols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            r += 1
        return r

    def rank_mod_p_numba(mat: np.ndarray, p: int) -> int:
        """Rank of an integer matrix over F_p, compiled elimination."""
        a = np.array(mat, dtype=np.int64) % p
        if a.size == 0:
            return 0
        return int(_rank_mod_p_jit(a, p))

else:  # pragma: no cover
    rank_mod_p_numba = rank_mod_p_numpy


def _pick_backend() -> str:
    choice = os.environ.get("PUSHFWD_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(
            f"PUSHFWD_BACKEND must be 'numba' or 'numpy', got {choice!r}"
        )
    if choice == "numpy" or (choice == "" and not HAVE_NUMBA):
        return "numpy"
    if choice == "numba" and not HAVE_NUMBA:
        raise ValueError("PUSHFWD_BACKEND=numba but numba is not importable")
    return "numba"


_BACKEND = _pick_backend()
rank_mod_p = rank_mod_p_numba if _BACKEND == "numba" else rank_mod_p_numpy


def active_backend() -> str:
    """Name of the elimination backend selected at import time."""
    return _BACKEND


def kernel_dim_mod_p(mat: np.ndarray, p: int) -> int:
    """Dimension of the nullspace of ``mat`` over F_p."""
    if not 2 < p < MAX_PRIME:
        raise ValueError(f"modulus must be an odd prime below 2**31, got {p}")
    nrows, ncols = mat.shape
    if ncols == 0:
        return 0
    if nrows == 0:
        return ncols
    return ncols - rank_mod_p(mat, p)
