"""General matrix exponential by scaling and squaring of a truncated series."""

import numpy as np

SERIES_TERMS = 20
SCALE_BOUND = 0.5


def matrix_exp(a):
    """``exp(a)`` for a square matrix.

    The input is scaled by ``2**-k`` until its 1-norm is at most 0.5, the
    20-term Taylor series is summed by Horner's rule, and the result squared
    ``k`` times.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    n = a.shape[0]
    if a.shape != (n, n) or n < 1:
        raise ValueError(f"matrix_exp needs a non-empty square matrix, got shape {a.shape}")
    norm = np.linalg.norm(a, 1)
    k = 0
    if norm > SCALE_BOUND:
        k = int(np.ceil(np.log2(norm / SCALE_BOUND)))
    b = a / (2.0 ** k)
    eye = np.eye(n)
    out = eye.copy()
    for i in range(SERIES_TERMS, 0, -1):
        out = eye + (b @ out) / i
    for _ in range(k):
        out = out @ out
    return out
