import numpy as np

from liemech.errors import ZeroInput


def stereographic_transition(z):
    """Chart change between the two stereographic charts of a sphere: ``z / |z|^2``."""
    z = np.asarray(z, dtype=float)
    n2 = float(z @ z)
    if n2 == 0.0:
        raise ZeroInput("transition map is undefined at the origin")
    return z / n2
