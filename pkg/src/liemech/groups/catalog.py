"""Static catalog of real Lie groups: dimension and topological flags."""

from dataclasses import dataclass

from liemech.errors import UnknownGroup


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    dimension: int
    compact: bool
    connected: bool
    simply_connected: bool
    abelian: bool


# name -> (dimension(n), compact(n), connected(n), simply_connected(n), abelian(n))
_TABLE = {
    "R": (lambda n: n, False, True, True, True),
    "Rx": (lambda n: 1, False, False, False, True),
    "R>0": (lambda n: 1, False, True, True, True),
    "S1": (lambda n: 1, True, True, False, True),
    "Hx": (lambda n: 4, False, True, True, False),
    "S3": (lambda n: 3, True, True, True, False),
    "GL": (lambda n: n * n, False, False, False, lambda n: n == 1),
    "GL+": (lambda n: n * n, False, True, True, lambda n: n == 1),
    "SL": (lambda n: n * n - 1, lambda n: n == 1, True, True, lambda n: n == 1),
    "O": (lambda n: n * (n - 1) // 2, True, False, False, lambda n: n <= 2),
    "SO": (lambda n: n * (n - 1) // 2, True, True, lambda n: n == 1, lambda n: n <= 2),
    "Spin": (lambda n: n * (n - 1) // 2, True, True, True, lambda n: n <= 2),
    "U": (lambda n: n * n, True, True, False, lambda n: n == 1),
    "SU": (lambda n: n * n - 1, True, True, True, lambda n: n == 1),
    "Sp": (lambda n: 2 * n * n + n, False, True, False, False),
    "SE": (lambda n: n * (n + 1) // 2, False, True, lambda n: n == 1, lambda n: n == 1),
}

_ALIASES = {"GLn": "GL", "SLn": "SL", "SOn": "SO", "SUn": "SU", "Un": "U", "Rn": "R",
            "R^n": "R", "R^x": "Rx", "H^x": "Hx"}


def _value(flag, n):
    return bool(flag(n)) if callable(flag) else bool(flag)


def catalog_names():
    return sorted(_TABLE)


def catalog_lookup(name, n=1):
    """Look up ``name`` (e.g. ``"SO"``) at rank parameter ``n``.

    For ``Sp`` the parameter is the number of degrees of freedom (Sp(2n, R)); for
    ``SE`` it is the dimension of the space acted on.
    """
    key = _ALIASES.get(name, name)
    if key not in _TABLE:
        raise UnknownGroup(f"unknown group '{name}'; known: {', '.join(catalog_names())}")
    n = int(n)
    if n < 1:
        raise UnknownGroup(f"rank parameter must be >= 1, got {n}")
    dim, compact, connected, simply, abelian = _TABLE[key]
    return GroupCatalogEntry(
        name=f"{key}({n})" if key not in ("Rx", "R>0", "S1", "Hx", "S3") else key,
        dimension=dim(n),
        compact=_value(compact, n),
        connected=_value(connected, n),
        simply_connected=_value(simply, n),
        abelian=_value(abelian, n),
    )
