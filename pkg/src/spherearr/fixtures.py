"""Built-in arrangements, addressable from the command line as ``@NAME``."""

from __future__ import annotations

import random

from .arrangement import Arrangement, validate
from .errors import InputError

_S1_LINES = [(1, 0), (0, 1), (1, 1), (1, -1)]

FIXTURES = {
    # two great circles in S^2
    "E2": [(1, 0, 0), (0, 1, 0)],
    # three great circles in general position (coordinate planes)
    "G3": [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    # three great circles through a common pair of poles
    "P3": [(1, 0, 0), (0, 1, 0), (1, 1, 0)],
    # three coordinate 2-spheres in S^3
    "C3": [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)],
}


def fixture_names() -> list[str]:
    return list(FIXTURES) + [f"S1n{k}" for k in range(1, len(_S1_LINES) + 1)]


def fixture(name: str) -> Arrangement:
    """Look up ``E2``, ``G3``, ``P3``, ``C3`` or ``S1n<k>`` (``k <= 4`` point pairs on S^1)."""
    name = name.lstrip("@")
    if name in FIXTURES:
        return Arrangement.from_normals(FIXTURES[name])
    if name.startswith("S1n"):
        try:
            k = int(name[3:])
        except ValueError:
            k = 0
        if 1 <= k <= len(_S1_LINES):
            return Arrangement.from_normals(_S1_LINES[:k])
    raise InputError("E_PARSE", f"unknown fixture @{name}")


def random_arrangement(
    rng: random.Random,
    max_n: int = 5,
    max_sphere_dim: int = 3,
    coeff: int = 3,
    max_tries: int = 10_000,
) -> Arrangement:
    """A random valid arrangement with integer normals in ``[-coeff, coeff]``.

    The sphere dimension is drawn from ``1..max_sphere_dim`` and the number
    of hyperspheres from ``1..max_n``; draws failing validation are rejected.
    """
    for _ in range(max_tries):
        d = rng.randint(2, max_sphere_dim + 1)
        n = rng.randint(1, max_n)
        normals = [tuple(rng.randint(-coeff, coeff) for _ in range(d)) for _ in range(n)]
        a = Arrangement.from_normals(normals, d)
        if validate(a).ok:
            return a
    raise InputError("E_BUDGET", "no valid random arrangement found")
