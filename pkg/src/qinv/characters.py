"""Integer partitions and symmetric-group characters.

Character values are computed by the Murnaghan-Nakayama rule in its
beta-number (first-column hook length) formulation: removing a border strip
of size t from a shape with beta-set {b_i} replaces some b_i by b_i - t,
with sign given by the number of beta-numbers jumped over.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def z_lambda(mu: tuple) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    mult: dict = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part ** m * factorial(m)
    return z


def _betas(shape: tuple) -> tuple:
    n = len(shape)
    return tuple(shape[i] + (n - 1 - i) for i in range(n))


def _shape_from_betas(betas: tuple) -> tuple:
    bs = sorted(betas, reverse=True)
    # Strip trailing zeros introduced by the offset normalization.
    n = len(bs)
    shape = tuple(b - (n - 1 - i) for i, b in enumerate(bs))
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def mn_character(shape: tuple, mu: tuple) -> int:
    """Irreducible character chi^shape evaluated on the class of cycle type mu."""
    if sum(shape) != sum(mu):
        raise ValueError(f"|shape|={sum(shape)} differs from |mu|={sum(mu)}")
    if not mu:
        return 1
    t = mu[0]
    rest = mu[1:]
    betas = list(_betas(shape))
    present = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - t
        if nb < 0 or nb in present:
            continue
        jumped = sum(1 for other in betas if nb < other < b)
        new_betas = tuple(betas[:i] + [nb] + betas[i + 1:])
        total += (-1) ** jumped * mn_character(_shape_from_betas(new_betas), rest)
    return total


def hook_dimension(shape: tuple) -> int:
    """Dimension of the irreducible module, by the hook length formula."""
    n = sum(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in shape[i + 1:] if r > j)
            prod *= arm + leg + 1
    return factorial(n) // prod
