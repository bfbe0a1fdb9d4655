"""Roots (z, eps) on the doubly infinite integer ladder.

A root is a pair of an integer and a sign.  The two reflections r_0, r_1
generate an infinite dihedral action; their composite shifts the integer
coordinate by 2 with the sign preserved.
"""

from collections import namedtuple

Root = namedtuple("Root", ["z", "eps"])


def check_root(r: Root) -> Root:
    if r.eps not in (1, -1):
        raise ValueError(f"root sign must be +1 or -1, got {r.eps}")
    return r


def base_sign(z: int) -> int:
    """The sign making (z, base_sign(z)) a positive root: +1 for z <= 0, else -1."""
    return 1 if z <= 0 else -1


def is_positive(r: Root) -> bool:
    return check_root(r).eps == base_sign(r.z)


def negate(r: Root) -> Root:
    return Root(check_root(r).z, -r.eps)


def reflect(i: int, r: Root) -> Root:
    """The reflection r_i, i in {0, 1}: (z, eps) -> (2i - z, -eps)."""
    if i not in (0, 1):
        raise ValueError(f"reflection index must be 0 or 1, got {i}")
    return Root(2 * i - check_root(r).z, -r.eps)


def alpha(i: int) -> Root:
    """The two simple roots: alpha_i = (i, base_sign(i))."""
    if i not in (0, 1):
        raise ValueError(f"simple root index must be 0 or 1, got {i}")
    return Root(i, base_sign(i))


def ladder_str(K: int) -> str:
    """Two-row picture of the roots with |z| <= K; filled dots are positive."""
    top = []
    bottom = []
    labels = []
    for z in range(-K, K + 1):
        top.append("*" if is_positive(Root(z, 1)) else "o")
        bottom.append("*" if is_positive(Root(z, -1)) else "o")
        labels.append(f"{z:^3}")
    pad = lambda row: " ".join(f"{c:^3}" for c in row)
    return "\n".join(["eps=+1  " + pad(top), "eps=-1  " + pad(bottom), "z       " + " ".join(labels)])
