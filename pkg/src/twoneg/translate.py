"""Inter-translation between the order-based and modal frame presentations.

`phi` reads both accessibility relations off a sub-normal frame: R1 relates
worlds with a common upper bound, R2 relates worlds with a common upper bound
outside Y0.  `psi` recovers Y0 as the worlds with no R2-successor.  On their
respective classes the two maps are mutually inverse on the nose (table
equality, no isomorphism needed), identity frames corresponding exactly to
the frames whose R2 sits inside the converse order.
"""

from __future__ import annotations

from .errors import FrameError
from .frames import (NhatFrame, SubNormalFrame, build_nhat, build_subnormal,
                     is_identity, is_nhat_prime)

__all__ = ["phi", "psi"]


def phi(fr: SubNormalFrame) -> NhatFrame:
    """Sub-normal frame to modal frame; output is validated, and an identity
    input yields a frame with R2 inside the converse order."""
    n = fr.size
    leq = fr.leq
    rn1 = [(x, y) for x in range(n) for y in range(n)
           if any(leq[x][z] and leq[y][z] for z in range(n))]
    rn2 = [(x, y) for x in range(n) for y in range(n)
           if any(leq[x][z] and leq[y][z] and z not in fr.y0 for z in range(n))]
    names = fr.worlds
    out = build_nhat(names,
                     [(names[i], names[j]) for i in range(n) for j in range(n)
                      if leq[i][j] and i != j],
                     [(names[i], names[j]) for i, j in rn1],
                     [(names[i], names[j]) for i, j in rn2])
    if is_identity(fr) and not is_nhat_prime(out):
        raise FrameError("translation-broke-identity", None)
    return out


def psi(fr: NhatFrame) -> SubNormalFrame:
    """Modal frame to sub-normal frame: Y0 is the set of worlds with no
    R2-successor; an R2-inside-converse-order input yields an identity frame."""
    n = fr.size
    names = fr.worlds
    y0 = [names[x] for x in range(n) if not any(fr.rn2[x])]
    out = build_subnormal(names,
                          [(names[i], names[j]) for i in range(n) for j in range(n)
                           if fr.leq[i][j] and i != j],
                          y0)
    if is_nhat_prime(fr) and not is_identity(out):
        raise FrameError("translation-broke-identity", None)
    return out
