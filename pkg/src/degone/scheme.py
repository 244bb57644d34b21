"""Two-eigenvalue structure of the coordinate span, and what follows.

For every in-scope family except the multislice, the adjacency operator
maps each coordinate indicator x into span{1, x} with one shared
eigenvalue: A.x = alpha.1 + p11.x.  That single exact solve yields the
valency/second-eigenvalue pair, the weight divisibility constant, and
the neighbor-count test for candidate functions.

Multislice domains (including the symmetric group) are exempt: their
coordinate indicators do not span constants-plus-one-eigenspace in the
scheme sense, so no divisibility constant is defined for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .boolfn import BoolFn
from .domains import Domain


class SchemeError(ValueError):
    """Domain outside the two-eigenvalue regime, or structural mismatch."""


@dataclass(frozen=True)
class EigenParams:
    v: int
    p01: int
    p11: int
    ratio: Fraction  # (p01 - p11) / v, in lowest terms
    alphas: tuple[int, ...] = ()  # per coordinate: A.x = alpha.1 + p11.x


def divisor_defined(domain: Domain) -> bool:
    """Families whose coordinates span constants plus one eigenspace.

    Polar domains qualify only at k = n (dual polar graphs); for k < n
    the point indicators span three eigenspaces and no single weight
    divisor follows.  Multislices and irregular restriction children are
    out as well.
    """
    fam = domain.family
    if fam in ("hamming", "johnson", "grassmann", "bilinear"):
        return True
    if fam == "polar":
        return domain.params["k"] == domain.params["n"]
    return False


def eigen_params(domain: Domain) -> EigenParams:
    got = domain._cache.get("eigen")
    if got is None:
        got = _compute_eigen_params(domain)
        domain._cache["eigen"] = got
    return got


def _compute_eigen_params(domain: Domain) -> EigenParams:
    if domain.family == "multislice":
        raise SchemeError(
            "multislice coordinates span more than two eigenspaces; "
            "eigen parameters are not defined"
        )
    if domain.valency is None:
        raise SchemeError("domain is not regular")
    adj = domain.adjacency_matrix().astype(np.int64)
    betas = []
    alphas = []
    constant_cols = []
    for j in range(domain.c):
        x = domain.incidence[:, 1 + j].astype(np.int64)
        y = adj @ x
        ones = np.flatnonzero(x)
        zeros = np.flatnonzero(x == 0)
        if len(ones) == 0 or len(zeros) == 0:
            # constant column: A.x stays in span{1} for any p11
            constant_cols.append((j, len(ones) > 0))
            alphas.append(None)
            continue
        alpha = int(y[zeros[0]])
        beta = int(y[ones[0]]) - alpha
        if not np.array_equal(y, alpha + beta * x):
            raise SchemeError(
                f"coordinate {domain.coord_keys[j]}: span not "
                "adjacency-invariant"
            )
        betas.append(beta)
        alphas.append(alpha)
    if not betas:
        raise SchemeError("no nonconstant coordinate to extract p11 from")
    if len(set(betas)) != 1:
        raise SchemeError(f"coordinates disagree on p11: {sorted(set(betas))}")
    p11 = betas[0]
    for j, all_ones in constant_cols:
        alphas[j] = domain.valency - p11 if all_ones else 0
    return EigenParams(
        domain.v,
        domain.valency,
        p11,
        Fraction(domain.valency - p11, domain.v),
        tuple(alphas),
    )


def weight_divisor(domain: Domain) -> int:
    """Least D such that every degree-1 function has weight divisible by D."""
    return eigen_params(domain).ratio.denominator


def check_neighbor_condition(domain: Domain, f: BoolFn) -> bool:
    """Every vertex with f(x)=0 sees exactly |f|*(p01-p11)/v ones.

    Necessary for membership of the degree-1 space; the weight
    divisibility is the integrality part of the same statement.
    """
    ep = eigen_params(domain)
    target = f.weight * ep.ratio
    if target.denominator != 1:
        return False
    target = int(target)
    bits = f.bits
    for x in range(domain.v):
        if (bits >> x) & 1:
            continue
        cnt = sum((bits >> y) & 1 for y in domain.neighbors[x])
        if cnt != target:
            return False
    return True
