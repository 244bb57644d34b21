"""Finite field arithmetic GF(q) for small prime powers.

Supports q in {2, 3, 4, 5, 7, 8, 9}.  Field elements are plain ints in
[0, q) encoding the polynomial sum(c_i * p**i) over the coefficient
sequence c_i in base p.  Extension fields use a fixed irreducible
modulus so that element encodings (and everything downstream that sorts
by them) are bit-exact across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# Fixed moduli, as coefficient tuples (c_0, c_1, ..., c_deg) over GF(p).
# GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+2x+2.
_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
}


class FieldError(ValueError):
    """Invalid field parameter or operation (e.g. inverting zero)."""


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        if q % p == 0:
            deg = 0
            m = q
            while m % p == 0:
                m //= p
                deg += 1
            if m != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, deg
    raise FieldError(f"{q} is not a supported prime power")


def _poly_digits(value: int, p: int, deg: int) -> list[int]:
    digits = []
    for _ in range(deg):
        digits.append(value % p)
        value //= p
    return digits


def _digits_value(digits: list[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _has_root(modulus: tuple[int, ...], p: int) -> bool:
    for t in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * t + c) % p
        if acc == 0:
            return True
    return False


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(q) with precomputed add/mul/neg/inv lookup tables."""

    q: int
    p: int
    deg: int
    modulus: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...] = field(repr=False)
    mul_table: tuple[tuple[int, ...], ...] = field(repr=False)
    neg_table: tuple[int, ...] = field(repr=False)
    inv_table: tuple[int, ...] = field(repr=False)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a**(p**k), the k-th power of the Frobenius automorphism."""
        return self.pow(a, self.p ** (k % self.deg))

    def conj(self, a: int) -> int:
        """Order-2 automorphism t -> t**sqrt(q); requires deg even."""
        if self.deg % 2 != 0:
            raise FieldError(f"GF({self.q}) has no order-2 conjugation")
        return self.pow(a, self.p ** (self.deg // 2))

    def elements(self) -> range:
        return range(self.q)


def _build_tables(q: int, p: int, deg: int, modulus: tuple[int, ...]):
    def add(a, b):
        da = _poly_digits(a, p, deg)
        db = _poly_digits(b, p, deg)
        return _digits_value([(x + y) % p for x, y in zip(da, db)], p)

    def mul(a, b):
        da = _poly_digits(a, p, deg)
        db = _poly_digits(b, p, deg)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic modulus
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, mc in enumerate(modulus[:-1]):
                    prod[i - deg + j] = (prod[i - deg + j] - c * mc) % p
        return _digits_value(prod[:deg], p)

    add_t = tuple(tuple(add(a, b) for b in range(q)) for a in range(q))
    mul_t = tuple(tuple(mul(a, b) for b in range(q)) for a in range(q))
    neg_t = tuple(next(b for b in range(q) if add_t[a][b] == 0) for a in range(q))
    inv_t = (0,) + tuple(
        next(b for b in range(1, q) if mul_t[a][b] == 1) for a in range(1, q)
    )
    return add_t, mul_t, neg_t, inv_t


@lru_cache(maxsize=None)
def field_spec(q: int) -> FieldSpec:
    """The fixed GF(q) for a supported order q."""
    if q not in SUPPORTED_ORDERS:
        raise FieldError(f"unsupported field order {q}; supported: {SUPPORTED_ORDERS}")
    p, deg = _factor_prime_power(q)
    if deg == 1:
        modulus = (0, 1)  # identity convention for prime fields
    else:
        modulus = _MODULI[q]
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        # degree <= 3, so irreducible iff it has no root in GF(p)
        if _has_root(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    add_t, mul_t, neg_t, inv_t = _build_tables(q, p, deg, modulus)
    return FieldSpec(q, p, deg, modulus, add_t, mul_t, neg_t, inv_t)
