"""Small finite fields with integer-coded elements.

An element of GF(p^m) is the integer sum(c_k p^k) packing the coefficients
of its polynomial representative, so 0 and 1 are the additive and
multiplicative identities and prime-field elements are plain residues.
The modulus is the lexicographically least monic irreducible polynomial of
degree m, comparing coefficient tuples from the constant term up; this
makes every field canonical, so equal parameters give the identical field
object (the factory is cached).

Fields small enough also expose dense numpy addition and multiplication
tables for vectorised bulk work.
"""

from __future__ import annotations

from functools import cache, lru_cache
from typing import Sequence

import numpy as np
import sympy

from .errors import BudgetExceeded, DegreeTooLarge, NotPrime, NotSubfield

_DEGREE_CAP = 12
_TABLE_CAP = 1024


def parse_field_spec(spec: str) -> tuple[int, int]:
    """Parse "p" or "p^m" into (p, m)."""
    s = spec.strip()
    if "^" in s:
        ps, ms = s.split("^", 1)
        return int(ps), int(ms)
    return int(s), 1


# --- polynomial helpers over F_p (ascending coefficient tuples) ---


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    out = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(out) - 1 >= df and out:
        out = _ptrim(out)
        if len(out) - 1 < df:
            break
        coef = out[-1] * inv_lead % p
        shift = len(out) - 1 - df
        for i, c in enumerate(f):
            out[shift + i] = (out[shift + i] - coef * c) % p
        out = _ptrim(out)
    return out


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    x, y = _ptrim(list(a)), _ptrim(list(b))
    while y:
        x, y = y, _pmod(x, y, p)
    return x


def _ppow_frobenius(base: Sequence[int], k: int, f: Sequence[int], p: int) -> list[int]:
    """base^(p^k) mod f by k successive p-th powers."""
    cur = _pmod(base, f, p)
    for _ in range(k):
        acc: list[int] = [1]
        sq = cur
        e = p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, sq, p), f, p)
            e >>= 1
            if e:
                sq = _pmod(_pmul(sq, sq, p), f, p)
        cur = acc
    return cur


def _minus_x(poly: Sequence[int], p: int) -> list[int]:
    out = list(poly)
    while len(out) < 2:
        out.append(0)
    out[1] = (out[1] - 1) % p
    return _ptrim(out)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1."""
    m = len(f) - 1
    x = [0, 1]
    if _minus_x(_ppow_frobenius(x, m, f, p), p):
        return False
    for ell in sympy.primefactors(m):
        g = _pgcd(_minus_x(_ppow_frobenius(x, m // ell, f, p), p), f, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Low coefficients (c_0..c_{m-1}) of the least monic irreducible
    x^m + sum c_k x^k, in constant-term-first lexicographic order."""
    if m == 1:
        return (0,)

    def candidates(pos: int, prefix: list[int]):
        if pos == m:
            yield tuple(prefix)
            return
        for c in range(p):
            prefix.append(c)
            yield from candidates(pos + 1, prefix)
            prefix.pop()

    for low in candidates(0, []):
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return low
    raise RuntimeError("no irreducible polynomial found (unreachable)")


class FiniteField:
    """GF(p^m) with integer-coded elements; obtain instances via
    :func:`make_field`."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # low coefficients (c_0 .. c_{m-1}) of x^m + ...

    def __repr__(self) -> str:
        return f"GF({self.q})"

    @property
    def spec(self) -> str:
        return str(self.p) if self.m == 1 else f"{self.p}^{self.m}"

    # element packing

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        acc = 0
        for c in reversed(list(coeffs)):
            acc = acc * self.p + c % self.p
        return acc

    def elements(self) -> range:
        return range(self.q)

    # arithmetic

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.element([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.element([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        f = list(self.modulus) + [1]
        prod = _pmod(_pmul(list(self.coeffs(a)), list(self.coeffs(b)), self.p), f, self.p)
        return self.element(prod + [0] * (self.m - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        acc, sq = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, sq)
            e >>= 1
            if e:
                sq = self.mul(sq, sq)
        return acc

    def frobenius(self, x: int, s: int = 1) -> int:
        """x to the power p^s (s taken modulo m)."""
        s %= self.m
        if x == 0 or s == 0 or self.q == 2:
            return x
        return self.pow_(x, pow(self.p, s, self.q - 1))

    @lru_cache(maxsize=None)
    def generator(self) -> int:
        """The least integer-coded multiplicative generator."""
        if self.q == 2:
            return 1
        primes = sympy.primefactors(self.q - 1)
        for g in range(1, self.q):
            if all(self.pow_(g, (self.q - 1) // ell) != 1 for ell in primes):
                return g
        raise RuntimeError("no multiplicative generator found (unreachable)")

    # dense tables

    @lru_cache(maxsize=None)
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables of shape (q, q), for q <= 1024."""
        if self.q > _TABLE_CAP:
            raise BudgetExceeded(
                f"dense field tables capped at q <= {_TABLE_CAP}", predicted=self.q
            )
        dtype = np.uint8 if self.q <= 256 else np.uint16
        if self.m == 1:
            ar = np.arange(self.q, dtype=np.int64)
            add = (ar[:, None] + ar[None, :]) % self.p
            mul = (ar[:, None] * ar[None, :]) % self.p
            return add.astype(dtype), mul.astype(dtype)

        digits = np.array([self.coeffs(x) for x in range(self.q)], dtype=np.int64)
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        sums = (digits[:, None, :] + digits[None, :, :]) % self.p
        add = (sums * powers).sum(axis=2)

        g = self.generator()
        dlog = np.zeros(self.q, dtype=np.int64)
        exp = np.zeros(self.q - 1, dtype=np.int64)
        cur = 1
        for k in range(self.q - 1):
            exp[k] = cur
            dlog[cur] = k
            cur = self.mul(cur, g)
        mul = np.zeros((self.q, self.q), dtype=np.int64)
        nz = np.arange(1, self.q)
        idx = (dlog[nz][:, None] + dlog[nz][None, :]) % (self.q - 1)
        mul[1:, 1:] = exp[idx]
        return add.astype(dtype), mul.astype(dtype)

    @lru_cache(maxsize=None)
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(x) for x in range(self.q)], dtype=np.int64)


@cache
def make_field(p: int, m: int = 1) -> FiniteField:
    """The canonical GF(p^m).  Cached, so repeated calls share tables."""
    if p < 2 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1 or m > _DEGREE_CAP:
        raise DegreeTooLarge(f"extension degree {m} outside 1..{_DEGREE_CAP}")
    return FiniteField(p, m, _smallest_irreducible(p, m))


def field_from_spec(spec: str) -> FiniteField:
    p, m = parse_field_spec(spec)
    return make_field(p, m)


def frobenius(field: FiniteField, s: int, x: int) -> int:
    """The s-th Frobenius power x -> x^(p^s)."""
    return field.frobenius(x, s)


class Embedding:
    """A field embedding determined by the image of the small field's
    polynomial variable; callable on integer-coded elements."""

    def __init__(self, sub: FiniteField, big: FiniteField, var_image: int):
        self.sub = sub
        self.big = big
        self.var_image = var_image

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.sub.coeffs(x)):
            acc = self.big.add(self.big.mul(acc, self.var_image), c % self.big.p)
        return acc


def subfield_embedding(sub: FiniteField, big: FiniteField) -> Embedding:
    """The canonical embedding: the small field's variable class goes to the
    least root of the small modulus inside the big field."""
    if sub.p != big.p or big.m % sub.m != 0:
        raise NotSubfield(f"GF({sub.q}) does not embed in GF({big.q})")
    full = list(sub.modulus) + [1]
    root = None
    for x in range(big.q):
        acc = 0
        for c in reversed(full):
            acc = big.add(big.mul(acc, x), c % big.p)
        if acc == 0:
            root = x
            break
    if root is None:
        raise NotSubfield(
            f"modulus of GF({sub.q}) has no root in GF({big.q})"
        )
    return Embedding(sub, big, root)


def solve_univariate(field: FiniteField, coeffs: Sequence[int]) -> tuple[int, ...]:
    """All roots of sum coeffs[k] X^k by exhaustive evaluation, ascending.

    Coefficients are integer-coded field elements, constant term first;
    plain negative Python ints are folded into the prime subfield.
    """
    cs = [c % field.p if not 0 <= c < field.q else c for c in coeffs]
    if all(c == 0 for c in cs):
        return tuple(range(field.q))
    roots = []
    for x in range(field.q):
        acc = 0
        for c in reversed(cs):
            acc = field.add(field.mul(acc, x), c)
        if acc == 0:
            roots.append(x)
    return tuple(roots)
