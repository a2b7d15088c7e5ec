"""Exact arithmetic in GF(p^r) with discrete-log tables.

Elements are represented by integer codes in [0, q): the code of an element
with polynomial coefficients (c0, ..., c_{r-1}) (low degree first) is
sum(c_i * p**i).  Multiplication of nonzero elements goes through exp/log
tables keyed to a fixed primitive element omega, so dlog is a table lookup.

Construction is fully deterministic: the modulus is the lexicographically
first monic irreducible polynomial of degree r over GF(p), and omega is the
lexicographically first element (by coefficient vector) of multiplicative
order q - 1.  Two fields built with the same (p, r) are therefore identical,
which keeps every downstream report reproducible.

Fields are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import CapExceeded, DegreeOutOfRange, FieldMismatch, LogOfZero, NotPrime

DEFAULT_FIELD_CAP = 2 ** 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient tuples are low degree first
# ---------------------------------------------------------------------------

def _poly_rem(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    # den is monic, so no inverses are needed
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for j in range(dd):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd]


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    r = len(modulus) - 1
    res = [0] * (2 * r - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = (res[i + j] + x * y) % p
    return tuple(_poly_rem(res, modulus, p))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..deg/2
    r = len(poly) - 1
    for d in range(1, r // 2 + 1):
        for tail in product(range(p), repeat=d):
            den = (*tail, 1)
            if not any(_poly_rem(list(poly), den, p)):
                return False
    return True


def _find_modulus(p: int, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)
    for tail in product(range(p), repeat=r):
        poly = (*tail, 1)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FiniteField:
    """GF(p^r) with exp/log tables keyed to a primitive element."""

    def __init__(self, p: int, r: int, cap: int = DEFAULT_FIELD_CAP):
        if not is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if r < 1:
            raise DegreeOutOfRange(f"extension degree r = {r} must be >= 1")
        q = p ** r
        if q > cap:
            raise CapExceeded(f"q = {p}^{r} = {q} exceeds the field cap {cap}")
        self.p = p
        self.r = r
        self.q = q
        self.modulus = _find_modulus(p, r)
        self._pow_p = tuple(p ** i for i in range(r))
        self.omega = self._find_omega()
        self._build_tables()
        self._digit_table: np.ndarray | None = None

    # -- construction ------------------------------------------------------

    def _encode(self, coeffs: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._pow_p))

    def _decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def _find_omega(self) -> int:
        one = (1,) + (0,) * (self.r - 1)
        n = self.q - 1
        checks = [(n // f) for f in prime_factors(n)]
        for cand in product(range(self.p), repeat=self.r):
            if not any(cand):
                continue
            if all(self._pow_coeffs(cand, e) != one for e in checks):
                return self._encode(cand)
        raise AssertionError("no primitive element found")  # cannot happen

    def _pow_coeffs(self, base: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = (1,) + (0,) * (self.r - 1)
        while e:
            if e & 1:
                result = _poly_mul_mod(result, base, self.modulus, self.p)
            base = _poly_mul_mod(base, base, self.modulus, self.p)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        n = self.q - 1
        omega_coeffs = self._decode(self.omega)
        exp_table = [0] * n
        log_table = [-1] * self.q
        x = (1,) + (0,) * (self.r - 1)
        for i in range(n):
            code = self._encode(x)
            if log_table[code] != -1:
                raise AssertionError(f"omega has order {i} < {n}")
            exp_table[i] = code
            log_table[code] = i
            x = _poly_mul_mod(x, omega_coeffs, self.modulus, self.p)
        if self._encode(x) != 1:
            raise AssertionError("omega^(q-1) != 1")
        self._exp = exp_table
        self._log = log_table

    # -- element arithmetic on integer codes --------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, x: int) -> tuple[int, ...]:
        return self._decode(x)

    def from_coeffs(self, coeffs) -> int:
        return self._encode(tuple(c % self.p for c in coeffs))

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.r == 1:
            return (x + y) % self.p
        return self._encode(tuple((a + b) % self.p
                                  for a, b in zip(self._decode(x), self._decode(y))))

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        if self.r == 1:
            return (-x) % self.p
        return self._encode(tuple((-a) % self.p for a in self._decode(x)))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def frobenius(self, x: int) -> int:
        """x -> x^p; on dlog indices this is i -> p*i mod (q-1)."""
        if x == 0:
            return 0
        return self._exp[(self._log[x] * self.p) % (self.q - 1)]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise LogOfZero("discrete log of zero is undefined")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def vadd(self, xs: np.ndarray, y: int) -> np.ndarray:
        """Vectorized add of a constant to an array of element codes."""
        if self.p == 2:
            return xs ^ y
        if self.r == 1:
            return (xs + y) % self.p
        if self._digit_table is None:
            # lazy cache; a concurrent first call would only rebuild the
            # same deterministic array
            codes = np.arange(self.q)
            digits = np.empty((self.q, self.r), dtype=np.int64)
            for i in range(self.r):
                codes, digits[:, i] = np.divmod(codes, self.p)
            self._digit_table = digits
        d = (self._digit_table[xs] + self._digit_table[y]) % self.p
        return d @ np.asarray(self._pow_p, dtype=np.int64)

    # -- misc ----------------------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range [0, {self.q})")
        return FieldElement(self, code)

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "modulus": list(self.modulus),
            "omega": list(self._decode(self.omega)),
        }

    def same_field(self, other: "FiniteField") -> bool:
        return self is other or (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, r={self.r})"


def build_field(p: int, r: int, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    """Construct GF(p^r) with a verified modulus and primitive element."""
    return FiniteField(p, r, cap=cap)


class FieldElement:
    """Thin operator wrapper over an element code bound to its field."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if not self.field.same_field(other.field):
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        # plain integers land in the prime subfield, whose codes are 0..p-1
        return int(other) % self.field.p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field.same_field(other.field) and self.code == other.code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.r, self.code))

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.q}), {self.code})"
