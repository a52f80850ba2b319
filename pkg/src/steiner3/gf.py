"""Exact arithmetic in GF(p^d) with a canonical element enumeration.

Elements are indexed by the base-p integer encoding of their coefficient
vector in the polynomial basis: index 0 is zero, index 1 is one, and the
index of ``c0 + c1*x + ... + c_{d-1}*x^{d-1}`` is ``sum(c_i * p**i)``.
The modulus is the monic irreducible polynomial of degree d whose own
integer encoding is smallest, so every context is reproducible from
(p, d) alone.  The multiplicative generator ``omega`` is the element of
full order with the smallest index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

MAX_ORDER = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as {prime: multiplicity}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k, or None if n is not a prime power."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    return next(iter(fac.items()))


# -- polynomial helpers over GF(p); a polynomial is its own base-p encoding --

def _poly_coeffs(enc: int, p: int) -> list[int]:
    out = []
    while enc:
        enc, c = divmod(enc, p)
        out.append(c)
    return out


def _poly_divmod(num: int, den: int, p: int) -> tuple[int, int]:
    a = _poly_coeffs(num, p)
    b = _poly_coeffs(den, p)
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else 1
    q = [0] * (max(len(a) - len(b) + 1, 1))
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] * inv_lead % p
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
    rem = reduce(lambda acc, c: acc * p + c, reversed(a), 0) if a else 0
    quo = reduce(lambda acc, c: acc * p + c, reversed(q), 0)
    return quo, rem


def _poly_is_irreducible(enc: int, degree: int, p: int) -> bool:
    # trial division by every monic polynomial of degree 1..degree//2
    for deg in range(1, degree // 2 + 1):
        lead = p ** deg
        for low in range(lead):
            if _poly_divmod(enc, lead + low, p)[1] == 0:
                return False
    return True


def _smallest_irreducible(p: int, d: int) -> int:
    for enc in range(p ** d, 2 * p ** d):
        if _poly_is_irreducible(enc, d, p):
            return enc
    raise FieldError(f"no irreducible polynomial of degree {d} over GF({p})")


@dataclass(frozen=True)
class FieldElement:
    """An element of a fixed FieldContext, identified by its index."""

    ctx: "FieldContext"
    index: int

    def _peer(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.ctx != other.ctx:
            raise FieldError("elements belong to different field contexts")
        return other.index

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx._add(self.index, self._peer(other)))

    def __sub__(self, other):
        o = self._peer(other)
        return FieldElement(self.ctx, self.ctx._add(self.index, self.ctx._neg(o)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.index))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx._mul(self.index, self._peer(other)))

    def __pow__(self, e: int):
        return self.ctx.pow(self, e)

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"<{self.ctx._poly_str(self.index)} in GF({self.ctx.p}^{self.ctx.d})>"


class FieldContext:
    """GF(p^d) in the polynomial basis of its canonical modulus.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p: int, d: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if d < 1:
            raise FieldError(f"extension degree must be >= 1, got {d}")
        if p ** d > MAX_ORDER:
            raise FieldError(f"field order {p}^{d} exceeds the {MAX_ORDER} bound")
        self.p = p
        self.d = d
        self.order = p ** d
        mod_enc = _smallest_irreducible(p, d)
        if not _poly_is_irreducible(mod_enc, d, p):
            raise FieldError("modulus is reducible")  # defensive; cannot happen
        self.modulus: tuple[int, ...] = tuple(_poly_coeffs(mod_enc, p))
        self._mod_enc = mod_enc
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._omega_idx = self._find_primitive()
        if self.order <= 1 << 16:
            self._build_tables()

    # -- construction internals --

    def _find_primitive(self) -> int:
        n = self.order - 1
        primes = list(factorize(n)) if n > 1 else []
        for idx in range(1, self.order):
            if all(self._pow_raw(idx, n // ell) != 1 for ell in primes):
                if self._pow_raw(idx, n) != 1:
                    raise FieldError("primitive candidate violates Lagrange")  # defensive
                return idx
        raise FieldError("no primitive element found")  # unreachable

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._mul_raw(exp[i - 1], self._omega_idx)
        log = [0] * self.order
        for i, value in enumerate(exp):
            log[value] = i
        self._exp, self._log = exp, log

    # -- raw index arithmetic --

    def _add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, shift = 0, 1
        while a or b:
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            out += (ca + cb) % self.p * shift
            shift *= self.p
        return out

    def _neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out, shift = 0, 1
        while a:
            a, c = divmod(a, self.p)
            out += (-c) % self.p * shift
            shift *= self.p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        # schoolbook product of coefficient vectors, reduced by the modulus
        ca = _poly_coeffs(a, self.p)
        cb = _poly_coeffs(b, self.p)
        prod = [0] * (len(ca) + len(cb) - 1) if ca and cb else []
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        mod = self.modulus
        for top in range(len(prod) - 1, self.d - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i in range(self.d):
                    prod[top - self.d + i] = (prod[top - self.d + i] - c * mod[i]) % self.p
        return reduce(lambda acc, c: acc * self.p + c, reversed(prod), 0)

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_raw(a, b)

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return out

    def _pow(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow(self._inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        out = 1
        while e:
            if e & 1:
                out = self._mul(out, a)
            a = self._mul(a, a)
            e >>= 1
        return out

    def _inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        return self._pow(a, self.order - 2)

    def _poly_str(self, enc: int) -> str:
        if enc == 0:
            return "0"
        parts = []
        for i, c in enumerate(_poly_coeffs(enc, self.p)):
            if not c:
                continue
            coeff = "" if (c == 1 and i > 0) else str(c)
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{coeff}x")
            else:
                parts.append(f"{coeff}x^{i}")
        return "+".join(reversed(parts))

    # -- public surface --

    def __eq__(self, other):
        return (
            isinstance(other, FieldContext)
            and (self.p, self.d, self.modulus) == (other.p, other.d, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))

    def __repr__(self):
        return f"FieldContext(GF({self.p}^{self.d}), modulus={self._poly_str(self._mod_enc)})"

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.order:
            raise FieldError(f"index {index} out of range for GF({self.p}^{self.d})")
        return FieldElement(self, index)

    def elements(self):
        return (FieldElement(self, i) for i in range(self.order))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def omega(self) -> FieldElement:
        """The smallest-index multiplicative generator."""
        return FieldElement(self, self._omega_idx)

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self._wrap(a) + b

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self._wrap(a) - b

    def neg(self, a: FieldElement) -> FieldElement:
        return -self._wrap(a)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self._wrap(a) * b

    def inv(self, a: FieldElement) -> FieldElement:
        return FieldElement(self, self._inv(self._wrap(a).index))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        return FieldElement(self, self._pow(self._wrap(a).index, e))

    def _wrap(self, a: FieldElement) -> FieldElement:
        if not isinstance(a, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(a).__name__}")
        if a.ctx != self:
            raise FieldError("element belongs to a different field context")
        return a

    def frobenius(self, a: FieldElement, r: int) -> FieldElement:
        """a ** r where r must be a power of the characteristic."""
        a = self._wrap(a)
        rr = r
        while rr > 1 and rr % self.p == 0:
            rr //= self.p
        if rr != 1 or r < 1:
            raise FieldError(f"{r} is not a power of the characteristic {self.p}")
        return FieldElement(self, self._pow(a.index, r))

    def multiplicative_order(self, a: FieldElement) -> int:
        a = self._wrap(a)
        if a.index == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for ell, mult in factorize(n).items() if n > 1 else []:
            for _ in range(mult):
                if self._pow(a.index, order // ell) == 1:
                    order //= ell
                else:
                    break
        return order

    def primitive_sixth_root(self) -> FieldElement:
        """The smallest-index element of multiplicative order exactly 6."""
        if (self.order - 1) % 6 != 0:
            raise FieldError(f"6 does not divide {self.order} - 1")
        for idx in range(2, self.order):
            if (
                self._pow(idx, 6) == 1
                and self._pow(idx, 2) != 1
                and self._pow(idx, 3) != 1
            ):
                return FieldElement(self, idx)
        raise FieldError("no element of order 6 found")  # unreachable given the pre

    def subfield_indices(self, q: int) -> list[int]:
        """Indices of the subfield {a : a^q == a}; q must be a power of p."""
        qq = q
        while qq > 1 and qq % self.p == 0:
            qq //= self.p
        if qq != 1 or q < self.p or (self.order - 1) % (q - 1) != 0:
            raise FieldError(f"GF({q}) is not a subfield of GF({self.p}^{self.d})")
        return [i for i in range(self.order) if self._pow(i, q) == i]
