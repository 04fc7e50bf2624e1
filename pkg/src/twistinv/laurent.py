"""Integer Laurent polynomials in v, with u = v**2.

Values are immutable and stored densely: an offset (the lowest exponent)
plus a tuple of integer coefficients whose first and last entries are
nonzero.  The zero polynomial is ``(offset=0, coeffs=())``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class DomainError(ValueError):
    """An operation was asked to act outside its domain."""


def _trim(offset: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    __slots__ = ("offset", "coeffs", "_hash")

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        off, cs = _trim(int(offset), [int(c) for c in coeffs])
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, offset: int, coeffs: tuple[int, ...]) -> "LaurentPoly":
        # caller guarantees trimming
        obj = object.__new__(cls)
        object.__setattr__(obj, "offset", offset)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        if coeff == 0:
            return ZERO
        return cls._raw(exp, (coeff,))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def from_u(cls, coeffs: Iterable[int], offset: int = 0) -> "LaurentPoly":
        """Polynomial sum_k coeffs[k] u^(offset+k)."""
        return cls.from_dict({2 * (offset + k): c for k, c in enumerate(coeffs)})

    # inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def min_exp(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no exponents")
        return self.offset

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no exponents")
        return self.offset + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        k = exp - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        return [(self.offset + k, c) for k, c in enumerate(self.coeffs) if c]

    def is_in_u(self) -> bool:
        """True when every exponent is even and nonnegative."""
        return all(e >= 0 and e % 2 == 0 for e, _ in self.terms())

    def u_degree(self) -> int:
        return self.max_exp // 2

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for k, c in enumerate(self.coeffs):
            out[self.offset - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.offset - lo + k] += c
        off, cs = _trim(lo, out)
        return LaurentPoly._raw(off, cs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            c = b[0]
            return LaurentPoly._raw(self.offset + other.offset, tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return LaurentPoly._raw(self.offset + other.offset, tuple(x * c for x in b))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        off, cs = _trim(self.offset + other.offset, out)
        return LaurentPoly._raw(off, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly._raw(self.offset * n, (self.coeffs[0] ** (-n % 2),))
            raise DomainError("only units can be raised to negative powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.offset + k, self.coeffs)

    def divmod_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raise when the remainder is nonzero."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return ZERO
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        nq = len(rem) - len(d) + 1
        if nq <= 0:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        q = [0] * nq
        for k in range(nq - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            qc = c // lead
            q[k] = qc
            for j, dj in enumerate(d):
                rem[k + j] -= qc * dj
        if any(rem):
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        off, cs = _trim(self.offset - divisor.offset, q)
        return LaurentPoly._raw(off, cs)

    # specialised operations ----------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> 1/v."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.max_exp, self.coeffs[::-1])

    def split_strictneg(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Return (part on exponents < 0, part on exponents >= 0)."""
        if not self.coeffs or self.offset >= 0:
            return ZERO, self
        cut = -self.offset
        neg = LaurentPoly(self.offset, self.coeffs[:cut])
        rest = LaurentPoly(0, self.coeffs[cut:])
        return neg, rest

    def mod2(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, [c & 1 for c in self.coeffs])

    def sub_minus_u(self) -> "LaurentPoly":
        """u -> -u on a polynomial in u."""
        if not self.is_in_u():
            raise DomainError(f"{self} is not a polynomial in u")
        return LaurentPoly._raw(
            self.offset,
            tuple(c if ((self.offset + k) // 2) % 2 == 0 else -c
                  for k, c in enumerate(self.coeffs)),
        )

    def halve_exponents(self) -> "LaurentPoly":
        """Substitute v^(2k) -> v^k; requires even support."""
        if any(e % 2 for e, _ in self.terms()):
            raise DomainError(f"{self} has odd exponents")
        return LaurentPoly.from_dict({e // 2: c for e, c in self.terms()})

    def eval_u1(self) -> int:
        return sum(self.coeffs)

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.offset, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        return cls(obj["offset"], obj["coeffs"])

    def __str__(self):
        if not self.coeffs:
            return "0"
        use_u = self.is_in_u()
        parts = []
        for e, c in self.terms():
            if use_u:
                var, k = "u", e // 2
            else:
                var, k = "v", e
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            mag = abs(c)
            if mono == "":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (1,))
V = LaurentPoly._raw(1, (1,))
VINV = LaurentPoly._raw(-1, (1,))
U = LaurentPoly._raw(2, (1,))
UINV = LaurentPoly._raw(-2, (1,))
V_PLUS_VINV = LaurentPoly._raw(-1, (1, 0, 1))
V_MINUS_VINV = LaurentPoly._raw(-1, (-1, 0, 1))


def v(k: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k)


def u(k: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(2 * k)
