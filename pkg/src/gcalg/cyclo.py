"""Exact arithmetic with rational combinations of roots of unity.

Every phase occurring in the generalized Clifford algebra on 2n generators
(the commutation factor q = exp(2*pi*i/N), its chosen square root zeta, and
all of their products) is an integer power of w = exp(i*pi/N), a primitive
2N-th root of unity.  Scalars are therefore stored as sparse maps from
exponents in [0, 2N) to rational coefficients.  Storage is deliberately not
reduced modulo the cyclotomic polynomial, which keeps printed exponents
recognizable; zero testing and equality reduce the coefficient polynomial
modulo Phi_{2N} and are exact.  Floating point enters only through
``to_complex``, which exists for display and sanity oracles, never for
equality decisions.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "AlgebraContext",
    "ContextMismatchError",
    "CycloScalar",
    "admissible_zeta_exps",
    "cyclotomic_polynomial",
]


class ContextMismatchError(ValueError):
    """Two operands live in different rings or algebra contexts."""


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials; the divisor is monic and must
    # divide exactly (remainder zero), which holds for cyclotomic factors.
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dn] = c
        for j, d in enumerate(den):
            num[i - dn + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients, constant term first, of the m-th cyclotomic polynomial.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(2)
    (1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloScalar:
    """An element of Q(w), with w a primitive ``order``-th root of unity.

    ``coeffs`` maps exponents in [0, order) to nonzero rationals; the value
    represented is sum_k coeffs[k] * w^k.  Instances are immutable values and
    all arithmetic returns new objects.  ``==`` compares the represented
    complex numbers exactly, so two scalars with different stored maps can
    still be equal; consequently the type is unhashable.
    """

    __slots__ = ("order", "coeffs")

    __hash__ = None

    def __init__(self, order: int, coeffs=None):
        if not isinstance(order, int) or order < 1:
            raise ValueError("order must be a positive integer")
        clean: dict[int, Fraction] = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for k, v in items:
                v = Fraction(v)
                if not v:
                    continue
                k = int(k) % order
                w = clean.get(k, 0) + v
                if w:
                    clean[k] = w
                else:
                    del clean[k]
        self.order = order
        self.coeffs = clean

    @classmethod
    def _raw(cls, order: int, clean: dict[int, Fraction]) -> CycloScalar:
        # Internal constructor for maps already in stored form.
        s = cls.__new__(cls)
        s.order = order
        s.coeffs = clean
        return s

    @classmethod
    def zero(cls, order: int) -> CycloScalar:
        return cls._raw(order, {})

    @classmethod
    def one(cls, order: int) -> CycloScalar:
        return cls._raw(order, {0: Fraction(1)})

    @classmethod
    def rational(cls, order: int, value) -> CycloScalar:
        value = Fraction(value)
        return cls._raw(order, {0: value} if value else {})

    @classmethod
    def root(cls, order: int, k: int) -> CycloScalar:
        """The root of unity w^k."""
        return cls._raw(order, {k % order: Fraction(1)})

    def _coerce(self, other) -> CycloScalar | None:
        if isinstance(other, CycloScalar):
            if other.order != self.order:
                raise ContextMismatchError(
                    f"mixed ring orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]
        return CycloScalar._raw(self.order, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self) -> CycloScalar:
        return CycloScalar._raw(self.order, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.order
        out: dict[int, Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in o.coeffs.items():
                k = (k1 + k2) % m
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                else:
                    del out[k]
        return CycloScalar._raw(m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycloScalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers are not defined; conj() inverts unit scalars")
        out = CycloScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def conj(self) -> CycloScalar:
        """Complex conjugate: w^k -> w^{-k}, rationals fixed."""
        m = self.order
        return CycloScalar._raw(m, {(-k) % m: v for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        """Exact zero test: reduce modulo the cyclotomic polynomial."""
        if not self.coeffs:
            return True
        phi = cyclotomic_polynomial(self.order)
        dn = len(phi) - 1
        rem = [Fraction(0)] * self.order
        for k, v in self.coeffs.items():
            rem[k] = v
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c:
                for j, d in enumerate(phi):
                    rem[i - dn + j] -= c * d
        return not any(rem[:dn])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            if other.order != self.order:
                return False
        elif isinstance(other, (int, Fraction)):
            other = CycloScalar.rational(self.order, other)
        else:
            return NotImplemented
        return (self - other).is_zero()

    def to_complex(self) -> complex:
        """Float evaluation at w = exp(2*pi*i/order).  Display only."""
        m = self.order
        return sum(
            (float(v) * cmath.exp(2j * cmath.pi * k / m) for k, v in self.coeffs.items()),
            0j,
        )

    def to_json(self) -> dict:
        z = self.to_complex()
        return {
            "order": self.order,
            "coeffs": [[k, str(v)] for k, v in sorted(self.coeffs.items())],
            "approx": {"re": z.real, "im": z.imag},
        }

    @classmethod
    def from_json(cls, data: dict) -> CycloScalar:
        return cls(data["order"], {int(k): Fraction(v) for k, v in data["coeffs"]})

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.coeffs.items()))
        return f"CycloScalar({self.order}, {{{body}}})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in sorted(self.coeffs.items()):
            if k == 0:
                parts.append(str(v))
            elif v == 1:
                parts.append(f"w^{k}")
            else:
                parts.append(f"{v}*w^{k}")
        return " + ".join(parts)


def admissible_zeta_exps(N: int) -> tuple[int, ...]:
    """Exponents e for which zeta = w^e satisfies zeta^2 = q and zeta^(N^2) = 1.

    Odd N admits only w^(N+1) = -exp(i*pi/N); even N admits both square
    roots of q, with the plus root w first.
    """
    if N % 2:
        return (N + 1,)
    return (1, N + 1)


@lru_cache(maxsize=None)
def _root(order: int, k: int) -> CycloScalar:
    return CycloScalar.root(order, k)


@dataclass(frozen=True)
class AlgebraContext:
    """The pair (N, n) plus the chosen exponent e with zeta = w^e.

    N is the common order of the 2n generators (and of q = w^2); n is the
    number of qudits.  ``zeta_exp`` defaults to the canonical admissible
    choice: N + 1 for odd N, 1 for even N.
    """

    N: int
    n: int
    zeta_exp: int | None = None

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError("N must be an integer >= 2")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be an integer >= 1")
        allowed = admissible_zeta_exps(self.N)
        if self.zeta_exp is None:
            object.__setattr__(self, "zeta_exp", allowed[0])
        elif self.zeta_exp not in allowed:
            raise ValueError(
                f"zeta_exp {self.zeta_exp} is not an admissible square-root "
                f"exponent for N={self.N}; allowed: {allowed}"
            )

    @classmethod
    def from_sign(cls, N: int, n: int, sign: str | None = None) -> AlgebraContext:
        """Build a context from the user-facing '+'/'-' square-root choice.

        '-' selects -exp(i*pi/N) (the only admissible root for odd N);
        '+' selects +exp(i*pi/N) and is valid for even N only.
        """
        if sign is None:
            return cls(N, n)
        if sign == "-":
            return cls(N, n, N + 1)
        if sign == "+":
            if N % 2:
                raise ValueError(
                    f"zeta sign '+' is inadmissible for odd N={N}: "
                    "+exp(i*pi/N) is not an N^2-th root of unity"
                )
            return cls(N, n, 1)
        raise ValueError(f"zeta sign must be '+' or '-', got {sign!r}")

    @property
    def order(self) -> int:
        """Order 2N of the root-of-unity ring holding every phase."""
        return 2 * self.N

    @property
    def num_generators(self) -> int:
        return 2 * self.n

    @property
    def dim(self) -> int:
        return self.N**self.n

    def zero(self) -> CycloScalar:
        return CycloScalar.zero(self.order)

    def one(self) -> CycloScalar:
        return _root(self.order, 0)

    def scalar(self, value) -> CycloScalar:
        return CycloScalar.rational(self.order, value)

    def omega(self, k: int = 1) -> CycloScalar:
        """The root w^k, exponent reduced mod 2N."""
        return _root(self.order, k % self.order)

    def q(self, k: int = 1) -> CycloScalar:
        """The commutation phase q^k = w^{2k}."""
        return _root(self.order, (2 * k) % self.order)

    def zeta(self, k: int = 1) -> CycloScalar:
        """The chosen square root of q, raised to the k-th power."""
        return _root(self.order, (self.zeta_exp * k) % self.order)
