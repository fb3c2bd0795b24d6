"""Coefficient-ring backends.

Every matrix and signal in this package carries its arithmetic with it: an
exact cyclotomic field Q(zeta_w), the plain rationals, a prime field GF(p), a
quadratic extension GF(p^2), or floating complex numbers used as a numerical
cross-check. All exact backends are fields, so an entry is a unit exactly when
it is nonzero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class RingError(ValueError):
    """Invalid ring specification or illegal ring operation."""


BACKEND_KINDS = (
    "cyclotomic-rationals",
    "rationals",
    "prime-field",
    "quadratic-extension-field",
    "complex-float",
)


@dataclass(frozen=True)
class RingSpec:
    """Declarative description of a coefficient ring.

    kind: one of BACKEND_KINDS.
    w: root-of-unity order for the cyclotomic backend.
    p: characteristic for the field backends.
    ext_poly: (c0, c1, c2) of a monic quadratic c2*y^2 + c1*y + c0, c2 == 1.
    tol: absolute comparison tolerance, complex-float backend only.
    """

    kind: str
    w: int | None = None
    p: int | None = None
    ext_poly: tuple[int, int, int] | None = None
    tol: float | None = None


class RingElement:
    """A single value of some ring context; immutable.

    Supports +, -, *, unary -, ** with integer exponents, and == (exact on
    exact backends, tolerance-based on complex-float). Integers mix in freely
    and are embedded through the ring.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring.spec != self.ring.spec:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.payload, o.payload))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(
            self.ring, self.ring._add(self.payload, self.ring._neg(o.payload))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.payload))

    def inverse(self):
        return RingElement(self.ring, self.ring._inv(self.payload))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = self.ring.one()
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.ring._eq(self.payload, o.payload)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def is_zero(self):
        return self == self.ring.zero()

    def key(self):
        """Hashable canonical key, usable for sorting/multiset comparisons."""
        return self.ring._key(self.payload)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.ring._repr(self.payload)


# --- integer polynomial helpers (ascending coefficient lists) ---


def _poly_trim(c):
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num, den):
    """Division of integer polynomials by a monic divisor."""
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], _poly_trim(rem)
    q = [0] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd]
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _poly_trim(q), _poly_trim(rem)


def _fpoly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _fpoly_divmod(num, den):
    """Division with remainder over Q[x] (Fraction coefficients)."""
    rem = [Fraction(c) for c in num]
    den = _fpoly_trim([Fraction(c) for c in den])
    dd = len(den) - 1
    lead = den[-1]
    if len(rem) - 1 < dd:
        return [Fraction(0)], _fpoly_trim(rem)
    q = [Fraction(0)] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd] / lead
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _fpoly_trim(q), _fpoly_trim(rem)


def _fpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _fpoly_sub(a, b):
    n = max(len(a), len(b))
    return _fpoly_trim(
        [
            (a[i] if i < len(a) else Fraction(0))
            - (b[i] if i < len(b) else Fraction(0))
            for i in range(n)
        ]
    )


@lru_cache(maxsize=None)
def cyclotomic_polynomial(w):
    """Integer coefficients of Phi_w, ascending; computed by dividing x^w - 1
    by Phi_d over all proper divisors d of w."""
    if w < 1:
        raise RingError("w must be >= 1")
    num = [-1] + [0] * (w - 1) + [1]
    for d in range(1, w):
        if w % d == 0:
            q, r = _poly_divmod_monic(num, cyclotomic_polynomial(d))
            assert r == [0], "cyclotomic division must be exact"
            num = q
    return tuple(num)


def is_prime(n):
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


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class RingContext:
    """Arithmetic backend behind RingElement; subclasses fill in the payload
    operations. Contexts compare equal when their specs do."""

    spec: RingSpec
    is_exact = True

    def element(self, payload):
        return RingElement(self, payload)

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n) -> RingElement:
        return RingElement(self, self._from_int(n))

    def int_inverse(self, n) -> RingElement:
        """Inverse of the integer n embedded in the ring; fails when the
        characteristic divides n (or n == 0)."""
        ch = self.characteristic()
        if n == 0 or (ch and n % ch == 0):
            raise RingError(f"{n} is not invertible in {self!r}")
        return self.from_int(n).inverse()

    def characteristic(self) -> int:
        return 0

    def root_of_unity(self, w) -> RingElement:
        """Deterministic element of multiplicative order exactly w."""
        raise NotImplementedError

    def unit_order_hint(self) -> int:
        """Typical exponent of the finite unit group; used to bound entry
        order searches."""
        return 2

    def dot(self, pairs):
        """Sum of a*b over (a, b) pairs; subclasses may batch the reduction."""
        acc = self.zero()
        for a, b in pairs:
            acc = acc + a * b
        return acc

    # payload hooks
    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _eq(self, a, b):
        raise NotImplementedError

    def _from_int(self, n):
        raise NotImplementedError

    def _key(self, a):
        return a

    def _repr(self, a):
        return repr(a)

    # element text encoding (file formats)
    def encode(self, el: RingElement):
        raise NotImplementedError

    def decode(self, data) -> RingElement:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, RingContext) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_fraction(s) -> Fraction:
    return Fraction(s)


class RationalsContext(RingContext):
    """Q with Fraction payloads, lowest terms, positive denominator."""

    def __init__(self):
        self.spec = RingSpec(kind="rationals")

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise RingError("inverse of zero")
        return 1 / a

    def _eq(self, a, b):
        return a == b

    def _from_int(self, n):
        return Fraction(n)

    def root_of_unity(self, w):
        if w == 1:
            return self.one()
        if w == 2:
            return self.from_int(-1)
        raise RingError(f"Q has no element of multiplicative order {w}")

    def encode(self, el):
        return _fraction_str(el.payload)

    def decode(self, data):
        return self.element(_parse_fraction(data))

    def __repr__(self):
        return "Q"


class CyclotomicContext(RingContext):
    """Q(zeta_w): residues modulo Phi_w with rational coefficients.

    Payload is (coeffs, den): integer coefficients of degree < deg Phi_w over
    a common positive denominator, gcd-reduced. Phi_w is irreducible over Q,
    so every nonzero element is a unit.
    """

    def __init__(self, w):
        if w < 1:
            raise RingError("w must be >= 1")
        self.w = w
        self.phi = cyclotomic_polynomial(w)
        self.deg = len(self.phi) - 1
        self.spec = RingSpec(kind="cyclotomic-rationals", w=w)

    def _normalize(self, coeffs, den):
        if den < 0:
            coeffs = [-c for c in coeffs]
            den = -den
        g = den
        for c in coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            coeffs = [c // g for c in coeffs]
            den //= g
        if not any(coeffs):
            return ((0,) * self.deg, 1)
        return (tuple(coeffs), den)

    def _reduce(self, coeffs):
        """Reduce an integer coefficient list modulo Phi_w (monic)."""
        coeffs = list(coeffs)
        d = self.deg
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                coeffs[i] = 0
                for j in range(d):
                    coeffs[i - d + j] -= c * self.phi[j]
        coeffs = coeffs[:d]
        coeffs += [0] * (d - len(coeffs))
        return coeffs

    def _add(self, a, b):
        (ca, da), (cb, db) = a, b
        if da == db:
            return self._normalize([x + y for x, y in zip(ca, cb)], da)
        return self._normalize(
            [x * db + y * da for x, y in zip(ca, cb)], da * db
        )

    def _mul(self, a, b):
        (ca, da), (cb, db) = a, b
        return self._normalize(self._reduce(_poly_mul(ca, cb)), da * db)

    def _neg(self, a):
        (ca, da) = a
        return (tuple(-c for c in ca), da)

    def _inv(self, a):
        (ca, da) = a
        if not any(ca):
            raise RingError("inverse of zero")
        # extended Euclid in Q[x]: s*ca + t*Phi_w = gcd = const
        r0 = [Fraction(c) for c in ca]
        r1 = [Fraction(c) for c in self.phi]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        while any(r1):
            q, r = _fpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
        r0 = _fpoly_trim(r0)
        if len(r0) != 1 or r0[0] == 0:
            raise RingError("element is not invertible")
        inv_fracs = [s / r0[0] * da for s in s0]
        return self._from_fractions(inv_fracs)

    def _from_fractions(self, fracs):
        fracs = list(fracs)[: self.deg]
        fracs += [Fraction(0)] * (self.deg - len(fracs))
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        coeffs = [int(f * den) for f in fracs]
        return self._normalize(coeffs, den)

    def _eq(self, a, b):
        return a == b

    def _from_int(self, n):
        coeffs = [0] * self.deg
        coeffs[0] = n
        return self._normalize(coeffs, 1)

    def characteristic(self):
        return 0

    def root_of_unity(self, w):
        # the unit roots of unity in Q(zeta_w) form a cyclic group of order
        # lcm(2, self.w); the canonical order-w root is the element that the
        # evaluation embedding x -> exp(-2*pi*i/self.w) sends to
        # exp(-2*pi*i/w), so the exact and floating backends agree entrywise
        m = self.w if self.w % 2 == 0 else 2 * self.w
        if w < 1 or m % w != 0:
            raise RingError(f"Q(zeta_{self.w}) has no element of order {w}")
        if self.deg == 1:
            # self.w in {1, 2}: x is congruent to a rational
            x = self.element(self._normalize([-self.phi[0]], 1))
        else:
            coeffs = [0] * self.deg
            coeffs[1] = 1
            x = self.element((tuple(coeffs), 1))
        if self.w % w == 0:
            return x ** (self.w // w)
        # self.w odd and w = 2e with e dividing self.w: -x^k evaluates to
        # -zeta^k = exp(-2*pi*i*(2k + self.w)/(2*self.w)), which hits
        # exp(-pi*i/e) at k = (self.w/e)*(1-e)/2 (an integer, e being odd)
        e = w // 2
        k = (self.w // e) * (1 - e) // 2 % self.w
        return -(x ** k)

    def unit_order_hint(self):
        return self.w if self.w % 2 == 0 else 2 * self.w

    def dot(self, pairs):
        # accumulate the unreduced products, reduce and normalise once
        acc = [0] * (2 * self.deg)
        den_acc = 1
        for a, b in pairs:
            (ca, da), (cb, db) = a.payload, b.payload
            prod = _poly_mul(ca, cb)
            dab = da * db
            if dab != den_acc:
                g = math.gcd(den_acc, dab)
                la, lb = dab // g, den_acc // g
                acc = [c * la for c in acc]
                prod = [c * lb for c in prod]
                den_acc *= la
            for i, c in enumerate(prod):
                acc[i] += c
        return self.element(self._normalize(self._reduce(acc), den_acc))

    def evaluate_complex(self, el: RingElement) -> complex:
        """Evaluate at the canonical embedding zeta_w -> exp(-2*pi*i/w)."""
        z = cmath.exp(-2j * cmath.pi / self.w)
        (coeffs, den) = el.payload
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc / den

    def encode(self, el):
        (coeffs, den) = el.payload
        return [_fraction_str(Fraction(c, den)) for c in coeffs]

    def decode(self, data):
        fracs = [_parse_fraction(s) for s in data]
        if len(fracs) != self.deg:
            raise RingError("cyclotomic payload has wrong length")
        return self.element(self._from_fractions(fracs))

    def _repr(self, a):
        (coeffs, den) = a
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z" if abs(c) != 1 else ("z" if c > 0 else "-z"))
            else:
                terms.append(
                    f"{c}*z^{i}" if abs(c) != 1 else (f"z^{i}" if c > 0 else f"-z^{i}")
                )
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body if den == 1 else f"({body})/{den}"

    def __repr__(self):
        return f"Q(zeta_{self.w})"


def _order_exact(el: RingElement, w, one) -> bool:
    if el ** w != one:
        return False
    return all(el ** (w // q) != one for q in _prime_factors(w))


class PrimeFieldContext(RingContext):
    """GF(p) with integer payloads in 0..p-1."""

    def __init__(self, p):
        if not is_prime(p):
            raise RingError(f"{p} is not prime")
        self.p = p
        self.spec = RingSpec(kind="prime-field", p=p)

    def _add(self, a, b):
        return (a + b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        if a % self.p == 0:
            raise RingError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _eq(self, a, b):
        return a == b

    def _from_int(self, n):
        return n % self.p

    def characteristic(self):
        return self.p

    def root_of_unity(self, w):
        if w >= 1 and (self.p - 1) % w == 0:
            one = self.one()
            for a in range(1, self.p):
                el = self.element(a)
                if _order_exact(el, w, one):
                    return el
        raise RingError(f"GF({self.p}) has no element of order {w}")

    def unit_order_hint(self):
        return self.p - 1

    def encode(self, el):
        return [el.payload]

    def decode(self, data):
        return self.element(int(data[0]) % self.p)

    def __repr__(self):
        return f"GF({self.p})"


class QuadraticFieldContext(RingContext):
    """GF(p^2) = GF(p)[y] / (y^2 + c1*y + c0); payload (a, b) means a + b*y."""

    def __init__(self, p, ext_poly):
        if not is_prime(p):
            raise RingError(f"{p} is not prime")
        c0, c1, c2 = ext_poly
        if c2 != 1:
            raise RingError("extension polynomial must be monic")
        c0 %= p
        c1 %= p
        for t in range(p):
            if (t * t + c1 * t + c0) % p == 0:
                raise RingError(
                    f"y^2 + {c1}y + {c0} is reducible over GF({p})"
                )
        self.p = p
        self.c0 = c0
        self.c1 = c1
        self.spec = RingSpec(
            kind="quadratic-extension-field", p=p, ext_poly=(c0, c1, 1)
        )

    def _add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def _mul(self, a, b):
        p, c0, c1 = self.p, self.c0, self.c1
        # (a0 + a1 y)(b0 + b1 y), with y^2 = -c1 y - c0
        hi = a[1] * b[1]
        return (
            (a[0] * b[0] - hi * c0) % p,
            (a[0] * b[1] + a[1] * b[0] - hi * c1) % p,
        )

    def _neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def _inv(self, a):
        if a == (0, 0):
            raise RingError("inverse of zero")
        el = self.element(a)
        return (el ** (self.p * self.p - 2)).payload

    def _eq(self, a, b):
        return a == b

    def _from_int(self, n):
        return (n % self.p, 0)

    def characteristic(self):
        return self.p

    def root_of_unity(self, w):
        q = self.p * self.p
        if w >= 1 and (q - 1) % w == 0:
            one = self.one()
            for idx in range(1, q):
                el = self.element((idx % self.p, idx // self.p))
                if el.payload == (0, 0):
                    continue
                if _order_exact(el, w, one):
                    return el
        raise RingError(f"GF({self.p}^2) has no element of order {w}")

    def unit_order_hint(self):
        return self.p * self.p - 1

    def encode(self, el):
        return [el.payload[0], el.payload[1]]

    def decode(self, data):
        return self.element((int(data[0]) % self.p, int(data[1]) % self.p))

    def _repr(self, a):
        return f"({a[0]} + {a[1]}y)"

    def __repr__(self):
        return f"GF({self.p}^2)"


class ComplexContext(RingContext):
    """Floating complex numbers; equality is |a - b| <= tol."""

    is_exact = False

    def __init__(self, tol=1e-9):
        if tol < 0:
            raise RingError("tol must be non-negative")
        self.tol = tol
        self.spec = RingSpec(kind="complex-float", tol=tol)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if abs(a) <= self.tol:
            raise RingError("inverse of (numerical) zero")
        return 1 / a

    def _eq(self, a, b):
        return abs(a - b) <= self.tol

    def _from_int(self, n):
        return complex(n)

    def root_of_unity(self, w):
        if w < 1:
            raise RingError("w must be >= 1")
        return self.element(cmath.exp(-2j * cmath.pi / w))

    def _key(self, a):
        return (round(a.real, 6), round(a.imag, 6))

    def encode(self, el):
        return [el.payload.real, el.payload.imag]

    def decode(self, data):
        return self.element(complex(float(data[0]), float(data[1])))

    def __repr__(self):
        return "C(float)"


def make_ring(spec: RingSpec) -> RingContext:
    """Build the arithmetic context described by a RingSpec."""
    if spec.kind == "rationals":
        return RationalsContext()
    if spec.kind == "cyclotomic-rationals":
        if spec.w is None:
            raise RingError("cyclotomic backend needs w")
        return CyclotomicContext(spec.w)
    if spec.kind == "prime-field":
        if spec.p is None:
            raise RingError("prime-field backend needs p")
        return PrimeFieldContext(spec.p)
    if spec.kind == "quadratic-extension-field":
        if spec.p is None or spec.ext_poly is None:
            raise RingError("quadratic extension needs p and ext_poly")
        return QuadraticFieldContext(spec.p, spec.ext_poly)
    if spec.kind == "complex-float":
        return ComplexContext(spec.tol if spec.tol is not None else 1e-9)
    raise RingError(f"unknown backend kind {spec.kind!r}")


def rationals() -> RationalsContext:
    return RationalsContext()


def cyclotomic(w) -> CyclotomicContext:
    return CyclotomicContext(w)


def prime_field(p) -> PrimeFieldContext:
    return PrimeFieldContext(p)


def quadratic_field(p, ext_poly=(1, 1, 1)) -> QuadraticFieldContext:
    """GF(p^2); the default modulus y^2 + y + 1 is irreducible mod 5."""
    return QuadraticFieldContext(p, ext_poly)


def complex_ring(tol=1e-9) -> ComplexContext:
    return ComplexContext(tol)
