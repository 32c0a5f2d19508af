"""Exact scalar arithmetic for certificate computations.

Three layers live here:

* ``Scalar`` -- an element of the real field Q(sqrt2, sqrt3), stored as four
  exact rational coordinates against the basis (1, sqrt2, sqrt3, sqrt6).
  Every coefficient appearing in the catalog's bases and witness pairs lies
  in this field, so no wider number field is ever needed.
* ``CScalar`` -- a complex value whose real and imaginary parts are Scalars
  (or ParamScalars in parametric mode).  Matrix entries are CScalars.
* ``ParamScalar`` -- a multivariate polynomial with Scalar coefficients in
  declared parameter symbols, reduced modulo ``sin^2 + cos^2 - 1`` for each
  trigonometric parameter pair.  Division by parametric values is rejected;
  all catalog computations stay polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)


class Scalar:
    """a + b*sqrt2 + c*sqrt3 + d*sqrt6 with exact rational a, b, c, d.

    Values are immutable; equality is coefficient-wise, which is sound
    because (1, sqrt2, sqrt3, sqrt6) is a Q-basis of the field.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Rat = 0, b: Rat = 0, c: Rat = 0, d: Rat = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> "Scalar":
        """Internal fast constructor; arguments must already be Fractions."""
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        return self

    @staticmethod
    def of(x: "Scalar | Rat") -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot build Scalar from {type(x).__name__}")

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if isinstance(other, Scalar):
            return Scalar._make(self.a + other.a, self.b + other.b,
                                self.c + other.c, self.d + other.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if isinstance(other, Scalar):
            return Scalar._make(self.a - other.a, self.b - other.b,
                                self.c - other.c, self.d - other.d)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Scalar._make(self.a * other, self.b * other,
                                self.c * other, self.d * other)
        if isinstance(other, Scalar):
            a1, b1, c1, d1 = self.a, self.b, self.c, self.d
            a2, b2, c2, d2 = other.a, other.b, other.c, other.d
            # rational factors cover most entries; take the short path
            if not (b1 or c1 or d1):
                if not a1:
                    return ZERO
                return Scalar._make(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
            if not (b2 or c2 or d2):
                if not a2:
                    return ZERO
                return Scalar._make(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
            # basis products: s2*s3 = s6, s2*s6 = 2*s3, s3*s6 = 3*s2, s6^2 = 6
            return Scalar._make(
                a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
                a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
                a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
                a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
            )
        return NotImplemented

    __rmul__ = __mul__

    def conj2(self) -> "Scalar":
        """Galois conjugate sending sqrt2 -> -sqrt2."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj3(self) -> "Scalar":
        """Galois conjugate sending sqrt3 -> -sqrt3."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        s2 = self.conj2()
        s3 = self.conj3()
        s23 = s2.conj3()
        num = s2 * s3 * s23
        norm = self * num  # rational by Galois theory
        assert norm.is_rational() and not norm.a == 0
        return num * Fraction(1, 1) * Scalar(Fraction(1) / norm.a)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(1, 1) * Scalar(Fraction(1, 1) / Fraction(other))
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return Scalar.of(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def sign(self) -> int:
        """Exact sign, computed by refining rational enclosures of the radicals."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.a > 0 else -1
        prec = 30
        while True:
            lo, hi = self._enclosure(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def _enclosure(self, digits: int) -> tuple[Fraction, Fraction]:
        scale = 10 ** digits
        bounds = {}
        for key, n in (("b", 2), ("c", 3), ("d", 6)):
            lo = Fraction(isqrt(n * scale * scale), scale)
            bounds[key] = (lo, lo + Fraction(1, scale))
        lo = hi = self.a
        for key in ("b", "c", "d"):
            coef = getattr(self, key)
            blo, bhi = bounds[key]
            if coef >= 0:
                lo += coef * blo
                hi += coef * bhi
            else:
                lo += coef * bhi
                hi += coef * blo
        return lo, hi

    def __lt__(self, other):
        return (self - Scalar.of(other)).sign() < 0

    def __le__(self, other):
        return (self - Scalar.of(other)).sign() <= 0

    def __gt__(self, other):
        return (self - Scalar.of(other)).sign() > 0

    def __ge__(self, other):
        return (self - Scalar.of(other)).sign() >= 0

    # -- conversions ----------------------------------------------------

    def to_float(self) -> float:
        return (float(self.a) + float(self.b) * _SQRT2
                + float(self.c) * _SQRT3 + float(self.d) * _SQRT6)

    __float__ = to_float

    def __repr__(self):
        terms = []
        for coef, sym in ((self.a, ""), (self.b, "√2"), (self.c, "√3"), (self.d, "√6")):
            if coef == 0:
                continue
            if sym and coef == 1:
                t = sym
            elif sym and coef == -1:
                t = "-" + sym
            else:
                t = f"{coef}{sym}" if sym else f"{coef}"
            terms.append(t)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
SQRT3 = Scalar(0, 0, 1)
SQRT6 = Scalar(0, 0, 0, 1)
HALF = Scalar(Fraction(1, 2))


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Exact field arithmetic dispatch; ``op`` is one of add/sub/mul/div."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        return x / y
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Parameter symbols
# ---------------------------------------------------------------------------

# registry: symbol name -> ("free",) | ("cos", base) | ("sin", base)
_SYMBOLS: dict[str, tuple] = {}


def free_symbol(name: str) -> "ParamScalar":
    """Declare (idempotently) a free polynomial indeterminate."""
    kind = _SYMBOLS.get(name)
    if kind is not None and kind != ("free",):
        raise ValueError(f"symbol {name!r} already declared as {kind}")
    _SYMBOLS[name] = ("free",)
    return ParamScalar({((name, 1),): ONE})


def trig_pair(base: str) -> tuple["ParamScalar", "ParamScalar"]:
    """Declare a constrained pair (cos, sin) with cos^2 + sin^2 = 1.

    The angle itself is never represented; instantiation takes exact points
    on the unit circle such as (3/5, 4/5) or (1/2, sqrt3/2).
    """
    cname, sname = f"cos:{base}", f"sin:{base}"
    for nm, kd in ((cname, ("cos", base)), (sname, ("sin", base))):
        prev = _SYMBOLS.get(nm)
        if prev is not None and prev != kd:
            raise ValueError(f"symbol {nm!r} already declared as {prev}")
        _SYMBOLS[nm] = kd
    return (ParamScalar({((cname, 1),): ONE}),
            ParamScalar({((sname, 1),): ONE}))


def _is_sin(name: str) -> bool:
    kind = _SYMBOLS.get(name)
    return kind is not None and kind[0] == "sin"


def _cos_of(sin_name: str) -> str:
    return f"cos:{_SYMBOLS[sin_name][1]}"


Monomial = tuple  # sorted tuple of (symbol_name, exponent)


class ParamScalar:
    """Polynomial over Scalar in declared parameters, kept in reduced form.

    Reduced form: for every trig pair, the sin-symbol appears with exponent
    at most one (sin^2 is rewritten as 1 - cos^2).  The reduced monomials
    are a basis of the quotient ring, so zero testing is exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar]):
        reduced: dict[Monomial, Scalar] = {}
        work = list(terms.items())
        while work:
            mono, coef = work.pop()
            if coef.is_zero():
                continue
            hit = None
            for name, exp in mono:
                if exp >= 2 and _is_sin(name):
                    hit = (name, exp)
                    break
            if hit is None:
                prev = reduced.get(mono, ZERO)
                val = prev + coef
                if val.is_zero():
                    reduced.pop(mono, None)
                else:
                    reduced[mono] = val
                continue
            name, exp = hit
            # sin^2 -> 1 - cos^2
            rest = tuple((n, e) for n, e in mono if n != name)
            lower = exp - 2
            base = rest if lower == 0 else _mono_mul(rest, ((name, lower),))
            cos = _cos_of(name)
            work.append((base, coef))
            work.append((_mono_mul(base, ((cos, 2),)), -coef))
        object.__setattr__(self, "terms", dict(sorted(reduced.items())))

    def __setattr__(self, name, value):
        raise AttributeError("ParamScalar is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(x: Scalar | Rat) -> "ParamScalar":
        x = Scalar.of(x)
        return ParamScalar({(): x})

    @staticmethod
    def lift(x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        return ParamScalar.const(x)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return self.terms.get((), ZERO)

    def symbols(self) -> set[str]:
        out: set[str] = set()
        for mono in self.terms:
            out.update(name for name, _ in mono)
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ParamScalar.const(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, ZERO) + coef
        return ParamScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ParamScalar.const(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ParamScalar.const(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, ZERO) + c1 * c2
        return ParamScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Scalar.of(other)
            return self * other.inverse()
        raise TypeError("division by a parametric expression is not supported")

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = ParamScalar.const(ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = ParamScalar.const(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.terms.items():
            syms = "·".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            cs = repr(coef)
            if " " in cs and syms:
                cs = f"({cs})"
            parts.append(f"{cs}·{syms}" if syms else cs)
        return " + ".join(parts)

    # -- evaluation ----------------------------------------------------------

    def instantiate(self, values: Mapping[str, Scalar | Rat],
                    *, check_trig: bool = True):
        """Substitute parameter values; returns Scalar if fully instantiated.

        Trig pairs must be substituted jointly and exactly satisfy
        cos^2 + sin^2 = 1; partial substitution leaves a ParamScalar in the
        remaining symbols.
        """
        vals = {k: Scalar.of(v) for k, v in values.items()}
        if check_trig:
            for name, v in vals.items():
                kind = _SYMBOLS.get(name)
                if kind and kind[0] in ("cos", "sin"):
                    base = kind[1]
                    cn, sn = f"cos:{base}", f"sin:{base}"
                    if cn not in vals or sn not in vals:
                        raise ValueError(
                            f"trig pair for {base!r} must be instantiated jointly")
                    cc, ss = vals[cn], vals[sn]
                    if not (cc * cc + ss * ss == ONE):
                        raise ValueError(
                            f"({cc!r}, {ss!r}) is not an exact point on the unit circle")
        out: dict[Monomial, Scalar] = {}
        for mono, coef in self.terms.items():
            acc = coef
            rest = []
            for name, exp in mono:
                if name in vals:
                    acc = acc * vals[name] ** exp
                else:
                    rest.append((name, exp))
            key = tuple(rest)
            out[key] = out.get(key, ZERO) + acc
        result = ParamScalar(out)
        if result.is_constant():
            return result.constant_value()
        return result

    def to_float(self, values: Mapping[str, float] | None = None) -> float:
        total = 0.0
        for mono, coef in self.terms.items():
            t = coef.to_float()
            for name, exp in mono:
                if values is None or name not in values:
                    raise ValueError(f"no value for symbol {name!r}")
                t *= values[name] ** exp
            total += t
        return total

    # -- factor structure ------------------------------------------------------

    def monomial_content(self) -> tuple[dict[str, int], "ParamScalar"]:
        """Split off the largest monomial dividing every term."""
        if self.is_zero():
            return {}, self
        common: dict[str, int] | None = None
        for mono in self.terms:
            d = dict(mono)
            if common is None:
                common = d
            else:
                common = {n: min(e, d[n]) for n, e in common.items() if n in d}
        assert common is not None
        common = {n: e for n, e in common.items() if e > 0}
        if not common:
            return {}, self
        out = {}
        for mono, coef in self.terms.items():
            d = dict(mono)
            for n, e in common.items():
                d[n] -= e
            out[tuple(sorted((n, e) for n, e in d.items() if e))] = coef
        return common, ParamScalar(out)

    def normalized(self) -> "ParamScalar":
        """Scale so the lexicographically last monomial has coefficient one."""
        if self.is_zero():
            return self
        lead = self.terms[max(self.terms)]
        return self * lead.inverse()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    d = dict(m1)
    for n, e in m2:
        d[n] = d.get(n, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


# ---------------------------------------------------------------------------
# Zero testing with vanishing-locus report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroStatus:
    kind: str                       # "zero" | "generic" | "everywhere"
    factors: tuple[ParamScalar, ...] = ()

    def __str__(self):
        if self.kind == "zero":
            return "IdenticallyZero"
        if self.kind == "everywhere":
            return "NonzeroEverywhere"
        facs = ", ".join(repr(f) for f in self.factors)
        return f"NonzeroGenerically(excluded where: {facs})"


def param_is_zero(x: ParamScalar) -> ZeroStatus:
    """Decide whether a reduced polynomial vanishes identically.

    A nonzero result reports the vanishing conditions as polynomial factors:
    the monomial content contributes one factor per symbol, and the primitive
    part is reported normalized.  Nonzero constants are nonzero everywhere.
    """
    x = ParamScalar.lift(x)
    if x.is_zero():
        return ZeroStatus("zero")
    if x.is_constant():
        return ZeroStatus("everywhere")
    content, primitive = x.monomial_content()
    factors: list[ParamScalar] = []
    for name in sorted(content):
        factors.append(ParamScalar({((name, 1),): ONE}))
    if not primitive.is_constant():
        factors.append(primitive.normalized())
    return ZeroStatus("generic", tuple(factors))


# ---------------------------------------------------------------------------
# Complex values
# ---------------------------------------------------------------------------

Real = Union[Scalar, ParamScalar]


class CScalar:
    """Complex value with exact real/imaginary parts.

    Parts are Scalars in exact mode and may be ParamScalars in parametric
    mode; mixed arithmetic coerces Scalar parts upward as needed.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Real | Rat = 0, im: Real | Rat = 0):
        if isinstance(re, (int, Fraction)):
            re = Scalar(re)
        if isinstance(im, (int, Fraction)):
            im = Scalar(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("CScalar is immutable")

    @staticmethod
    def of(x) -> "CScalar":
        if isinstance(x, CScalar):
            return x
        if isinstance(x, (int, Fraction, Scalar, ParamScalar)):
            return CScalar(x)
        raise TypeError(f"cannot build CScalar from {type(x).__name__}")

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_parametric(self) -> bool:
        return isinstance(self.re, ParamScalar) or isinstance(self.im, ParamScalar)

    def conjugate(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def __add__(self, other):
        other = _coerce_c(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce_c(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_c(other)
        if other is None:
            return NotImplemented
        if self.im.is_zero() and other.im.is_zero():
            return CScalar(self.re * other.re)
        return CScalar(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self) -> "CScalar":
        if self.is_parametric():
            raise TypeError("cannot invert a parametric CScalar")
        n = self.re * self.re + self.im * self.im
        ninv = n.inverse()
        return CScalar(self.re * ninv, -(self.im * ninv))

    def __truediv__(self, other):
        other = _coerce_c(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = _coerce_c(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def instantiate(self, values: Mapping[str, Scalar | Rat]) -> "CScalar":
        re, im = self.re, self.im
        if isinstance(re, ParamScalar):
            re = re.instantiate(values)
        if isinstance(im, ParamScalar):
            im = im.instantiate(values)
        return CScalar(re, im)

    def to_complex(self, values: Mapping[str, float] | None = None) -> complex:
        def f(part):
            if isinstance(part, ParamScalar):
                return part.to_float(values)
            return part.to_float()
        return complex(f(self.re), f(self.im))

    def __repr__(self):
        if self.im.is_zero():
            return repr(self.re)
        if self.re.is_zero():
            return f"({self.im!r})i"
        return f"({self.re!r}) + ({self.im!r})i"


def _coerce_c(x):
    if isinstance(x, CScalar):
        return x
    if isinstance(x, (int, Fraction, Scalar, ParamScalar)):
        return CScalar(x)
    return None


C_ZERO = CScalar(0)
C_ONE = CScalar(1)
C_I = CScalar(0, 1)


# ---------------------------------------------------------------------------
# Univariate helpers over the Scalar field (used for locus elimination)
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over Q(sqrt2, sqrt3)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | Rat]):
        cs = [Scalar.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def lead(self) -> Scalar:
        return self.coeffs[-1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return UniPoly([c * inv for c in self.coeffs])

    def __call__(self, x: Scalar | Rat) -> Scalar:
        x = Scalar.of(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return UniPoly([x - y for x, y in zip(a, b)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = Scalar.of(other)
            return UniPoly([c * s for c in self.coeffs])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def divmod_exact(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        dl = other.lead().inverse()
        while len(rem) >= len(other.coeffs) and rem:
            k = len(rem) - len(other.coeffs)
            f = rem[-1] * dl
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * c
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"({c!r})·x^{i}" if i else f"({c!r})"
                          for i, c in enumerate(self.coeffs) if not c.is_zero())


def unipoly_gcd(polys: Iterable[UniPoly]) -> UniPoly:
    """Monic gcd over the field via Euclid's algorithm."""
    g = UniPoly([])
    for p in polys:
        a, b = g, p
        while not b.is_zero():
            _, r = a.divmod_exact(b)
            a, b = b, r
        g = a.monic() if not a.is_zero() else a
        if g.degree == 0:
            return g
    return g
