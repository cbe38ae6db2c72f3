"""Exact arithmetic in two ordered fields: the rationals Q, and Q(e),
the field of rational functions in one indeterminate e over Q.

Rationals are plain `fractions.Fraction` values.  An element of Q(e) is
a `RatFuncEps`: a quotient num/den of `PolyEps` polynomials kept in a
canonical form (den monic, gcd(num, den) = 1), so structural equality
of the representation is equality in the field.

Q(e) is ordered by reading the sign of the lowest-order nonzero
coefficient.  This is the unique ordering in which e is a positive
infinitesimal: 0 < e < r for every positive rational r.  `sign`,
`is_infinitesimal` and `eps_order` decide order questions exactly.

The module also canonicalizes square classes, i.e. the multiplicative
group of the field modulo nonzero squares.  Every nonzero element of
Q(e) maps to a unique representative of the shape

    (squarefree integer) * (monic squarefree polynomial),

found by reducing num/den to the polynomial num*den (they differ by the
square den^2).  Two elements lie in the same class exactly when their
representatives are structurally equal; a quotient shape would not be
canonical, because u/v and u*v always share a class.

A small text grammar for field elements (used by the CLI and the JSON
matrix format) is implemented by `parse_elem` / `format_elem`:

    rat     := '-'? digits ('/' digits)?
    mono    := rat ('*' 'e' ('^' digits)?)? | 'e' ('^' digits)?
    poly    := mono (('+'|'-') mono)*
    elem    := poly | '(' poly ')' '/' '(' poly ')'

Whitespace is insignificant and 'e' denotes the infinitesimal.  A
single-monomial numerator may omit its parentheses ("8*e^2/(1+e^2)");
the formatter emits that compact shape.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rat",
    "PolyEps",
    "RatFuncEps",
    "SquareClassRep",
    "eps",
    "sign",
    "is_infinitesimal",
    "eps_order",
    "is_square",
    "square_class",
    "squarefree_part",
    "squarefree_decomposition",
    "squarefree_int",
    "parse_elem",
    "format_elem",
    "parse_rat",
    "format_rat",
    "ElemSyntaxError",
]

Rat = Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class PolyEps:
    """Polynomial in e with rational coefficients, lowest power first.

    `coeffs[k]` is the coefficient of e^k.  The highest-index
    coefficient is nonzero; the zero polynomial has an empty tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def ord0(self):
        """Multiplicity of the root e = 0, or None for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyEps):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyEps(other).coeffs
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __neg__(self):
        return PolyEps(tuple(-c for c in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, PolyEps):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyEps(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return PolyEps(out)

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

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return _POLY_ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return PolyEps(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = _POLY_ONE
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < o.degree:
            return _POLY_ZERO, self
        db, lcb = o.degree, o.lc
        rem = list(self.coeffs)
        quo = [Fraction(0)] * (len(rem) - db)
        for k in reversed(range(len(quo))):
            c = rem[k + db]
            if c:
                c = c / lcb
                quo[k] = c
                for i, bi in enumerate(o.coeffs):
                    rem[k + i] -= c * bi
        return PolyEps(quo), PolyEps(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return PolyEps(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self):
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        if self.lc == 1:
            return self
        inv = Fraction(1) / self.lc
        return PolyEps(tuple(c * inv for c in self.coeffs))

    def evaluate(self, t):
        """Value at e = t, computed with exact rational arithmetic."""
        t = _as_fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @staticmethod
    def gcd(a, b):
        """Monic greatest common divisor (0 if both arguments are 0)."""
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else _POLY_ZERO

    def __repr__(self):
        return f"PolyEps({_format_poly(self)!r})"

    def __str__(self):
        return _format_poly(self)


_POLY_ZERO = PolyEps()
_POLY_ONE = PolyEps(1)


def _as_poly(x):
    if isinstance(x, PolyEps):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyEps(x)
    raise TypeError(f"expected a polynomial or rational, got {type(x).__name__}")


class RatFuncEps:
    """Element of Q(e): a reduced quotient num/den with den monic.

    The canonical form makes structural equality coincide with field
    equality.  Arithmetic accepts ints, Fractions and PolyEps on either
    side and always returns canonical values.  Division by zero raises
    ZeroDivisionError.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = _POLY_ZERO
            self.den = _POLY_ONE
            return
        g = PolyEps.gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        if den.lc != 1:
            inv = Fraction(1) / den.lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    def __bool__(self):
        return not self.num.is_zero

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFuncEps):
            return other
        if isinstance(other, (int, Fraction, PolyEps)):
            return RatFuncEps(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        # A rational-valued element must hash like the Fraction it equals.
        if self.den == _POLY_ONE and self.num.degree <= 0:
            return hash(self.num.lc)
        return hash((self.num.coeffs, self.den.coeffs))

    def __neg__(self):
        return RatFuncEps(-self.num, self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFuncEps(self.num * o.den + o.num * self.den, self.den * o.den)

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

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFuncEps(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero field element")
        return RatFuncEps(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if not self:
                raise ZeroDivisionError("zero has no negative powers")
            return RatFuncEps(self.den, self.num) ** (-k)
        return RatFuncEps(self.num**k, self.den**k)

    def sign(self):
        """Sign near 0+: the product of the signs of the lowest-order
        nonzero coefficients of num and den; 0 iff the element is 0."""
        if not self:
            return 0
        a = self.num.coeffs[self.num.ord0]
        b = self.den.coeffs[self.den.ord0]
        return 1 if (a > 0) == (b > 0) else -1

    def is_infinitesimal(self):
        """True iff |self| < r for every positive rational r (0 included)."""
        if not self:
            return True
        return self.num.ord0 > self.den.ord0

    def eps_order(self):
        """Order of vanishing at e = 0, or None for the zero element."""
        if not self:
            return None
        return self.num.ord0 - self.den.ord0

    def evaluate(self, t):
        """Exact value at e = t; raises ZeroDivisionError at a pole."""
        d = self.den.evaluate(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at e = {t}")
        return self.num.evaluate(t) / d

    def _cmp_sign(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s < 0

    def __le__(self, other):
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s <= 0

    def __gt__(self, other):
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s > 0

    def __ge__(self, other):
        s = self._cmp_sign(other)
        if s is None:
            return NotImplemented
        return s >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        return f"RatFuncEps({format_elem(self)!r})"

    def __str__(self):
        return format_elem(self)


eps = RatFuncEps(PolyEps((0, 1)))


# ---------------------------------------------------------------------------
# order and squares, uniformly over both field instantiations


def sign(x):
    """Sign of x in its ordered field: -1, 0 or +1."""
    if isinstance(x, RatFuncEps):
        return x.sign()
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    raise TypeError(f"not a field element: {type(x).__name__}")


def is_infinitesimal(x):
    """True iff |x| is below every positive rational.  Zero counts as
    infinitesimal; over Q the predicate degenerates to x == 0."""
    if isinstance(x, RatFuncEps):
        return x.is_infinitesimal()
    if isinstance(x, (int, Fraction)):
        return x == 0
    raise TypeError(f"not a field element: {type(x).__name__}")


def eps_order(x):
    """Order of vanishing at e = 0: None for 0, an integer otherwise
    (0 for any nonzero rational)."""
    if isinstance(x, RatFuncEps):
        return x.eps_order()
    if isinstance(x, (int, Fraction)):
        return 0 if x != 0 else None
    raise TypeError(f"not a field element: {type(x).__name__}")


def squarefree_decomposition(p):
    """Yun's algorithm: pairwise-coprime monic squarefree a_i with
    monic(p) = prod a_i^i; returned as a list of (a_i, i), i ascending."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    f = p.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    g = PolyEps.gcd(f, df)
    b = f // g
    c = df // g
    z = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = PolyEps.gcd(b, z)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = z // a
        z = c - b.derivative()
        i += 1
    return out

def squarefree_part(p):
    """Monic product of the irreducible factors of p with odd
    multiplicity, so p = lc(p) * result * (monic square)."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    out = _POLY_ONE
    for a, i in squarefree_decomposition(p):
        if i % 2:
            out = out * a
    return out


def squarefree_int(n):
    """Squarefree part of a nonzero integer, with its sign, found by
    trial division (inputs are desk-scale by construction)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    out = -1 if n < 0 else 1
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    return out * n


@dataclass(frozen=True)
class SquareClassRep:
    """Canonical representative of a coset of the nonzero squares.

    Two elements x, y satisfy square_class(x) == square_class(y)
    exactly when x*y is a square in the field.
    """

    rep: object  # Fraction, or RatFuncEps in the Q(e) instantiation

    def __mul__(self, other):
        if not isinstance(other, SquareClassRep):
            return NotImplemented
        return square_class(self.rep * other.rep)

    @property
    def is_trivial(self):
        return self.rep == 1

    def __str__(self):
        return format_elem(self.rep)


def square_class(x):
    """Canonical square-class representative of a nonzero element."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if x == 0:
            raise ValueError("zero has no square class")
        return SquareClassRep(Fraction(squarefree_int(x.numerator * x.denominator)))
    if isinstance(x, RatFuncEps):
        if not x:
            raise ValueError("zero has no square class")
        # x and num*den differ by the square den^2, so the class is the
        # class of the polynomial num*den: its squarefree monic part
        # times the squarefree part of its leading coefficient.
        p = x.num * x.den
        w = squarefree_part(p)
        lc = p.lc
        s = Fraction(squarefree_int(lc.numerator * lc.denominator))
        return SquareClassRep(_demote(RatFuncEps(w * s)))
    raise TypeError(f"not a field element: {type(x).__name__}")


def is_square(x):
    """True iff x = y*y for some field element y (0 is a square)."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if x < 0:
            return False
        return _is_square_int(x.numerator) and _is_square_int(x.denominator)
    if isinstance(x, RatFuncEps):
        if not x:
            return True
        return square_class(x).is_trivial
    raise TypeError(f"not a field element: {type(x).__name__}")


def _is_square_int(n):
    r = math.isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------------
# element grammar


class ElemSyntaxError(ValueError):
    """Input does not conform to the field-element grammar."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


_TOKEN_RE = re.compile(r"(\d+)|([()+\-*/^])|(e)|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        off = m.start()
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), off))
        elif m.group(2) is not None:
            tokens.append((m.group(2), m.group(2), off))
        elif m.group(3) is not None:
            tokens.append(("eps", "e", off))
        else:
            raise ElemSyntaxError(f"unexpected character {m.group(4)!r}", off)
    tokens.append(("end", "", len(text)))
    return tokens


class _ElemParser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self):
        t = self.toks[self.i]
        if t[0] != "end":
            self.i += 1
        return t

    def expect(self, kind, what):
        t = self.take()
        if t[0] != kind:
            raise ElemSyntaxError(f"expected {what}", t[2])
        return t

    def parse(self):
        if self.peek()[0] == "(":
            num = self._paren_poly()
            if self.peek()[0] == "/":
                self.take()
                den = self._paren_poly()
            else:
                den = _POLY_ONE
        else:
            num, terms = self._poly()
            if self.peek()[0] == "/":
                slash = self.take()
                if terms != 1:
                    raise ElemSyntaxError(
                        "parenthesize a multi-term numerator before '/'", slash[2]
                    )
                den = self._paren_poly()
            else:
                den = _POLY_ONE
        t = self.peek()
        if t[0] != "end":
            raise ElemSyntaxError("trailing input", t[2])
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        return RatFuncEps(num, den)

    def _paren_poly(self):
        self.expect("(", "'('")
        p, _ = self._poly()
        self.expect(")", "')'")
        return p

    def _poly(self):
        p = self._mono()
        terms = 1
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self._mono()
            p = p + q if op == "+" else p - q
            terms += 1
        return p, terms

    def _mono(self):
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        t = self.peek()
        if t[0] == "num":
            coeff = self._rat_tail()
            if self.peek()[0] == "*":
                self.take()
                self.expect("eps", "'e'")
                k = self._power_tail()
            else:
                k = 0
        elif t[0] == "eps":
            self.take()
            coeff = Fraction(1)
            k = self._power_tail()
        else:
            raise ElemSyntaxError("expected a rational or 'e'", t[2])
        if neg:
            coeff = -coeff
        return PolyEps([Fraction(0)] * k + [coeff])

    def _rat_tail(self):
        t = self.expect("num", "digits")
        a = int(t[1])
        if self.peek()[0] == "/" and self.peek(1)[0] == "num":
            self.take()
            b_tok = self.take()
            if int(b_tok[1]) == 0:
                raise ZeroDivisionError(
                    f"zero denominator in rational (offset {b_tok[2]})"
                )
            return Fraction(a, int(b_tok[1]))
        return Fraction(a)

    def _power_tail(self):
        if self.peek()[0] == "^":
            self.take()
            t = self.expect("num", "digits after '^'")
            return int(t[1])
        return 1


def _demote(rf):
    """Collapse a rational-valued RatFuncEps to a Fraction."""
    if isinstance(rf, RatFuncEps) and rf.den == _POLY_ONE and rf.num.degree <= 0:
        return rf.num.lc
    return rf


def parse_elem(text):
    """Parse a field element; returns a Fraction when the value is
    rational, a RatFuncEps otherwise.  Raises ElemSyntaxError (with the
    offending offset) on bad syntax, ZeroDivisionError on a zero
    denominator."""
    return _demote(_ElemParser(_tokenize(text)).parse())


def parse_rat(text):
    """Parse a rational constant; rejects anything involving e."""
    x = parse_elem(text)
    if not isinstance(x, Fraction):
        raise ValueError(f"not a rational constant: {text!r}")
    return x


def format_rat(q):
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _format_mono(k, c):
    if k == 0:
        return format_rat(c)
    e = "e" if k == 1 else f"e^{k}"
    return e if c == 1 else f"{format_rat(c)}*{e}"


def _format_poly(p):
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mono = _format_mono(k, abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + mono)
        else:
            parts.append(("-" if c < 0 else "+") + mono)
    return "".join(parts)


def format_elem(x):
    """Canonical string for a field element; `parse_elem` inverts it.
    Polynomials print in increasing powers of e, rationals as p/q with
    q omitted when 1."""
    if isinstance(x, (int, Fraction)):
        return format_rat(x)
    if isinstance(x, PolyEps):
        x = RatFuncEps(x)
    if not isinstance(x, RatFuncEps):
        raise TypeError(f"not a field element: {type(x).__name__}")
    num_s = _format_poly(x.num)
    if x.den == _POLY_ONE:
        return num_s
    if sum(1 for c in x.num.coeffs if c) > 1:
        num_s = f"({num_s})"
    return f"{num_s}/({_format_poly(x.den)})"
