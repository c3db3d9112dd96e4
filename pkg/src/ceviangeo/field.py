"""Exact arithmetic in the rationals and in towers of real quadratic extensions.

An element lives in Q, Q(sqrt(d1)) or Q(sqrt(d1), sqrt(d2)) for distinct
squarefree integer radicands d > 1 and is stored as Fraction coordinates on
the basis {1, sqrt(d1), sqrt(d2), sqrt(d1*d2)} (truncated to the tower
depth).  Every radicand maps to the positive real root, so elements carry a
decidable sign; equality, order and square roots are decided exactly, with
no floating point anywhere in this module.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import gcd, isqrt


class FieldError(Exception):
    """Base class for errors raised by this module."""


class TowerMismatch(FieldError):
    """Operands generate a field needing more than two quadratic extensions."""


class TowerDepthExceeded(FieldError):
    """A requested extension does not fit in a depth-2 tower."""


class NegativeRadicand(FieldError):
    """Square root of a negative element."""


class NotASquare(FieldError):
    """The element is not a square in its tower.

    ``radicand`` is a squarefree integer whose adjunction would make the
    root representable, or None when no quadratic integer extension helps.
    """

    def __init__(self, message: str, radicand: int | None = None):
        super().__init__(message)
        self.radicand = radicand


class ExpressionError(FieldError):
    """Malformed field-element expression."""


# ---------------------------------------------------------------------------
# integer helpers


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24, which covers every input here
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factorization failed for {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n > 0 as an exponent map."""
    if n <= 0:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend([r, r])
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n > 0 as s*s*m with m squarefree; returns (s, m)."""
    s, m = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


# Factoring huge integers to find an adjoinable radicand can dwarf every
# other cost; past this size a non-square is reported as not adjoinable.
_MAX_FACTOR_BITS = 128


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact rational square root, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# tower descriptors
#
# A tower is a tuple of at most two squarefree radicands.  The canonical
# descriptor for the field generated by a set of square roots keeps the two
# smallest members of the multiplicative closure {a, b, squarefree(a*b)},
# which makes equality of elements a syntactic check.


def canonical_tower(radicands) -> tuple[int, ...]:
    rads = sorted(set(radicands))
    for d in rads:
        if d <= 1 or squarefree_decompose(d)[1] != d:
            raise ValueError(f"radicand {d} is not squarefree > 1")
    if len(rads) <= 1:
        return tuple(rads)
    if len(rads) == 2:
        a, b = rads
        trio = sorted({a, b, squarefree_decompose(a * b)[1]})
        return (trio[0], trio[1])
    if len(rads) == 3:
        a, b, c = rads
        if squarefree_decompose(a * b)[1] == c:
            return (a, b)
        raise TowerMismatch(f"radicands {rads} need a tower deeper than 2")
    raise TowerMismatch(f"radicands {rads} need a tower deeper than 2")


@lru_cache(maxsize=None)
def _directions(tower: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Map each squarefree radicand representable in the tower to
    (basis index, multiplier), meaning basis[index] == multiplier*sqrt(radicand)."""
    if not tower:
        return {}
    if len(tower) == 1:
        return {tower[0]: (1, 1)}
    d1, d2 = tower
    s, m = squarefree_decompose(d1 * d2)
    return {d1: (1, 1), d2: (2, 1), m: (3, s)}


_ZERO = Fraction(0)
_ONE = Fraction(1)


@total_ordering
class FieldElement:
    """An exact element of Q(sqrt(d1), sqrt(d2)) with depth <= 2."""

    __slots__ = ("tower", "coeffs", "_minimal")

    def __init__(self, tower: tuple[int, ...], coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 1 << len(tower):
            raise ValueError("coefficient count must be 2**depth")
        object.__setattr__(self, "tower", tuple(tower))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_minimal", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> FieldElement:
        return cls((), (Fraction(value),))

    @classmethod
    def coerce(cls, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value)
        if isinstance(value, str):
            return parse_element(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldElement")

    @classmethod
    def root(cls, n: int) -> FieldElement:
        """sqrt(n) for a nonnegative integer n, normalized to a squarefree radicand."""
        if n < 0:
            raise NegativeRadicand(f"sqrt({n})")
        s, m = squarefree_decompose(n) if n else (0, 1)
        if m == 1:
            return cls.from_rational(s)
        return cls((m,), (_ZERO, Fraction(s)))

    # -- representation changes ---------------------------------------------

    def in_tower(self, tower: tuple[int, ...]) -> FieldElement:
        """Re-express this element on the basis of a containing tower."""
        if tower == self.tower:
            return self
        src = self.minimal()
        dirs = _directions(tower)
        out = [_ZERO] * (1 << len(tower))
        out[0] = src.coeffs[0]
        src_dirs = _directions(src.tower)
        for rad, (i, mult) in src_dirs.items():
            c = src.coeffs[i]
            if c == 0:
                continue
            if rad not in dirs:
                raise TowerMismatch(f"sqrt({rad}) is not representable in tower {tower}")
            j, tmult = dirs[rad]
            # c * mult * sqrt(rad) == (c*mult/tmult) * basis[j]
            out[j] += c * mult / tmult
        return FieldElement(tower, out)

    def minimal(self) -> FieldElement:
        """Equivalent element over the smallest canonical tower."""
        cached = self._minimal
        if cached is not None:
            return cached
        dirs = _directions(self.tower)
        present: dict[int, Fraction] = {}
        for rad, (i, mult) in dirs.items():
            c = self.coeffs[i]
            if c != 0:
                present[rad] = c * mult  # coefficient of sqrt(rad)
        if not present:
            result = FieldElement((), (self.coeffs[0],))
        else:
            tower = canonical_tower(present)
            tdirs = _directions(tower)
            out = [_ZERO] * (1 << len(tower))
            out[0] = self.coeffs[0]
            for rad, c in present.items():
                j, tmult = tdirs[rad]
                out[j] += c / tmult
            result = FieldElement(tower, out)
        if result.tower == self.tower:
            result = self
        object.__setattr__(self, "_minimal", result)
        return result

    @staticmethod
    def common_tower(a: FieldElement, b: FieldElement) -> tuple[int, ...]:
        rads = set()
        for x in (a.minimal(), b.minimal()):
            for rad, (i, _) in _directions(x.tower).items():
                if x.coeffs[i] != 0:
                    rads.add(rad)
        return canonical_tower(rads)

    def _pair(self, other) -> tuple[FieldElement, FieldElement]:
        other = FieldElement.coerce(other)
        if self.tower == other.tower:
            return self, other
        tower = FieldElement.common_tower(self, other)
        return self.in_tower(tower), other.in_tower(tower)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coeffs[0]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return FieldElement(a.tower, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.tower, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return FieldElement(a.tower, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        n = len(a.coeffs)
        rads = a.tower
        out = [_ZERO] * n
        for i, ci in enumerate(a.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(b.coeffs):
                if cj == 0:
                    continue
                f = ci * cj
                for bit, d in enumerate(rads):
                    if (i >> bit) & 1 and (j >> bit) & 1:
                        f *= d
                out[i ^ j] += f
        return FieldElement(rads, out)

    __rmul__ = __mul__

    def _split_top(self) -> tuple[FieldElement, FieldElement, int]:
        """Write self = p + q*sqrt(d_top) with p, q over the lower tower."""
        if not self.tower:
            raise ValueError("depth-0 element has no top radicand")
        lower = self.tower[:-1]
        half = 1 << len(lower)
        p = FieldElement(lower, self.coeffs[:half])
        q = FieldElement(lower, self.coeffs[half:])
        return p, q, self.tower[-1]

    def _join_top(self, p: FieldElement, q: FieldElement) -> FieldElement:
        # arithmetic may have demoted p or q to a smaller tower
        lower = self.tower[:-1]
        p = p.in_tower(lower)
        q = q.in_tower(lower)
        return FieldElement(self.tower, p.coeffs + q.coeffs)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if not self.tower:
            return FieldElement((), (1 / self.coeffs[0],))
        p, q, d = self._split_top()
        # 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - d*q^2); the norm is
        # nonzero because sqrt(d) is irrational over the lower tower
        norm = p * p - q * q * d
        ninv = norm.inverse()
        return self._join_top(p * ninv, -(q * ninv))

    def __truediv__(self, other):
        other = FieldElement.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldElement.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        """Sign under the real embedding with every sqrt(d) > 0.

        Decided recursively: for p + q*sqrt(d) with p, q in the lower field,
        compare p^2 against q^2*d when the signs of p and q disagree.
        """
        if not self.tower:
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        p, q, d = self._split_top()
        if q.is_zero():
            return p.sign()
        if p.is_zero():
            return q.sign()
        sp, sq = p.sign(), q.sign()
        if sp == sq:
            return sp
        return sp * (p * p - q * q * d).sign()

    def __eq__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            try:
                a, b = self._pair(other)
            except (TypeError, TowerMismatch):
                return False
            return all(x == y for x, y in zip(a.coeffs, b.coeffs))
        return NotImplemented

    def __lt__(self, other):
        return (self - FieldElement.coerce(other)).sign() < 0

    def __hash__(self):
        m = self.minimal()
        if not m.tower:
            return hash(m.coeffs[0])
        return hash((m.tower, m.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return format_element(self)

    # -- square roots ---------------------------------------------------------

    def sqrt(self) -> FieldElement:
        """The square root inside this element's tower.

        Raises NotASquare carrying an adjoinable squarefree radicand when the
        root lives in a quadratic integer extension of the tower, NotASquare
        with radicand None when it does not, and NegativeRadicand for
        negative elements.
        """
        if self.sign() < 0:
            raise NegativeRadicand(f"sqrt of negative element {self}")
        m = self.minimal()
        root = m._sqrt_minimal(_directions(self.tower))
        return root.in_tower(self.tower)

    def _sqrt_minimal(self, avail: dict[int, tuple[int, int]]) -> FieldElement:
        depth = len(self.tower)
        if depth == 0:
            return _sqrt_rational(self.coeffs[0], avail)
        if depth == 1:
            return _sqrt_depth1(self, avail)
        return _sqrt_depth2(self)


def _sqrt_rational(r: Fraction, avail) -> FieldElement:
    if r == 0:
        return FieldElement.from_rational(0)
    exact = _fraction_sqrt(r)
    if exact is not None:
        return FieldElement.from_rational(exact)
    # sqrt(p/q) = sqrt(p*q)/q; extract the square part of p*q
    n = r.numerator * r.denominator
    if n.bit_length() > _MAX_FACTOR_BITS:
        raise NotASquare(f"nonsquare rational too large to find a radicand for")
    s, k = squarefree_decompose(n)
    coeff = Fraction(s, r.denominator)
    if k in avail:
        j, mult = avail[k]
        tower = canonical_tower(avail)
        out = [_ZERO] * (1 << len(tower))
        out[j] = coeff / mult
        return FieldElement(tower, out)
    raise NotASquare(f"{r} needs sqrt({k})", radicand=k)


def _sqrt_depth1(a: FieldElement, avail) -> FieldElement:
    # a = p + q*sqrt(d) with rational p, q and q != 0; solve (s + t*sqrt(d))^2 = a
    # via the norm: s^2 must equal (p +- gamma)/2 where gamma^2 = p^2 - d*q^2.
    p, q, d = a._split_top()
    pr, qr = p.coeffs[0], q.coeffs[0]
    delta = pr * pr - d * qr * qr
    gamma = _fraction_sqrt(delta)
    if gamma is None:
        # a square in any quadratic extension would force the norm to be a
        # rational square already
        raise NotASquare(f"{a} is not a square (norm {delta})")
    candidates = [(pr + sgn * gamma) / 2 for sgn in (1, -1)]
    for w in candidates:
        if w == 0:
            continue
        sw = _fraction_sqrt(w)
        if sw is not None:
            t = qr / (2 * sw)
            cand = FieldElement(a.tower, (sw, t))
            if cand * cand == a:
                return cand if cand.sign() > 0 else -cand
    # second pass: a = k * beta^2 for the squarefree part k of a branch
    for w in candidates:
        if w <= 0:
            continue
        n = w.numerator * w.denominator
        if n.bit_length() > _MAX_FACTOR_BITS:
            continue
        ks, k = squarefree_decompose(n)
        sprime = Fraction(ks, w.denominator)  # sqrt(w/k)
        if sprime == 0 or k == 1:
            continue
        tprime = qr / (2 * sprime * k)
        beta = FieldElement(a.tower, (sprime, tprime))
        if beta * beta * k == a:
            if k in avail:
                rootk = FieldElement.root(k).in_tower(canonical_tower(avail))
                cand = beta.in_tower(rootk.tower) * rootk
                return cand if cand.sign() > 0 else -cand
            raise NotASquare(f"{a} needs sqrt({k})", radicand=k)
    raise NotASquare(f"{a} is not a square in its tower")


def _sqrt_depth2(a: FieldElement) -> FieldElement:
    # relative version of the depth-1 search over the lower field; keep the
    # intermediate values expressed over the lower tower so their square
    # roots may use its radicand
    lower = a.tower[:-1]
    p, q, d = a._split_top()
    delta = (p * p - q * q * d).in_tower(lower)
    try:
        gamma = delta.sqrt() if delta.sign() >= 0 else None
    except NotASquare:
        gamma = None
    if gamma is None:
        raise NotASquare(f"{a} is not a square in its tower")
    for sgn in (1, -1):
        w = ((p + gamma * sgn) / 2).in_tower(lower)
        if w.is_zero() or w.sign() < 0:
            continue
        try:
            s = w.sqrt()
        except NotASquare:
            continue
        if s.is_zero():
            continue
        t = q / (s * 2)
        cand = a._join_top(s, t)
        if cand * cand == a:
            return cand if cand.sign() > 0 else -cand
    raise NotASquare(f"{a} is not a square in its tower")


def sqrt_extending(a: FieldElement) -> FieldElement:
    """sqrt(a), adjoining one integer radicand to a's tower when needed.

    Raises TowerDepthExceeded when the root does not fit in depth 2.
    """
    try:
        return a.sqrt()
    except NotASquare as exc:
        if exc.radicand is None:
            raise TowerDepthExceeded(str(exc)) from exc
        rads = {exc.radicand}
        for rad, (i, _) in _directions(a.minimal().tower).items():
            if a.minimal().coeffs[i] != 0:
                rads.add(rad)
        try:
            tower = canonical_tower(rads)
        except TowerMismatch as exc2:
            raise TowerDepthExceeded(str(exc2)) from exc
        return a.in_tower(tower).sqrt()


# ---------------------------------------------------------------------------
# text grammar: integer, p/q, sqrt(n), + - * /, parentheses


_TOKEN = re.compile(r"\s*(\d+|sqrt|[()+\-*/])")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"bad character at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ExpressionError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def expr(self) -> FieldElement:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> FieldElement:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionError("division by zero in expression")
                value = value / rhs
        return value

    def unary(self) -> FieldElement:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.primary()

    def primary(self) -> FieldElement:
        tok = self.peek()
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok == "sqrt":
            self.take()
            self.take("(")
            inner = self.take()
            if not inner.isdigit():
                raise ExpressionError("sqrt takes a nonnegative integer")
            self.take(")")
            return FieldElement.root(int(inner))
        if tok is not None and tok.isdigit():
            self.take()
            return FieldElement.from_rational(int(tok))
        raise ExpressionError(f"unexpected token {tok!r}")


def parse_element(text: str) -> FieldElement:
    parser = _Parser(_tokenize(text))
    value = parser.expr()
    if parser.peek() is not None:
        raise ExpressionError(f"trailing input {parser.tokens[parser.pos:]!r}")
    return value


def format_element(a: FieldElement) -> str:
    """Canonical textual form, parseable by parse_element."""
    m = a.minimal()
    terms: list[tuple[Fraction, int]] = []
    if m.coeffs[0] != 0:
        terms.append((m.coeffs[0], 1))
    for rad, (i, mult) in sorted(_directions(m.tower).items()):
        c = m.coeffs[i]
        if c != 0:
            terms.append((c * mult, rad))
    if not terms:
        return "0"
    parts = []
    for c, rad in terms:
        mag = -c if c < 0 else c
        if rad == 1:
            body = str(mag)
        elif mag == 1:
            body = f"sqrt({rad})"
        else:
            body = f"{mag}*sqrt({rad})"
        parts.append(("-" if c < 0 else ("+" if parts else "")) + body)
    return "".join(parts)


def element_to_json(a: FieldElement) -> dict:
    m = a.minimal()
    return {
        "tower": list(m.tower),
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in m.coeffs],
    }


def element_from_json(data: dict) -> FieldElement:
    tower = tuple(int(d) for d in data["tower"])
    coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
    return FieldElement(tower, coeffs)


fe = FieldElement.coerce
ZERO = FieldElement.from_rational(0)
ONE = FieldElement.from_rational(1)
