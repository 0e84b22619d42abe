"""Exact sparse polynomials in the fixed variables x, y, a, b, s.

Monomials are packed into a single int with one 16-bit field per variable,
ordered (x, y, a, b, s) from most to least significant.  Multiplying two
monomials is then integer addition, and sorting packed keys in descending
order gives the canonical lexicographic ordering on (ex, ey, ea, eb, es).

Coefficients are ``int`` or ``fractions.Fraction``; fractions with unit
denominator are stored as ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

VARIABLES = ("x", "y", "a", "b", "s")
_BITS = 16
_FIELD = (1 << _BITS) - 1
_SHIFT = {v: _BITS * (len(VARIABLES) - 1 - i) for i, v in enumerate(VARIABLES)}
MAX_EXPONENT = _FIELD // 2  # checked by pack() and **; plain products are not checked

# variable order inside a rendered monomial
_RENDER_ORDER = tuple(sorted(VARIABLES))

Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if type(c) is not int and c.denominator == 1:
        return c.numerator
    return c


def _as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def pack(ex: int = 0, ey: int = 0, ea: int = 0, eb: int = 0, es: int = 0) -> int:
    exps = (ex, ey, ea, eb, es)
    key = 0
    for e in exps:
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range 0..{MAX_EXPONENT}")
        key = (key << _BITS) | e
    return key


def unpack(key: int) -> tuple[int, int, int, int, int]:
    return (
        (key >> 64) & _FIELD,
        (key >> 48) & _FIELD,
        (key >> 32) & _FIELD,
        (key >> 16) & _FIELD,
        key & _FIELD,
    )


class Poly:
    """Immutable polynomial over the rationals in x, y, a, b, s.

    Supports ``+``, ``-``, ``*`` and ``**`` with other polynomials and with
    exact scalars.  Two polynomials compare equal iff their canonical term
    maps are identical.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Scalar] = {}
        if terms:
            for k, c in terms.items():
                c = _as_scalar(c)
                if c:
                    clean[k] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Scalar]) -> Poly:
        # caller guarantees canonical form
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> Poly:
        c = _as_scalar(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str) -> Poly:
        if name not in _SHIFT:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        return cls._raw({1 << _SHIFT[name]: 1})

    @classmethod
    def monomial(cls, coeff=1, **exps: int) -> Poly:
        for v in exps:
            if v not in _SHIFT:
                raise ValueError(f"unknown variable {v!r}")
        c = _as_scalar(coeff)
        if not c:
            return ZERO
        return cls._raw({pack(*(exps.get(v, 0) for v in VARIABLES)): c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Scalar]:
        """Copy of the term map keyed by exponent vectors (ex, ey, ea, eb, es)."""
        return {unpack(k): c for k, c in self._terms.items()}

    def items(self) -> Iterator[tuple[tuple[int, ...], Scalar]]:
        for k in sorted(self._terms, reverse=True):
            yield unpack(k), self._terms[k]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get(0, 0)

    def coefficient(self, **exps: int) -> Scalar:
        return self._terms.get(pack(*(exps.get(v, 0) for v in VARIABLES)), 0)

    def degree(self, var: str) -> int:
        shift = _SHIFT[var]
        return max(((k >> shift) & _FIELD for k in self._terms), default=0)

    def variables(self) -> set[str]:
        used = set()
        for k in self._terms:
            for v, shift in _SHIFT.items():
                if (k >> shift) & _FIELD:
                    used.add(v)
        return used

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        try:
            return Poly.const(other)
        except TypeError:
            return None

    def __add__(self, other) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if len(q._terms) > len(self._terms):
            big, small = q._terms, self._terms
        else:
            big, small = self._terms, q._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self._terms or not q._terms:
            return ZERO
        if len(q._terms) == 1 and 0 in q._terms:
            c = q._terms[0]
            return Poly._raw({k: _norm(v * c) for k, v in self._terms.items()})
        out: dict[int, Scalar] = {}
        get = out.get
        for k1, c1 in self._terms.items():
            for k2, c2 in q._terms.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return Poly._raw({k: c if type(c) is int else _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        if k > 1:
            top = max((max(unpack(key)) for key in self._terms), default=0)
            if top * k > MAX_EXPONENT:
                raise ValueError(f"a degree would exceed {MAX_EXPONENT}")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus and substitution -----------------------------------------

    def subs(self, assignment: Mapping[str, object] | None = None, **kw) -> Poly:
        """Substitute rational values for some variables; the rest stay symbolic."""
        values = dict(assignment or {}, **kw)
        for v in values:
            if v not in _SHIFT:
                raise ValueError(f"unknown variable {v!r}")
        if not values:
            return self
        vals = {v: _as_scalar(c) for v, c in values.items()}
        pow_cache: dict[tuple[str, int], Scalar] = {}
        out: dict[int, Scalar] = {}
        for k, c in self._terms.items():
            for v, val in vals.items():
                shift = _SHIFT[v]
                e = (k >> shift) & _FIELD
                if e:
                    pv = pow_cache.get((v, e))
                    if pv is None:
                        pv = pow_cache[(v, e)] = _norm(Fraction(val) ** e)
                    c = c * pv
                    k -= e << shift
            out[k] = out.get(k, 0) + c
        return Poly(out)

    def deriv_s(self) -> Poly:
        """Formal partial derivative with respect to s."""
        out = {}
        for k, c in self._terms.items():
            e = k & _FIELD
            if e:
                out[k - 1] = c * e
        return Poly._raw(out)

    def swap_xy(self) -> Poly:
        out = {}
        for k, c in self._terms.items():
            ex = (k >> 64) & _FIELD
            ey = (k >> 48) & _FIELD
            out[k - (ex << 64) - (ey << 48) + (ey << 64) + (ex << 48)] = c
        return Poly._raw(out)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, k in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[k]
            exps = dict(zip(VARIABLES, unpack(k)))
            mono = "*".join(
                v if exps[v] == 1 else f"{v}^{exps[v]}" for v in _RENDER_ORDER if exps[v]
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


ZERO = Poly._raw({})
ONE = Poly._raw({0: 1})
X = Poly.var("x")
Y = Poly.var("y")
A = Poly.var("a")
B = Poly.var("b")
S = Poly.var("s")


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def power(p: Poly, k: int) -> Poly:
    return p ** k


def evaluate(p: Poly, point: Mapping[str, object]) -> Poly:
    return p.subs(point)


def deriv_s(p: Poly) -> Poly:
    return p.deriv_s()
