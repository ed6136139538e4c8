"""Sparse multivariate polynomials over the rationals.

Exponent vectors are packed into a single Python int: one 16-bit field per
variable, with the total degree in the topmost field. Multiplying monomials
is then integer addition, and comparing packed keys is graded-lexicographic
comparison (first variable most significant).

Coefficients are ``int`` whenever integral and ``fractions.Fraction``
otherwise; the integer fast path matters for fraction-free elimination.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]

_BITS = 16
_MASK = (1 << _BITS) - 1


class VarSetMismatch(ValueError):
    """Operands refer to different variable sets."""


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names; the order is the lex order (first is largest)."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def of(cls, *names: str) -> "VarSet":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; have {self.names}") from None

    # packing -------------------------------------------------------------

    def shift(self, i: int) -> int:
        return _BITS * (len(self.names) - 1 - i)

    @property
    def total_shift(self) -> int:
        return _BITS * len(self.names)

    def unit(self, i: int) -> int:
        """Packed key of the monomial consisting of variable ``i``."""
        return (1 << self.shift(i)) | (1 << self.total_shift)

    def pack(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != len(self.names):
            raise ValueError(f"exponent vector {exps} has wrong length for {self.names}")
        key = 0
        for e in exps:
            if e < 0 or e > _MASK:
                raise ValueError(f"exponent {e} out of range")
            key = (key << _BITS) | e
        return key | (sum(exps) << self.total_shift)

    def unpack(self, key: int) -> tuple[int, ...]:
        n = len(self.names)
        return tuple((key >> (_BITS * (n - 1 - i))) & _MASK for i in range(n))

    def exponent(self, key: int, i: int) -> int:
        return (key >> self.shift(i)) & _MASK

    def degree_of(self, key: int) -> int:
        return key >> self.total_shift


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("varset", "_t")

    def __init__(self, varset: VarSet, terms: Mapping[tuple[int, ...], Rational] | None = None):
        self.varset = varset
        t: dict[int, Coeff] = {}
        for exps, c in (terms or {}).items():
            c = _norm(Fraction(c)) if not isinstance(c, int) else c
            if c:
                key = varset.pack(exps)
                t[key] = _norm(t.get(key, 0) + c)
                if not t[key]:
                    del t[key]
        self._t = t

    @classmethod
    def _raw(cls, varset: VarSet, t: dict[int, Coeff]) -> "MultiPoly":
        p = cls.__new__(cls)
        p.varset = varset
        p._t = t
        return p

    # constructors --------------------------------------------------------

    @classmethod
    def zero(cls, varset: VarSet) -> "MultiPoly":
        return cls._raw(varset, {})

    @classmethod
    def const(cls, varset: VarSet, c) -> "MultiPoly":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw(varset, {0: c} if c else {})

    @classmethod
    def one(cls, varset: VarSet) -> "MultiPoly":
        return cls.const(varset, 1)

    @classmethod
    def var(cls, varset: VarSet, name: str | int) -> "MultiPoly":
        i = varset.index(name) if isinstance(name, str) else name
        return cls._raw(varset, {varset.unit(i): 1})

    @classmethod
    def monomial(cls, varset: VarSet, exps: Iterable[int], c=1) -> "MultiPoly":
        return cls(varset, {tuple(exps): c})

    # inspection ----------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Coeff]:
        return {self.varset.unpack(k): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> Coeff:
        return self._t.get(0, 0)

    def coefficient(self, exps: Iterable[int]) -> Coeff:
        return self._t.get(self.varset.pack(exps), 0)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return self.varset.degree_of(max(self._t))

    def degree(self, var: str | int) -> int:
        i = self.varset.index(var) if isinstance(var, str) else var
        if not self._t:
            return -1
        sh = self.varset.shift(i)
        return max((k >> sh) & _MASK for k in self._t)

    def variables(self) -> list[int]:
        """Indices of variables that actually occur."""
        return [i for i in range(len(self.varset)) if self.degree(i) > 0]

    def leading_term(self) -> tuple[tuple[int, ...], Coeff]:
        """Leading exponent and coefficient under graded-lex order."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._t)
        return self.varset.unpack(k), self._t[k]

    def leading_coefficient(self) -> Coeff:
        return self._t[max(self._t)]

    # arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.varset != other.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.varset, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = _norm(v + c)
                if v:
                    t[k] = v
                else:
                    del t[k]
        return MultiPoly._raw(self.varset, t)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.varset, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other) if isinstance(other, Fraction) else other
            if not other:
                return MultiPoly.zero(self.varset)
            return MultiPoly._raw(self.varset, {k: _norm(c * other) for k, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t: dict[int, Coeff] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return MultiPoly._raw(self.varset, {k: _norm(c) for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.varset)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: _norm(other)} if other else {})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.varset == other.varset and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.varset, frozenset(self._t.items())))

    def scale_div(self, c: Coeff) -> "MultiPoly":
        return MultiPoly._raw(self.varset, {k: _cdiv(v, c) for k, v in self._t.items()})

    def mul_var(self, i: int, e: int = 1) -> "MultiPoly":
        u = self.varset.unit(i) * e
        return MultiPoly._raw(self.varset, {k + u: c for k, c in self._t.items()})

    def div_var(self, i: int, e: int = 1) -> "MultiPoly":
        """Exact division by ``var_i ** e``."""
        sh = self.varset.shift(i)
        u = self.varset.unit(i) * e
        t = {}
        for k, c in self._t.items():
            if ((k >> sh) & _MASK) < e:
                raise NotDivisible(f"{self} is not divisible by {self.varset.names[i]}^{e}")
            t[k - u] = c
        return MultiPoly._raw(self.varset, t)

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / other``; raises :class:`NotDivisible` if inexact."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return MultiPoly._raw(self.varset, _divexact(self.varset, self._t, other._t))

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    # substitution and evaluation -----------------------------------------

    def subs(self, var: str | int, value) -> "MultiPoly":
        """Substitute a rational number for one variable (the VarSet is kept)."""
        i = self.varset.index(var) if isinstance(var, str) else var
        sh = self.varset.shift(i)
        unit = self.varset.unit(i)
        value = _norm(Fraction(value)) if not isinstance(value, int) else value
        t: dict[int, Coeff] = {}
        for k, c in self._t.items():
            e = (k >> sh) & _MASK
            if e:
                if not value:
                    continue
                c = _norm(c * value**e)
                k -= unit * e
            t[k] = _norm(t.get(k, 0) + c)
        return MultiPoly._raw(self.varset, {k: c for k, c in t.items() if c})

    def coeff_in(self, var: str | int, e: int) -> "MultiPoly":
        """Coefficient of ``var**e`` as a polynomial free of ``var``."""
        i = self.varset.index(var) if isinstance(var, str) else var
        sh = self.varset.shift(i)
        u = self.varset.unit(i) * e
        return MultiPoly._raw(
            self.varset, {k - u: c for k, c in self._t.items() if ((k >> sh) & _MASK) == e}
        )

    def evaluate(self, point: Mapping[str, complex] | Iterable[complex]) -> complex:
        if isinstance(point, Mapping):
            vals = [point[n] for n in self.varset.names]
        else:
            vals = list(point)
        total = 0j
        for exps, c in self.terms.items():
            term = complex(c)
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def rename(self, varset: VarSet, mapping: Mapping[int, int] | None = None) -> "MultiPoly":
        """Move to another VarSet; ``mapping`` sends old indices to new ones
        (default: by name). Variables that occur must have a destination."""
        if mapping is None:
            mapping = {i: varset.index(n) for i, n in enumerate(self.varset.names) if n in varset.names}
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(varset)
            for i, e in enumerate(exps):
                if e:
                    if i not in mapping:
                        raise ValueError(f"variable {self.varset.names[i]} has no image in {varset.names}")
                    new[mapping[i]] += e
            terms[tuple(new)] = terms.get(tuple(new), 0) + c
        return MultiPoly(varset, terms)

    # content and normal form ---------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with ``self / c`` integral and primitive."""
        if not self._t:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self._t.values()]
        dens = [Fraction(c).denominator for c in self._t.values()]
        return Fraction(reduce(math.gcd, nums, 0), reduce(math.lcm, dens, 1))

    def primitive(self) -> "MultiPoly":
        """Integer, primitive, positive graded-lex leading coefficient."""
        if not self._t:
            return self
        c = self.rational_content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale_div(_norm(c))

    # rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)!r}, vars={self.varset.names})"


def _monomial_str(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def render(p: MultiPoly) -> str:
    """Canonical text: graded-lex descending, ``^`` powers, ``*`` products."""
    if not p._t:
        return "0"
    out = []
    for k in sorted(p._t, reverse=True):
        c = p._t[k]
        mono = _monomial_str(p.varset.names, p.varset.unpack(k))
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- exact division, recursive in a main variable ----------------------------


def _split(vs: VarSet, t: dict[int, Coeff], i: int) -> dict[int, dict[int, Coeff]]:
    sh, u = vs.shift(i), vs.unit(i)
    out: dict[int, dict[int, Coeff]] = {}
    for k, c in t.items():
        e = (k >> sh) & _MASK
        out.setdefault(e, {})[k - u * e] = c
    return out


def _mul_t(a: dict[int, Coeff], b: dict[int, Coeff]) -> dict[int, Coeff]:
    if len(a) < len(b):
        a, b = b, a
    t: dict[int, Coeff] = {}
    get = t.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            t[k] = get(k, 0) + ca * cb
    return {k: _norm(c) for k, c in t.items() if c}


def _sub_into(acc: dict[int, Coeff], t: dict[int, Coeff], shift: int = 0) -> None:
    for k, c in t.items():
        k += shift
        v = acc.get(k)
        if v is None:
            acc[k] = -c
        else:
            v = _norm(v - c)
            if v:
                acc[k] = v
            else:
                del acc[k]


def _main_var(vs: VarSet, t: dict[int, Coeff]) -> int:
    for i in range(len(vs) - 1, -1, -1):
        sh = vs.shift(i)
        if any((k >> sh) & _MASK for k in t):
            return i
    return -1


def _divexact(vs: VarSet, a: dict[int, Coeff], b: dict[int, Coeff]) -> dict[int, Coeff]:
    if not a:
        return {}
    if len(b) == 1:
        (kb, cb), = b.items()
        q = {}
        for k, c in a.items():
            if (k - kb) < 0 or any(
                ((k >> vs.shift(i)) & _MASK) < ((kb >> vs.shift(i)) & _MASK) for i in range(len(vs))
            ):
                raise NotDivisible("monomial does not divide")
            q[k - kb] = _cdiv(c, cb)
        return q
    v = _main_var(vs, b)
    u = vs.unit(v)
    B = _split(vs, b, v)
    db = max(B)
    lcb = B[db]
    A = _split(vs, a, v)
    q: dict[int, Coeff] = {}
    while A:
        da = max(A)
        if da < db:
            raise NotDivisible("remainder in main variable")
        qc = _divexact(vs, A[da], lcb)
        sh = u * (da - db)
        for k, c in qc.items():
            q[k + sh] = c
        for jb, bj in B.items():
            prod = _mul_t(qc, bj)
            tgt = A.setdefault(da - db + jb, {})
            _sub_into(tgt, prod)
            if not tgt:
                del A[da - db + jb]
        if da in A:
            raise NotDivisible("leading coefficient did not cancel")
    return q


# -- gcd by primitive polynomial remainder sequences --------------------------


def _int_primitive(vs: VarSet, t: dict[int, Coeff]) -> dict[int, Coeff]:
    return MultiPoly._raw(vs, t).primitive()._t


def _content_in(vs: VarSet, parts: dict[int, dict[int, Coeff]]) -> dict[int, Coeff]:
    g: dict[int, Coeff] | None = None
    for coeff in sorted(parts.values(), key=len):
        g = coeff if g is None else _gcd(vs, g, coeff)
        if len(g) == 1 and 0 in g:
            return {0: 1}
    return g if g is not None else {}


def _join(vs: VarSet, parts: dict[int, dict[int, Coeff]], v: int) -> dict[int, Coeff]:
    u = vs.unit(v)
    t = {}
    for e, coeff in parts.items():
        for k, c in coeff.items():
            t[k + u * e] = c
    return t


_PRIME = (1 << 61) - 1
_rng = random.Random(20240611)


def _occurring(vs: VarSet, t: dict[int, Coeff]) -> set[int]:
    occ = set()
    for i in range(len(vs)):
        sh = vs.shift(i)
        if any((k >> sh) & _MASK for k in t):
            occ.add(i)
    return occ


def _eval_mod(vs: VarSet, t: dict[int, Coeff], v: int, point: list[int]) -> list[int]:
    """Image of an integer polynomial in GF(p)[x_v] after fixing the other variables."""
    n = len(vs)
    out: dict[int, int] = {}
    for k, c in t.items():
        val = c % _PRIME
        for i in range(n):
            e = (k >> vs.shift(i)) & _MASK
            if i == v:
                dv = e
            elif e:
                val = val * pow(point[i], e, _PRIME) % _PRIME
        out[dv] = (out.get(dv, 0) + val) % _PRIME
    deg = max(out)
    return [out.get(e, 0) for e in range(deg + 1)]


def _gf_gcd_degree(f: list[int], g: list[int]) -> int:
    def trim(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    while g:
        inv = pow(g[-1], _PRIME - 2, _PRIME)
        while len(f) >= len(g):
            coef = f[-1] * inv % _PRIME
            off = len(f) - len(g)
            for idx, gc in enumerate(g):
                f[off + idx] = (f[off + idx] - coef * gc) % _PRIME
            trim(f)
            if not f:
                break
        f, g = g, f
    return len(f) - 1


def _gcd_degree_bound(vs: VarSet, a: dict[int, Coeff], b: dict[int, Coeff], v: int) -> int:
    """Upper bound for deg_v gcd(a, b); a and b must be integer polynomials.

    If g divides both, g(pt) divides the images, and deg_v g(pt) = deg_v g as
    long as the leading coefficients in x_v of a and b survive at pt mod p.
    """
    best = None
    for _ in range(2):
        for _attempt in range(20):
            point = [_rng.randrange(2, _PRIME) for _ in range(len(vs))]
            fa = _eval_mod(vs, a, v, point)
            fb = _eval_mod(vs, b, v, point)
            if len(fa) - 1 == _deg_in(vs, a, v) and len(fb) - 1 == _deg_in(vs, b, v) and fa[-1] and fb[-1]:
                break
        else:
            return min(_deg_in(vs, a, v), _deg_in(vs, b, v))
        d = _gf_gcd_degree(fa, fb)
        best = d if best is None else min(best, d)
        if best == 0:
            break
    return best


def _deg_in(vs: VarSet, t: dict[int, Coeff], v: int) -> int:
    sh = vs.shift(v)
    return max((k >> sh) & _MASK for k in t)


def _gcd(vs: VarSet, a: dict[int, Coeff], b: dict[int, Coeff]) -> dict[int, Coeff]:
    """Primitive integer gcd with positive graded-lex leading coefficient."""
    if not a:
        return _int_primitive(vs, b) if b else {}
    if not b:
        return _int_primitive(vs, a)
    if (len(a) == 1 and 0 in a) or (len(b) == 1 and 0 in b):
        return {0: 1}
    a, b = _int_primitive(vs, a), _int_primitive(vs, b)
    if a == b:
        return a
    common = _occurring(vs, a) & _occurring(vs, b)
    if not common:
        return {0: 1}
    bounds = {v: _gcd_degree_bound(vs, a, b, v) for v in sorted(common)}
    free = [v for v, d in bounds.items() if d == 0]
    if len(free) == len(bounds):
        return {0: 1}
    if free:
        # the gcd does not involve x_u: it is the gcd of all x_u-coefficients
        u = free[0]
        parts = sorted(list(_split(vs, a, u).values()) + list(_split(vs, b, u).values()), key=len)
        g = parts[0]
        for p in parts[1:]:
            g = _gcd(vs, g, p)
            if len(g) == 1 and 0 in g:
                break
        return g
    v = min(bounds, key=lambda i: (max(_deg_in(vs, a, i), _deg_in(vs, b, i)), i))
    A, B = _split(vs, a, v), _split(vs, b, v)
    ca, cb = _content_in(vs, A), _content_in(vs, B)
    c = _gcd(vs, ca, cb)
    A = {e: _divexact(vs, p, ca) for e, p in A.items()}
    B = {e: _divexact(vs, p, cb) for e, p in B.items()}
    if max(A) < max(B):
        A, B = B, A
    S = _subresultant_last(vs, A, B)
    if S is None:
        return _int_primitive(vs, c)
    cs = _content_in(vs, S)
    S = {e: _divexact(vs, p, cs) for e, p in S.items()}
    return _int_primitive(vs, _mul_t(c, _join(vs, S, v)))


def _subresultant_last(vs: VarSet, A: dict[int, dict], B: dict[int, dict]) -> dict[int, dict] | None:
    """Last nonzero term of the subresultant PRS, or None if it is constant in x_v."""
    g: dict[int, Coeff] = {0: 1}
    h: dict[int, Coeff] = {0: 1}
    while True:
        delta = max(A) - max(B)
        R = _prem(vs, A, B)
        if not R:
            return B
        if max(R) == 0:
            return None
        A = B
        div = _mul_t(g, _pow_t(h, delta))
        B = {e: _divexact(vs, p, div) for e, p in R.items()}
        g = A[max(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _divexact(vs, _pow_t(g, delta), _pow_t(h, delta - 1))


def _pow_t(t: dict[int, Coeff], e: int) -> dict[int, Coeff]:
    out: dict[int, Coeff] = {0: 1}
    for _ in range(e):
        out = _mul_t(out, t)
    return out


def _prem(vs: VarSet, A: dict[int, dict], B: dict[int, dict]) -> dict[int, dict]:
    A = {e: dict(p) for e, p in A.items()}
    db = max(B)
    lcb = B[db]
    steps = max(A) - db + 1
    while A and max(A) >= db:
        da = max(A)
        lca = A.pop(da)
        A = {e: _mul_t(p, lcb) for e, p in A.items()}
        for jb, bj in B.items():
            if jb == db:
                continue
            e = da - db + jb
            prod = _mul_t(lca, bj)
            tgt = A.setdefault(e, {})
            _sub_into(tgt, prod)
            if not tgt:
                del A[e]
        steps -= 1
    if steps > 0 and A:
        f = MultiPoly._raw(vs, lcb) ** steps
        A = {e: _mul_t(p, f._t) for e, p in A.items()}
    return A


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor, normalized to a primitive integer polynomial
    with positive graded-lex leading coefficient. ``gcd(0, 0) == 0``."""
    a._check(b)
    return MultiPoly._raw(a.varset, _gcd(a.varset, a._t, b._t))


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def parse_poly(text: str, varset: VarSet) -> MultiPoly:
    """Parse the canonical rendering (and close variants) back to a polynomial."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    result = MultiPoly.zero(varset)
    i = 0
    n = len(s)
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < n and s[j] not in "+-":
            j += 1
        term = s[i:j]
        if not term:
            raise ValueError(f"malformed polynomial {text!r}")
        coeff = Fraction(sign)
        exps = [0] * len(varset)
        for factor in term.split("*"):
            if not factor:
                raise ValueError(f"malformed term {term!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            exps[varset.index(name)] += int(power) if power else 1
        result = result + MultiPoly.monomial(varset, exps, coeff)
        i = j
    return result
