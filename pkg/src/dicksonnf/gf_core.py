"""Exact arithmetic in F_p and in extensions F_{p^d} = F_p[x]/(f).

Elements are coefficient vectors in ascending degree order (index 0 is the
constant term).  A FieldCtx fixes the prime, the monic modulus polynomial and
a designated generator of the multiplicative group; all operations are pure
functions of immutable values, so contexts are safe to share between threads.

The canonical text format for elements is either a comma separated ascending
coefficient list ("2,0,3") or polynomial syntax ("3*x^2+2"); emitters always
produce the polynomial syntax with descending powers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

import sympy

from .errors import (
    DivisionByZero,
    NotGenerator,
    NotIrreducible,
    NotPrime,
    OutOfRange,
    ParseError,
    ZeroArgument,
)


@dataclass(frozen=True)
class FFElem:
    """A field element as a vector of d residues mod p, constant term first."""

    coeffs: tuple

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"FFElem{self.coeffs}"


# ---------------------------------------------------------------------------
# raw polynomial helpers (ascending coefficient lists over F_p)
# ---------------------------------------------------------------------------

def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pdivmod(a, b, p):
    """Polynomial division a = q*b + r over F_p; b non-zero."""
    a = _ptrim(a)
    b = _ptrim(b)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and r:
        c = (r[-1] * binv) % p
        k = len(r) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            r[k + i] = (r[k + i] - c * bi) % p
        r = _ptrim(r)
    return q, r


def _pgcd(a, b, p):
    a = _ptrim(a)
    b = _ptrim(b)
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    return a


class FieldCtx:
    """A concrete finite field F_{p^d} with fixed modulus and generator."""

    def __init__(self, p: int, d: int, modulus: tuple, generator: Optional[FFElem] = None):
        self.p = p
        self.d = d
        self.modulus = tuple(c % p for c in modulus)
        self.order = p ** d - 1
        self.g = generator
        self.zero = FFElem((0,) * d)
        one = [0] * d
        one[0] = 1
        self.one = FFElem(tuple(one))
        if d >= 2:
            xc = [0] * d
            xc[1] = 1
            self.x = FFElem(tuple(xc))
        else:
            self.x = self.zero  # modulus is x, so x reduces to 0
        # reduction table: coefficients of x^k mod f for k = d .. 2d-2
        self._xpow = []
        cur = [(-c) % p for c in self.modulus[:d]]  # x^d
        self._xpow.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [0] + cur[: d - 1]
            top = cur[d - 1] if d >= 1 else 0
            if top:
                for j in range(d):
                    nxt[j] = (nxt[j] + top * self._xpow[0][j]) % p
            else:
                nxt = [c % p for c in nxt]
            cur = nxt
            self._xpow.append(tuple(cur))
        self._order_factors = None

    # -- element constructors ------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> FFElem:
        coeffs = list(coeffs)
        if len(coeffs) > self.d:
            raise OutOfRange(f"coefficient vector longer than degree {self.d}")
        coeffs += [0] * (self.d - len(coeffs))
        return FFElem(tuple(c % self.p for c in coeffs))

    def from_int(self, k: int) -> FFElem:
        """Inverse of to_int: base-p digits of k, ascending degree."""
        coeffs = []
        for _ in range(self.d):
            coeffs.append(k % self.p)
            k //= self.p
        return FFElem(tuple(coeffs))

    def to_int(self, a: FFElem) -> int:
        k = 0
        for c in reversed(a.coeffs):
            k = k * self.p + c
        return k

    def elements(self) -> Iterator[FFElem]:
        """All p^d elements in canonical (base-p encoding) order."""
        for k in range(self.p ** self.d):
            yield self.from_int(k)

    def nonzero_elements(self) -> Iterator[FFElem]:
        for k in range(1, self.p ** self.d):
            yield self.from_int(k)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: FFElem, b: FFElem) -> FFElem:
        p = self.p
        return FFElem(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FFElem, b: FFElem) -> FFElem:
        p = self.p
        return FFElem(tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FFElem) -> FFElem:
        p = self.p
        return FFElem(tuple((-x) % p for x in a.coeffs))

    def mul(self, a: FFElem, b: FFElem) -> FFElem:
        p, d = self.p, self.d
        ac, bc = a.coeffs, b.coeffs
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    prod[i + j] += ai * bj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                red = self._xpow[k - d]
                for j in range(d):
                    prod[j] += c * red[j]
        return FFElem(tuple(c % p for c in prod[:d]))

    def inv(self, a: FFElem) -> FFElem:
        if a.is_zero():
            raise DivisionByZero("inverse of zero")
        # a^(p^d - 2); the group has order p^d - 1
        return self.pow(a, self.order - 1)

    def pow(self, a: FFElem, e: int) -> FFElem:
        if e < 0:
            if a.is_zero():
                raise DivisionByZero("negative power of zero")
            a = self.inv(a)
            e = -e
        if e == 0:
            return self.one
        if a.is_zero():
            return self.zero
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    # -- misc ----------------------------------------------------------------

    def order_factors(self):
        if self._order_factors is None:
            self._order_factors = sorted(sympy.factorint(self.order))
        return self._order_factors

    def describe(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "modulus": format_poly(self.modulus),
            "generator": format_element(self, self.g) if self.g is not None else None,
            "order": self.order,
        }


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def _is_irreducible(p: int, modulus: tuple) -> bool:
    """Rabin test: x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1."""
    d = len(modulus) - 1
    if d == 1:
        return True
    ctx = FieldCtx(p, d, modulus)
    x = ctx.x
    t = x
    for _ in range(d):
        t = ctx.pow(t, p)
    if t != x:
        return False
    for r in sorted(sympy.factorint(d)):
        t = x
        for _ in range(d // r):
            t = ctx.pow(t, p)
        g = _pgcd(list(ctx.sub(t, x).coeffs), list(modulus), p)
        if len(g) != 1:
            return False
    return True


def _x_is_primitive(p: int, d: int, modulus: tuple, factors) -> bool:
    """True iff x has multiplicative order exactly p^d - 1 mod (p, f).

    In a quotient by a reducible f the unit group is strictly smaller than
    p^d - 1, so this single test also certifies irreducibility.
    """
    ctx = FieldCtx(p, d, modulus)
    x = ctx.x
    n = p ** d - 1
    if ctx.pow(x, n) != ctx.one:
        return False
    for r in factors:
        if ctx.pow(x, n // r) == ctx.one:
            return False
    return True


def _smallest_primitive_modulus(p: int, d: int) -> tuple:
    """Lexicographically smallest monic primitive polynomial of degree d.

    Candidates are ordered by the base-p integer encoding of the ascending
    coefficient list (so higher-degree coefficients are more significant).
    """
    factors = sorted(sympy.factorint(p ** d - 1))
    for k in range(p ** d):
        coeffs = []
        kk = k
        for _ in range(d):
            coeffs.append(kk % p)
            kk //= p
        modulus = tuple(coeffs) + (1,)
        if _x_is_primitive(p, d, modulus, factors):
            return modulus
    raise AssertionError("no primitive polynomial found")  # unreachable


def make_field(p: int, d: int, modulus=None, generator=None) -> FieldCtx:
    """Build a validated field context.

    Default modulus is the lexicographically smallest monic primitive
    polynomial of degree d (for d = 1 the degenerate modulus x), and with the
    default modulus the default generator is x itself.  With a user modulus
    the default generator is the smallest element (base-p encoding) of full
    order.
    """
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise OutOfRange("extension degree must be >= 1")
    default_modulus = modulus is None
    if default_modulus:
        if d == 1:
            modulus = (0, 1)
        else:
            modulus = _smallest_primitive_modulus(p, d)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {d}")
        if d > 1 and not _is_irreducible(p, modulus):
            raise NotIrreducible(f"{format_poly(modulus)} is reducible over F_{p}")
    ctx = FieldCtx(p, d, modulus)
    if generator is not None:
        g = generator if isinstance(generator, FFElem) else ctx.element(generator)
        if g.is_zero() or element_order(ctx, g) != ctx.order:
            raise NotGenerator(f"{format_element(ctx, g)} does not generate F_{p}^{d}*")
    elif default_modulus and d > 1:
        g = ctx.x  # primitive by construction
    else:
        g = find_generator(ctx)
    ctx.g = g
    return ctx


def ff_arith(ctx: FieldCtx, op: str, a: FFElem, b: Optional[FFElem] = None) -> FFElem:
    if op == "add":
        return ctx.add(a, b)
    if op == "sub":
        return ctx.sub(a, b)
    if op == "mul":
        return ctx.mul(a, b)
    if op == "inv":
        return ctx.inv(a)
    raise ValueError(f"unknown op {op!r}")


def ff_pow(ctx: FieldCtx, a: FFElem, e: int) -> FFElem:
    return ctx.pow(a, e)


def element_order(ctx: FieldCtx, a: FFElem) -> int:
    """Smallest e >= 1 with a^e = 1, by descending through the prime factors
    of the group order."""
    if a.is_zero():
        raise DivisionByZero("order of zero is undefined")
    e = ctx.order
    for f in ctx.order_factors():
        while e % f == 0 and ctx.pow(a, e // f) == ctx.one:
            e //= f
    return e


def find_generator(ctx: FieldCtx) -> FFElem:
    """Smallest element (base-p integer encoding) of full multiplicative order."""
    for k in range(1, ctx.p ** ctx.d):
        a = ctx.from_int(k)
        if element_order(ctx, a) == ctx.order:
            return a
    raise AssertionError("finite field without generator")  # unreachable


def h_member(nfctx, a: FFElem) -> bool:
    """Membership in H = <g^n>: a^((q^n-1)/n) = 1.

    nfctx is a NearfieldCtx (duck-typed to avoid a circular import).
    """
    if a.is_zero():
        raise ZeroArgument("0 is not in the multiplicative group")
    field = nfctx.field
    return field.pow(a, nfctx.h_exp) == field.one


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\s*\*?\s*)?x(?:\^(\d+))?$|^(\d+)$")


def parse_poly(p: int, text: str):
    """Parse polynomial or comma syntax into an ascending coefficient list.

    The comma format requires every entry in [0, p); the polynomial format
    accepts + and - signs and reduces coefficients mod p.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty element text")
    if "," in text:
        out = []
        for pos, part in enumerate(text.split(",")):
            part = part.strip()
            if not re.fullmatch(r"-?\d+", part or ""):
                raise ParseError(f"bad coefficient at position {pos}: {part!r}")
            c = int(part)
            if not 0 <= c < p:
                raise OutOfRange(f"coefficient {c} at position {pos} not in [0, {p})")
            out.append(c)
        return out
    compact = text.replace(" ", "")
    coeffs = {}
    pos = 0
    sign = 1
    if compact and compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        pos = 1
    while pos < len(compact):
        m = re.match(r"[^+-]+", compact[pos:])
        if m is None:
            raise ParseError(f"unexpected character at position {pos}")
        term = m.group(0)
        tm = _TERM_RE.match(term)
        if tm is None:
            raise ParseError(f"bad term at position {pos}: {term!r}")
        if tm.group(3) is not None:
            c, e = int(tm.group(3)), 0
        else:
            c = int(tm.group(1)) if tm.group(1) else 1
            e = int(tm.group(2)) if tm.group(2) else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos += len(term)
        if pos < len(compact):
            sign = -1 if compact[pos] == "-" else 1
            pos += 1
    degree = max(coeffs) if coeffs else 0
    return [coeffs.get(i, 0) % p for i in range(degree + 1)]


def parse_element(ctx: FieldCtx, text: str) -> FFElem:
    """Parse an element in either accepted format, reducing mod the modulus."""
    coeffs = parse_poly(ctx.p, text)
    if "," in text and len(coeffs) != ctx.d:
        raise ParseError(f"expected {ctx.d} comma-separated coefficients, got {len(coeffs)}")
    if len(coeffs) <= ctx.d:
        return ctx.element(coeffs)
    # high powers reduce through the modulus
    acc = ctx.zero
    xp = ctx.one
    for c in coeffs:
        if c:
            acc = ctx.add(acc, ctx.mul(ctx.element([c]), xp))
        xp = ctx.mul(xp, ctx.x)
    return acc


def format_poly(coeffs) -> str:
    """Polynomial syntax, descending powers, zero terms skipped."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        elif e == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{e}" if c == 1 else f"{c}*x^{e}")
    return "+".join(terms) if terms else "0"


def format_element(ctx: FieldCtx, a: FFElem) -> str:
    return format_poly(a.coeffs)
