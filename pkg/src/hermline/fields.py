"""Exact arithmetic in small Galois fields GF(p^k) with an involution.

An element of GF(p^k) is stored as a plain int in [0, p^k): the integer
c0 + c1*p + ... + c_{k-1}*p^(k-1) encodes the residue class of the
polynomial c0 + c1*x + ... + c_{k-1}*x^(k-1) modulo a fixed monic
irreducible polynomial of degree k.  The modulus is the first monic
irreducible polynomial in the base-p encoding order, found by exhaustive
search, so a field is determined by (p, k) alone.  The packed integer
doubles as the wire format: elements serialise as decimal strings.

All operations are table driven, so construction costs O(q^2) for a
field of order q.  The library is tuned for q <= 9; larger orders work
on a best-effort basis.

Each field carries an involution sigma, a field automorphism of order
at most two:

* ``identity``  -- sigma(a) = a, available for every field;
* ``frobenius`` -- sigma(a) = a^(p^(k/2)), available when k is even.
"""

from __future__ import annotations

import functools

IDENTITY = "identity"
FROBENIUS = "frobenius"

_INVOLUTION_ALIASES = {
    "identity": IDENTITY,
    "id": IDENTITY,
    "frobenius": FROBENIUS,
    "frobenius_half": FROBENIUS,
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(code: int, p: int, k: int) -> tuple[int, ...]:
    """Base-p digits of code, least significant first, padded to length k."""
    out = []
    for _ in range(k):
        out.append(code % p)
        code //= p
    return tuple(out)


def _pack(coeffs, p: int) -> int:
    code = 0
    for c in reversed(tuple(coeffs)):
        code = code * p + c
    return code


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, b, p):
    """Remainder of a modulo the monic polynomial b, coefficients mod p."""
    a = list(a)
    db = len(b) - 1
    while len(a) > db:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - db
            for i in range(db + 1):
                a[shift + i] = (a[shift + i] - lead * b[i]) % p
        a.pop()
    return a


def _poly_is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for code in range(p**d):
            div = list(_digits(code, p, d)) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible degree-k polynomial in base-p encoding order."""
    for code in range(p**k):
        cand = list(_digits(code, p, k)) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldSpec:
    """A concrete GF(p^k) with precomputed operation tables.

    Instances should be obtained through :func:`make_field`, which
    caches them, so two fields with the same parameters are the same
    object.  Elements are ints in [0, q) and all arithmetic goes through
    the methods below.
    """

    __slots__ = (
        "p",
        "k",
        "q",
        "involution",
        "modulus",
        "fixed_elements",
        "_add",
        "_sub",
        "_mul",
        "_neg",
        "_inv",
        "_sigma",
        "_frob",
    )

    def __init__(self, p: int, k: int, involution: str):
        self.p = p
        self.k = k
        self.q = q = p**k
        self.involution = involution
        self.modulus = modulus = _find_modulus(p, k)

        add = []
        neg = []
        for a in range(q):
            da = _digits(a, p, k)
            neg.append(_pack(((p - c) % p for c in da), p))
            add.append(
                tuple(
                    _pack(((x + y) % p for x, y in zip(da, _digits(b, p, k))), p)
                    for b in range(q)
                )
            )
        self._add = tuple(add)
        self._neg = tuple(neg)
        self._sub = tuple(
            tuple(add[a][neg[b]] for b in range(q)) for a in range(q)
        )

        mul = []
        for a in range(q):
            da = _digits(a, p, k)
            row = []
            for b in range(q):
                prod = _poly_mul(da, _digits(b, p, k), p)
                row.append(_pack(_poly_rem(prod + [0], modulus, p) + [0] * k, p))
            mul.append(tuple(row))
        self._mul = tuple(mul)

        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        self._inv = tuple(inv)

        if involution == FROBENIUS:
            e = p ** (k // 2)
            self._sigma = tuple(self.pow(a, e) for a in range(q))
        else:
            self._sigma = tuple(range(q))
        self.fixed_elements = tuple(a for a in range(q) if self._sigma[a] == a)
        self._frob = {}

        sig = self._sigma
        assert all(sig[sig[a]] == a for a in range(q))
        assert all(
            sig[mul[a][b]] == mul[sig[a]][sig[b]] for a in range(q) for b in range(q)
        )

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def sigma(self, a: int) -> int:
        return self._sigma[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out, base = 1, a
        mul = self._mul
        while e:
            if e & 1:
                out = mul[out][base]
            base = mul[base][base]
            e >>= 1
        return out

    def frobenius(self, a: int, power: int) -> int:
        """Apply the automorphism x -> x^(p^power)."""
        power %= self.k
        table = self._frob.get(power)
        if table is None:
            e = self.p**power
            table = tuple(self.pow(b, e) for b in range(self.q))
            self._frob[power] = table
        return table[a]

    # -- structure -----------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def enumerate_elements(self) -> list[int]:
        """All elements in ascending packed-integer order, starting at 0."""
        return list(range(self.q))

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coefficients of a, constant term first."""
        self.check_element(a)
        return _digits(a, self.p, self.k)

    def from_coeffs(self, coeffs) -> int:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.k or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"need {self.k} coefficients in [0, {self.p})")
        return _pack(coeffs, self.p)

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    def element_to_string(self, a: int) -> str:
        return str(self.check_element(a))

    def parse_element(self, s: str) -> int:
        try:
            a = int(s, 10)
        except (TypeError, ValueError):
            raise ValueError(f"{s!r} is not a field element literal") from None
        return self.check_element(a)

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.involution) == (
            other.p,
            other.k,
            other.involution,
        )

    def __hash__(self) -> int:
        return hash((FieldSpec, self.p, self.k, self.involution))

    def __repr__(self) -> str:
        if self.involution == IDENTITY:
            return f"GF({self.q})"
        return f"GF({self.q})[{self.involution}]"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int, involution: str) -> FieldSpec:
    return FieldSpec(p, k, involution)


def make_field(p: int, k: int = 1, involution: str = IDENTITY) -> FieldSpec:
    """Construct (or fetch from cache) the field GF(p^k) with involution.

    Raises ValueError for non-prime p, k < 1, an unknown involution
    name, or the frobenius involution on a field of odd degree.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    kind = _INVOLUTION_ALIASES.get(involution)
    if kind is None:
        raise ValueError(f"unknown involution {involution!r}")
    if kind == FROBENIUS and k % 2:
        raise ValueError("the frobenius involution needs even extension degree k")
    return _make_field(p, k, kind)
