import re
from fractions import Fraction

from . import caps
from .magma import Magma, SubMagma


class CoefficientDomain:
    """Z_m (finite), arbitrary-precision integers, or rationals."""

    def __init__(self, kind, modulus=None):
        if kind not in ("mod", "integer", "rational"):
            raise ValueError("kind must be 'mod', 'integer' or 'rational'")
        if kind == "mod":
            if modulus is None or modulus < 2:
                raise ValueError("modulus must be at least 2")
        elif modulus is not None:
            raise ValueError("modulus only applies to kind 'mod'")
        self.kind = kind
        self.modulus = modulus

    @property
    def finite(self):
        return self.kind == "mod"

    def reduce(self, v):
        if self.kind == "mod":
            return int(v) % self.modulus
        if self.kind == "rational":
            return Fraction(v)
        return int(v)

    def zero(self):
        return self.reduce(0)

    def one(self):
        return self.reduce(1)

    def __eq__(self, other):
        return (isinstance(other, CoefficientDomain)
                and self.kind == other.kind and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        if self.kind == "mod":
            return f"Z_{self.modulus}"
        return {"integer": "Z", "rational": "Q"}[self.kind]


def mod_domain(m):
    return CoefficientDomain("mod", m)


INTEGERS = CoefficientDomain("integer")
RATIONALS = CoefficientDomain("rational")


class MagmaRing:
    """The magma ring R[G]: coefficient vectors over a Cayley table."""

    def __init__(self, magma, domain):
        self.magma = magma
        self.domain = domain
        self.has_one = magma.identity is not None

    @property
    def cardinality(self):
        if not self.domain.finite:
            return None
        return self.domain.modulus ** self.magma.order

    def zero(self):
        z = self.domain.zero()
        return RingElement(self, (z,) * self.magma.order)

    def one(self):
        if not self.has_one:
            raise ValueError("magma has no identity; ring has no unit")
        return self.basis(self.magma.identity)

    def basis(self, i):
        z = self.domain.zero()
        coeffs = [z] * self.magma.order
        coeffs[i] = self.domain.one()
        return RingElement(self, tuple(coeffs))

    def element(self, coeffs):
        if len(coeffs) != self.magma.order:
            raise ValueError("coefficient vector length mismatch")
        return RingElement(self, tuple(self.domain.reduce(c) for c in coeffs))

    def decode(self, code):
        if not self.domain.finite:
            raise ValueError("decode requires a finite domain")
        m = self.domain.modulus
        coeffs = []
        for _ in range(self.magma.order):
            coeffs.append(code % m)
            code //= m
        return RingElement(self, tuple(coeffs))

    def all_elements(self, cap=None):
        if not self.domain.finite:
            raise ValueError("enumeration requires a finite domain")
        caps.require("ring enumeration", self.cardinality, caps.global_cap(cap))
        for code in range(self.cardinality):
            yield self.decode(code)

    def __eq__(self, other):
        return (isinstance(other, MagmaRing) and self.magma == other.magma
                and self.domain == other.domain)

    def __hash__(self):
        return hash((self.magma, self.domain))

    def __repr__(self):
        return f"{self.domain!r}[{self.magma.name}]"

    def descriptor(self):
        return {"magma": self.magma.name, "domain": repr(self.domain),
                "cardinality": self.cardinality}


class RingElement:
    """A formal sum over the magma basis, stored as a coefficient vector."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def support(self):
        z = self.ring.domain.zero()
        return tuple(i for i, c in enumerate(self.coeffs) if c != z)

    def is_zero(self):
        z = self.ring.domain.zero()
        return all(c == z for c in self.coeffs)

    def _check(self, other):
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise ValueError("elements belong to different rings")

    def __add__(self, other):
        self._check(other)
        d = self.ring.domain
        return RingElement(self.ring, tuple(
            d.reduce(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        d = self.ring.domain
        return RingElement(self.ring, tuple(d.reduce(-a) for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        d = self.ring.domain
        return RingElement(self.ring, tuple(d.reduce(c * a) for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        d = self.ring.domain
        table = self.ring.magma.table
        z = d.zero()
        out = [z] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a == z:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if b == z:
                    continue
                out[row[j]] += a * b
        return RingElement(self.ring, tuple(d.reduce(v) for v in out))

    def power_left(self, t):
        if t < 1:
            raise ValueError("exponent must be at least 1")
        acc = self
        for _ in range(t - 1):
            acc = acc * self
        return acc

    def circle(self, other):
        # x o y = x + y - xy
        return self + other - (self * other)

    def augmentation(self):
        d = self.ring.domain
        total = d.zero()
        for c in self.coeffs:
            total += c
        return d.reduce(total)

    def encode(self):
        d = self.ring.domain
        if not d.finite:
            raise ValueError("encode requires a finite domain")
        m = d.modulus
        code = 0
        for c in reversed(self.coeffs):
            code = code * m + int(c)
        return code

    def __eq__(self, other):
        return (isinstance(other, RingElement) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ring.magma), self.coeffs))

    def __repr__(self):
        return f"<{self.text()} in {self.ring!r}>"

    def text(self):
        z = self.ring.domain.zero()
        one = self.ring.domain.one()
        labels = self.ring.magma.labels
        ident = self.ring.magma.identity
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == z:
                continue
            lab = labels[i]
            if lab.isdigit():
                lab = "g" + lab
            if i == ident:
                parts.append(str(c))
            elif c == one:
                parts.append(lab)
            else:
                parts.append(f"{c}*{lab}")
        return " + ".join(parts) if parts else "0"


def ring(magma, domain):
    if isinstance(domain, int):
        domain = mod_domain(domain)
    return MagmaRing(magma, domain)


_TERM_RE = re.compile(r"^(?:(-?\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z_0-9]*|\d+)?$")


def parse_element(r, text):
    """Parse `1 + 3*g1 + 4*g5` style sums against the ring's magma labels.

    A bare number is the identity-element coefficient; `g<i>` is accepted as
    an alias for a purely numeric label `<i>`.
    """
    d = r.domain
    magma = r.magma
    coeffs = [d.zero()] * magma.order

    def resolve(label):
        if label in magma._index:
            return magma.index(label)
        if label.startswith("g") and label[1:] in magma._index:
            return magma.index(label[1:])
        raise ValueError(f"unknown element label {label!r}")

    body = text.replace("-", "+-").replace(" ", "")
    if body.startswith("+-"):
        body = body[1:]
    for raw in body.split("+"):
        if not raw:
            continue
        neg = raw.startswith("-")
        if neg:
            raw = raw[1:]
        if "*" in raw:
            cs, label = raw.split("*", 1)
            coeff = Fraction(cs) if "/" in cs else int(cs)
            idx = resolve(label)
        elif re.fullmatch(r"\d+(/\d+)?", raw):
            coeff = Fraction(raw) if "/" in raw else int(raw)
            if magma.identity is None:
                raise ValueError("bare constant requires a magma identity")
            idx = magma.identity
        else:
            coeff = 1
            idx = resolve(raw)
        if neg:
            coeff = -coeff
        coeffs[idx] = d.reduce(coeffs[idx] + coeff)
    return RingElement(r, tuple(coeffs))


def envelope(r, base=None):
    """The magma {1+u : augmentation(u) = 0} inside a finite magma ring.

    With base (a submagma), u ranges over the span of the base instead;
    this is the base-restricted envelope.
    """
    if not r.has_one:
        raise ValueError("envelope requires a magma with identity")
    if not r.domain.finite:
        raise ValueError("envelope requires a finite domain")
    magma = r.magma
    m = r.domain.modulus
    if base is None:
        span = list(range(magma.order))
    else:
        if isinstance(base, SubMagma):
            members = sorted(base.members)
        else:
            members = sorted(magma.index(x) if isinstance(x, str) else x
                             for x in base)
        span = members
    # enumerate U: coefficient vectors over span with zero coefficient sum
    count = m ** len(span)
    caps.require("envelope enumeration", count, caps.global_cap())
    one = r.one()
    elems = []
    for code in range(count):
        c = code
        coeffs = [0] * magma.order
        total = 0
        for idx in span:
            coeffs[idx] = c % m
            total += c % m
            c //= m
        if total % m != 0:
            continue
        u = r.element(coeffs)
        elems.append(one + u)
    codes = [x.encode() for x in elems]
    pos = {c: i for i, c in enumerate(codes)}
    labels = [str(c) for c in codes]
    table = []
    for x in elems:
        row = []
        for y in elems:
            p = (x * y).encode()
            if p not in pos:
                raise ValueError("envelope set is not closed under the product")
            row.append(pos[p])
        table.append(row)
    name = f"envelope({r!r})" if base is None else f"s_envelope({r!r})"
    env = Magma(name, labels, table, None)
    k = env.order
    for e in range(k):
        if all(env.table[e][x] == x and env.table[x][e] == x for x in range(k)):
            env = Magma(name, labels, [list(rw) for rw in env.table], e)
            break
    return env
