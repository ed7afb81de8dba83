import json
from itertools import combinations
from math import gcd

from .caps import GENERATOR_CAP, SUBSET_SCAN_ORDER_CAP
from .report import PropertyReport


class Magma:
    """A finite set with a total binary operation given by a Cayley table."""

    def __init__(self, name, labels, table, identity=None):
        k = len(labels)
        if len(set(labels)) != k:
            raise ValueError("element labels must be pairwise distinct")
        if len(table) != k or any(len(row) != k for row in table):
            raise ValueError("table must be square and match the label count")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < k:
                    raise ValueError(f"table entry {v!r} is not a valid index")
        self.name = name
        self.order = k
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        self._index = {lab: i for i, lab in enumerate(labels)}
        if identity is not None:
            e = identity
            if any(self.table[e][x] != x or self.table[x][e] != x for x in range(k)):
                raise ValueError(f"claimed identity {labels[e]!r} is not an identity")
        self.identity = identity
        self._left_div = None
        self._right_div = None

    def op(self, i, j):
        return self.table[i][j]

    def index(self, label):
        if label not in self._index:
            raise ValueError(f"unknown label {label!r}")
        return self._index[label]

    def label(self, i):
        return self.labels[i]

    def is_latin(self):
        k = self.order
        rng = set(range(k))
        for i in range(k):
            if set(self.table[i]) != rng:
                return False
            if {self.table[j][i] for j in range(k)} != rng:
                return False
        return True

    def is_loop(self):
        return self.identity is not None and self.is_latin()

    def is_commutative(self):
        k = self.order
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(k) for j in range(i + 1, k))

    def is_associative(self):
        return self.first_nonassoc() is None

    def first_nonassoc(self):
        k, t = self.order, self.table
        for a in range(k):
            for b in range(k):
                ab = t[a][b]
                for c in range(k):
                    if t[ab][c] != t[a][t[b][c]]:
                        return (a, b, c)
        return None

    def _build_div(self):
        if self._left_div is not None:
            return
        k = self.order
        ld = [[None] * k for _ in range(k)]
        rd = [[None] * k for _ in range(k)]
        for a in range(k):
            for x in range(k):
                c = self.table[a][x]
                ld[a][c] = x    # a * x = c  =>  x = a \ c
                rd[x][c] = a    # a * x = c  =>  a = c / x
        self._left_div = ld
        self._right_div = rd

    def left_divide(self, a, b):
        # the unique x with a*x = b
        self._build_div()
        x = self._left_div[a][b]
        if x is None:
            raise ValueError("no left quotient; table is not a Latin square")
        return x

    def right_divide(self, a, b):
        # the unique y with y*a = b
        self._build_div()
        y = self._right_div[a][b]
        if y is None:
            raise ValueError("no right quotient; table is not a Latin square")
        return y

    def right_inverse(self, x):
        if self.identity is None:
            raise ValueError("magma has no identity")
        return self.left_divide(x, self.identity)

    def __eq__(self, other):
        return (isinstance(other, Magma) and self.labels == other.labels
                and self.table == other.table and self.identity == other.identity)

    def __hash__(self):
        return hash((self.labels, self.table, self.identity))

    def __repr__(self):
        return f"Magma({self.name!r}, order={self.order})"

    def to_json(self):
        return {
            "name": self.name,
            "elements": list(self.labels),
            "identity": None if self.identity is None else self.labels[self.identity],
            "table": [[self.labels[v] for v in row] for row in self.table],
        }

    def to_text(self):
        lines = [" ".join(self.labels)]
        for row in self.table:
            lines.append(" ".join(self.labels[v] for v in row))
        return "\n".join(lines) + "\n"


def build(labels, table, identity=None, name="magma"):
    """Construct a magma from labels and a Cayley table.

    table entries may be indices or labels; identity is a label or None.
    """
    labels = list(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    norm = []
    for row in table:
        r = []
        for v in row:
            if isinstance(v, int):
                r.append(v)
            else:
                if v not in idx:
                    raise ValueError(f"unknown label {v!r} in table")
                r.append(idx[v])
        norm.append(r)
    e = None
    if identity is not None:
        if identity not in idx:
            raise ValueError(f"unknown identity label {identity!r}")
        e = idx[identity]
    return Magma(name, labels, norm, e)


def from_json(doc):
    if isinstance(doc, str):
        doc = json.loads(doc)
    return build(doc["elements"], doc["table"], doc.get("identity"),
                 name=doc.get("name", "magma"))


def from_text(text, name="magma"):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    labels = lines[0].split()
    rows = [ln.split() for ln in lines[1:]]
    if len(rows) != len(labels):
        raise ValueError("row count does not match label count")
    m = build(labels, rows, None, name=name)
    # detect a two-sided identity rather than demanding a claim
    for e in range(m.order):
        if all(m.table[e][x] == x and m.table[x][e] == x for x in range(m.order)):
            return Magma(name, labels, [list(r) for r in m.table], e)
    return m


def l_loop(n, m):
    """The loop on {e,1,..,n} with i*j = (mj - (m-1)i) mod n, i*i = e."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if n <= 3:
        raise ValueError("n must exceed 3")
    if not 1 < m < n:
        raise ValueError("m must satisfy 1 < m < n")
    if gcd(m, n) != 1:
        raise ValueError("gcd(m, n) must be 1")
    if gcd(m - 1, n) != 1:
        raise ValueError("gcd(m-1, n) must be 1")
    labels = ["e"] + [str(i) for i in range(1, n + 1)]
    k = n + 1
    table = [[0] * k for _ in range(k)]
    for i in range(k):
        table[0][i] = i
        table[i][0] = i
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                table[i][j] = 0
            else:
                t = (m * j - (m - 1) * i) % n
                table[i][j] = n if t == 0 else t
    return Magma(f"l_loop({n},{m})", labels, table, 0)


def jordan_loop(p):
    """The commutative loop on {e,g1,..,gp} with gi*gj = g_t,
    t = ((p+1)j/2 - (p-1)i/2) mod p; equals l_loop(p,(p+1)/2) table-for-table."""
    if p <= 3:
        raise ValueError("p must exceed 3")
    if any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be prime")
    base = l_loop(p, (p + 1) // 2)
    labels = ["e"] + [f"g{i}" for i in range(1, p + 1)]
    return Magma(f"jordan_loop({p})", labels,
                 [list(r) for r in base.table], 0)


_Z_VARIANTS = ("Z", "Zstar", "Zstarstar", "Zstarstarstar")


def z_groupoid(n, t, u, variant="Z"):
    """Groupoid on Z_n with a*b = (a*t + b*u) mod n, variant-constrained t,u."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if variant not in _Z_VARIANTS:
        raise ValueError(f"variant must be one of {_Z_VARIANTS}")
    t %= n
    u %= n
    if variant != "Zstarstarstar" and (t == 0 or u == 0):
        raise ValueError(f"variant {variant} requires t, u nonzero")
    if variant == "Z" and gcd(t, u) != 1:
        raise ValueError("variant Z requires gcd(t, u) = 1")
    if variant == "Zstar" and t == u:
        raise ValueError("variant Zstar requires t != u")
    labels = [f"a{i}" for i in range(n)]
    table = [[(a * t + b * u) % n for b in range(n)] for a in range(n)]
    m = Magma(f"z_groupoid({n},{t},{u},{variant})", labels, table, None)
    # flag 0 as identity only when it really is one
    if all(table[0][x] == x and table[x][0] == x for x in range(n)):
        m = Magma(m.name, labels, table, 0)
    return m


class MagmaClassification:
    def __init__(self, is_semigroup, is_loop, is_group, is_commutative,
                 satisfied_identities, witness_failures):
        self.is_semigroup = is_semigroup
        self.is_loop = is_loop
        self.is_group = is_group
        self.is_commutative = is_commutative
        self.satisfied_identities = satisfied_identities
        self.witness_failures = witness_failures

    def to_json(self):
        return {
            "is_semigroup": self.is_semigroup,
            "is_loop": self.is_loop,
            "is_group": self.is_group,
            "is_commutative": self.is_commutative,
            "satisfied_identities": sorted(self.satisfied_identities),
            "witness_failures": {k: list(v) for k, v in self.witness_failures.items()},
        }


def classify(magma):
    failures = {}
    na = magma.first_nonassoc()
    is_semigroup = na is None
    if na is not None:
        failures["associative"] = na
    is_loop = magma.is_loop()
    comm_witness = None
    k = magma.order
    for i in range(k):
        if comm_witness:
            break
        for j in range(k):
            if magma.table[i][j] != magma.table[j][i]:
                comm_witness = (i, j)
                break
    is_comm = comm_witness is None
    if comm_witness:
        failures["commutative"] = comm_witness
    sat = set()
    if is_semigroup:
        sat.add("associative")
    if is_comm:
        sat.add("commutative")
    return MagmaClassification(is_semigroup, is_loop,
                               is_semigroup and is_loop, is_comm, sat, failures)


def divide(magma, a, b, side="left"):
    if not magma.is_loop():
        raise ValueError("division requires a loop")
    if side == "left":
        return magma.left_divide(a, b)
    if side == "right":
        return magma.right_divide(a, b)
    raise ValueError("side must be 'left' or 'right'")


def commutator(magma, x, y):
    # xy = (yx) * (x, y)  =>  (x, y) = (yx) \ (xy)
    if not magma.is_loop():
        raise ValueError("commutator requires a loop")
    return magma.left_divide(magma.op(y, x), magma.op(x, y))


def associator(magma, x, y, z):
    # (xy)z = (x(yz)) * (x, y, z)
    if not magma.is_loop():
        raise ValueError("associator requires a loop")
    lhs = magma.op(magma.op(x, y), z)
    base = magma.op(x, magma.op(y, z))
    return magma.left_divide(base, lhs)


def _close_subloop(magma, seed):
    # closure under the operation and both divisions; always contains e
    members = set(seed)
    if magma.identity is not None:
        members.add(magma.identity)
    changed = True
    while changed:
        changed = False
        cur = list(members)
        for a in cur:
            for b in cur:
                for v in (magma.op(a, b), magma.left_divide(a, b),
                          magma.right_divide(a, b)):
                    if v not in members:
                        members.add(v)
                        changed = True
    return frozenset(members)


def close_submagma(magma, seed):
    members = set(seed)
    changed = True
    while changed:
        changed = False
        cur = list(members)
        for a in cur:
            for b in cur:
                v = magma.op(a, b)
                if v not in members:
                    members.add(v)
                    changed = True
    return frozenset(members)


def derived_subloop(magma, which="commutator"):
    if not magma.is_loop():
        raise ValueError("derived subloop requires a loop")
    k = magma.order
    gens = set()
    if which == "commutator":
        for x in range(k):
            for y in range(k):
                gens.add(commutator(magma, x, y))
    elif which == "associator":
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    gens.add(associator(magma, x, y, z))
    else:
        raise ValueError("which must be 'commutator' or 'associator'")
    return SubMagma(magma, _close_subloop(magma, gens), "subloop")


class SubMagma:
    def __init__(self, parent, members, kind, exhaustive=True):
        self.parent = parent
        self.members = frozenset(members)
        self.kind = kind
        self.exhaustive = exhaustive

    @property
    def size(self):
        return len(self.members)

    def sorted_members(self):
        return tuple(sorted(self.members))

    def member_labels(self):
        return tuple(self.parent.labels[i] for i in self.sorted_members())

    def __eq__(self, other):
        return (isinstance(other, SubMagma) and self.members == other.members
                and self.parent is other.parent)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"SubMagma({self.kind}, {self.member_labels()})"

    def to_json(self):
        return {"kind": self.kind, "members": list(self.member_labels())}


def _is_closed(magma, s):
    return all(magma.op(a, b) in s for a in s for b in s)


def _is_assoc_on(magma, s):
    for a in s:
        for b in s:
            ab = magma.op(a, b)
            for c in s:
                if magma.op(ab, c) != magma.op(a, magma.op(b, c)):
                    return False
    return True


def _has_identity_on(magma, s):
    for e in s:
        if all(magma.op(e, x) == x and magma.op(x, e) == x for x in s):
            return e
    return None


def _is_latin_on(magma, s):
    for a in s:
        if {magma.op(a, b) for b in s} != set(s):
            return False
        if {magma.op(b, a) for b in s} != set(s):
            return False
    return True


def is_subsemigroup(magma, s):
    return _is_closed(magma, s) and _is_assoc_on(magma, s)


def is_subloop(magma, s):
    return (_is_closed(magma, s) and _has_identity_on(magma, s) is not None
            and _is_latin_on(magma, s))


def is_subgroup(magma, s):
    return is_subloop(magma, s) and _is_assoc_on(magma, s)


def _set_op(magma, xs, ys):
    return frozenset(magma.op(a, b) for a in xs for b in ys)


def is_normal_subloop(magma, s):
    # xS = Sx, (Sx)y = S(xy), y(xS) = (yx)S for all x, y
    k = magma.order
    sf = frozenset(s)
    for x in range(k):
        xs = frozenset(magma.op(x, a) for a in sf)
        sx = frozenset(magma.op(a, x) for a in sf)
        if xs != sx:
            return False
        for y in range(k):
            if frozenset(magma.op(a, y) for a in sx) != \
               frozenset(magma.op(a, magma.op(x, y)) for a in sf):
                return False
            if frozenset(magma.op(y, a) for a in xs) != \
               frozenset(magma.op(magma.op(y, x), a) for a in sf):
                return False
    return True


def _is_groupoid_ideal(magma, s, side):
    if not _is_closed(magma, s):
        return False
    k = magma.order
    if side in ("left", "both"):
        if not all(magma.op(x, a) in s for x in range(k) for a in s):
            return False
    if side in ("right", "both"):
        if not all(magma.op(a, x) in s for x in range(k) for a in s):
            return False
    return True


def _is_semi_ideal(magma, s, strong):
    if not _is_closed(magma, s):
        return False
    k = magma.order
    if strong:
        return all(magma.op(magma.op(x, y), a) in s and
                   magma.op(a, magma.op(x, y)) in s
                   for x in range(k) for y in range(k) for a in s)
    return all(magma.op(magma.op(x, x), a) in s and
               magma.op(a, magma.op(x, x)) in s
               for x in range(k) for a in s)


_KIND_TESTS = {
    "submagma": lambda m, s: _is_closed(m, s),
    "subsemigroup": is_subsemigroup,
    "subgroup": is_subgroup,
    "subloop": is_subloop,
    "normal_subloop": lambda m, s: is_subloop(m, s) and is_normal_subloop(m, s),
    "groupoid_left_ideal": lambda m, s: _is_groupoid_ideal(m, s, "left"),
    "groupoid_right_ideal": lambda m, s: _is_groupoid_ideal(m, s, "right"),
    "groupoid_ideal": lambda m, s: _is_groupoid_ideal(m, s, "both"),
    "semi_ideal": lambda m, s: _is_semi_ideal(m, s, False),
    "strong_semi_ideal": lambda m, s: _is_semi_ideal(m, s, True),
}

_LOOP_KINDS = {"subgroup", "subloop", "normal_subloop"}


def enumerate_substructures(magma, kind, generator_cap=GENERATOR_CAP,
                            full_enumeration_cap=SUBSET_SCAN_ORDER_CAP,
                            include_trivial=False):
    """All proper substructures of the given kind, sorted by (size, members).

    Exhaustive subset scan for order <= full_enumeration_cap; otherwise
    closures of generator sets of size <= generator_cap (marked non-exhaustive).
    """
    if kind not in _KIND_TESTS:
        raise ValueError(f"unknown substructure kind {kind!r}")
    if kind in _LOOP_KINDS and not magma.is_loop():
        raise ValueError(f"kind {kind} requires a loop")
    test = _KIND_TESTS[kind]
    k = magma.order
    found = set()
    exhaustive = k <= full_enumeration_cap
    if exhaustive:
        pool = list(range(k))
        for size in range(1, k):
            for comb in combinations(pool, size):
                s = frozenset(comb)
                if test(magma, s):
                    found.add(s)
    else:
        closer = _close_subloop if kind in _LOOP_KINDS else close_submagma
        for size in range(1, generator_cap + 1):
            for comb in combinations(range(k), size):
                s = closer(magma, comb)
                if len(s) < k and test(magma, s):
                    found.add(s)
    if not include_trivial and kind in _LOOP_KINDS:
        e = magma.identity
        found = {s for s in found if s != frozenset({e})}
    subs = [SubMagma(magma, s, kind, exhaustive) for s in found]
    subs.sort(key=lambda s: (s.size, s.sorted_members()))
    return subs


# ---------------------------------------------------------------------------
# identities


def _moufang_fail(m, x, y, z):
    return m.op(m.op(x, y), m.op(z, x)) != m.op(m.op(x, m.op(y, z)), x)


def _bol_fail(m, x, y, z):
    return m.op(m.op(m.op(x, y), z), y) != m.op(x, m.op(m.op(y, z), y))


def _right_alt_fail(m, x, y):
    return m.op(m.op(x, y), y) != m.op(x, m.op(y, y))


def _left_alt_fail(m, x, y):
    return m.op(m.op(x, x), y) != m.op(x, m.op(x, y))


def _p_fail(m, x, y):
    return m.op(m.op(x, y), x) != m.op(x, m.op(y, x))


def _jordan_fail(m, a, b):
    a2 = m.op(a, a)
    return m.op(a2, m.op(a, b)) != m.op(a, m.op(a2, b))


_LOOP_ONLY_IDS = {"wip", "semi_alt", "bruck"}


def holds_identity(magma, identity_id):
    """Exhaustively decide a named identity; counterexample on failure."""
    k = magma.order
    m = magma
    if identity_id in _LOOP_ONLY_IDS and not magma.is_loop():
        raise ValueError(f"identity {identity_id} requires a loop")

    def report(holds, ce=None):
        return PropertyReport(identity_id, holds, counterexample=ce)

    if identity_id == "moufang":
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if _moufang_fail(m, x, y, z):
                        return report(False, (x, y, z))
        return report(True)
    if identity_id == "bol":
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if _bol_fail(m, x, y, z):
                        return report(False, (x, y, z))
        return report(True)
    if identity_id == "bruck":
        # (x(yx))z = x(y(xz)) and (xy)^-1 = x^-1 y^-1
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if m.op(m.op(x, m.op(y, x)), z) != \
                       m.op(x, m.op(y, m.op(x, z))):
                        return report(False, (x, y, z))
        for x in range(k):
            for y in range(k):
                if m.right_inverse(m.op(x, y)) != \
                   m.op(m.right_inverse(x), m.right_inverse(y)):
                    return report(False, (x, y))
        return report(True)
    if identity_id == "right_alt":
        for x in range(k):
            for y in range(k):
                if _right_alt_fail(m, x, y):
                    return report(False, (x, y))
        return report(True)
    if identity_id == "left_alt":
        for x in range(k):
            for y in range(k):
                if _left_alt_fail(m, x, y):
                    return report(False, (x, y))
        return report(True)
    if identity_id == "alt":
        for x in range(k):
            for y in range(k):
                if _right_alt_fail(m, x, y) or _left_alt_fail(m, x, y):
                    return report(False, (x, y))
        return report(True)
    if identity_id == "wip":
        e = m.identity
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if m.op(m.op(x, y), z) == e and m.op(x, m.op(y, z)) != e:
                        return report(False, (x, y, z))
        return report(True)
    if identity_id == "semi_alt":
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if associator(m, x, y, z) != associator(m, y, z, x):
                        return report(False, (x, y, z))
        return report(True)
    if identity_id == "p_groupoid":
        for x in range(k):
            for y in range(k):
                if _p_fail(m, x, y):
                    return report(False, (x, y))
        return report(True)
    if identity_id == "jordan":
        for i in range(k):
            for j in range(k):
                if m.table[i][j] != m.table[j][i]:
                    return report(False, (i, j))
        for a in range(k):
            for b in range(k):
                if _jordan_fail(m, a, b):
                    return report(False, (a, b))
        return report(True)
    raise ValueError(f"unknown identity id {identity_id!r}")


def nuclei(magma):
    """Left/middle/right nuclei, nucleus, commuting centre and centre."""
    if not magma.is_loop():
        raise ValueError("nuclei require a loop")
    k = magma.order
    m = magma

    def assoc(a, b, c):
        return m.op(m.op(a, b), c) == m.op(a, m.op(b, c))

    n_l = frozenset(a for a in range(k)
                    if all(assoc(a, x, y) for x in range(k) for y in range(k)))
    n_m = frozenset(x for x in range(k)
                    if all(assoc(a, x, y) for a in range(k) for y in range(k)))
    n_r = frozenset(y for y in range(k)
                    if all(assoc(a, x, y) for a in range(k) for x in range(k)))
    n = n_l & n_m & n_r
    c = frozenset(x for x in range(k)
                  if all(m.op(x, y) == m.op(y, x) for y in range(k)))
    z = c & n
    mk = lambda s: SubMagma(magma, s, "submagma")
    return {"N_lambda": mk(n_l), "N_mu": mk(n_m), "N_rho": mk(n_r),
            "N": mk(n), "C": mk(c), "Z": mk(z)}


# ---------------------------------------------------------------------------
# Smarandache predicates on magmas


def _witness_report(notion, sub, params=None, exhaustive=True):
    return PropertyReport(notion, True,
                          witness={"members": list(sub.member_labels())},
                          params=params, exhaustive=exhaustive)


def _fail_report(notion, params=None, exhaustive=True, detail=None, ce=None):
    holds = False if exhaustive else "unknown-at-bound"
    return PropertyReport(notion, holds, params=params, detail=detail,
                          counterexample=ce, exhaustive=exhaustive)


def _proper_subgroups(magma):
    # subgroups of size >= 2 (the trivial {e} makes every loop an S-loop vacuously)
    return [s for s in enumerate_substructures(magma, "subgroup")
            if s.size >= 2 and s.size < magma.order]


def _s_subloops(magma):
    """Proper subloops that contain a proper subgroup but are not groups."""
    out = []
    for s in enumerate_substructures(magma, "subloop"):
        if s.size >= magma.order or s.size < 2:
            continue
        if _is_assoc_on(magma, s.members):
            continue  # a subgroup, not an S-subloop proper
        if any(g.members < s.members for g in _proper_subgroups(magma)):
            out.append(s)
    return out


def _s_subgroupoids(magma):
    """Closed proper subsets properly containing a (possibly singleton) semigroup."""
    semis = [s.members for s in enumerate_substructures(magma, "subsemigroup")]
    out = []
    for s in enumerate_substructures(magma, "submagma"):
        if s.size >= magma.order:
            continue
        if any(t < s.members for t in semis):
            out.append(s)
    return out


def _is_cyclic_group(magma, s):
    members = set(s)
    for g in s:
        orbit = {g}
        cur = g
        for _ in range(len(members)):
            cur = magma.op(cur, g)
            orbit.add(cur)
        if orbit == members:
            return True
    # a lone identity is the cyclic trivial group
    return len(members) == 1


def smarandache_magma_check(magma, notion, params=None):
    """Decide a Smarandache-style structural predicate on a magma."""
    params = dict(params or {})

    if notion == "s_loop":
        if not magma.is_loop():
            raise ValueError("s_loop applies to loops")
        for g in _proper_subgroups(magma):
            return _witness_report(notion, g)
        return _fail_report(notion)

    if notion == "s_groupoid":
        semis = [s for s in enumerate_substructures(magma, "subsemigroup")
                 if 2 <= s.size < magma.order]
        if semis:
            return _witness_report(notion, semis[0])
        return _fail_report(notion)

    if notion == "s_subloop":
        subs = _s_subloops(magma)
        if subs:
            return _witness_report(notion, subs[0])
        return _fail_report(notion)

    if notion == "s_normal_subloop":
        for s in enumerate_substructures(magma, "normal_subloop"):
            if s.size < 2 or s.size >= magma.order:
                continue
            if any(g.members < s.members for g in _proper_subgroups(magma)):
                return _witness_report(notion, s)
        return _fail_report(notion)

    if notion == "s_simple":
        rep = smarandache_magma_check(magma, "s_normal_subloop")
        if rep.holds is True:
            return PropertyReport(notion, False, counterexample=rep.witness)
        return PropertyReport(notion, True)

    if notion == "s_commutative":
        for g in _proper_subgroups(magma):
            if all(magma.op(a, b) == magma.op(b, a)
                   for a in g.members for b in g.members):
                return _witness_report(notion, g)
        return _fail_report(notion)

    if notion == "s_strongly_commutative":
        groups = _proper_subgroups(magma)
        if not groups:
            return _fail_report(notion, detail="no proper subgroups")
        for g in groups:
            for a in g.members:
                for b in g.members:
                    if magma.op(a, b) != magma.op(b, a):
                        return _fail_report(notion, ce=g.to_json())
        return PropertyReport(notion, True,
                              detail=f"{len(groups)} subgroups, all commutative")

    if notion == "s_cyclic":
        for g in _proper_subgroups(magma):
            if _is_cyclic_group(magma, g.members):
                return _witness_report(notion, g)
        return _fail_report(notion)

    if notion == "s_strongly_cyclic":
        groups = _proper_subgroups(magma)
        if not groups:
            return _fail_report(notion, detail="no proper subgroups")
        for g in groups:
            if not _is_cyclic_group(magma, g.members):
                return _fail_report(notion, ce=g.to_json())
        return PropertyReport(notion, True,
                              detail=f"{len(groups)} subgroups, all cyclic")

    if notion == "s_cauchy_element":
        a = params["element"]
        if isinstance(a, str):
            a = magma.index(a)
        e = magma.identity
        for g in _proper_subgroups(magma):
            if a not in g.members:
                continue
            cur = a
            for r in range(2, len(g.members) + 1):
                cur = magma.op(cur, a)
                if cur == e:
                    if magma.order % r == 0:
                        return PropertyReport(notion, True,
                                              witness={"order": r,
                                                       "subgroup": list(g.member_labels())})
                    break
        return _fail_report(notion, params={"element": magma.label(a)})

    if notion == "s_cauchy":
        e = magma.identity
        groups = _proper_subgroups(magma)
        if not groups:
            return _fail_report(notion, detail="no proper subgroups")
        for g in groups:
            for a in g.members:
                if a == e:
                    continue
                rep = smarandache_magma_check(
                    magma, "s_cauchy_element", {"element": a})
                if rep.holds is not True:
                    return _fail_report(notion, ce={
                        "element": magma.label(a),
                        "subgroup": list(g.member_labels())})
        return PropertyReport(notion, True)

    if notion in ("s_lagranges", "s_weakly_lagranges"):
        groups = _proper_subgroups(magma)
        if not groups:
            return _fail_report(notion, detail="no proper subgroups")
        divides = [g for g in groups if magma.order % g.size == 0]
        if notion == "s_weakly_lagranges":
            if divides:
                return _witness_report(notion, divides[0])
            return _fail_report(notion)
        bad = [g for g in groups if magma.order % g.size != 0]
        if bad:
            return _fail_report(notion, ce=bad[0].to_json())
        return PropertyReport(notion, True)

    if notion == "s_subgroup_loop":
        # only subgroups, no proper non-group subloops
        for s in enumerate_substructures(magma, "subloop"):
            if 2 <= s.size < magma.order and not _is_assoc_on(magma, s.members):
                return _fail_report(notion, ce=s.to_json())
        return PropertyReport(notion, True)

    if notion == "s_hamiltonian":
        subs = _s_subloops(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subloops")
        for s in subs:
            if not is_normal_subloop(magma, s.members):
                return _fail_report(notion, ce=s.to_json())
        return PropertyReport(notion, True)

    if notion in ("s_seminormal_groupoid", "s_normal_groupoid"):
        v = params.get("subset")
        candidates = ([frozenset(magma.index(x) if isinstance(x, str) else x
                                 for x in v)] if v is not None
                      else [s.members for s in _s_subgroupoids(magma)])
        k = magma.order
        for vm in candidates:
            xs = {frozenset(magma.op(a, x) for x in vm) for a in range(k)}
            ys = {frozenset(magma.op(x, a) for x in vm) for a in range(k)}
            if len(xs) != 1 or len(ys) != 1:
                continue
            x_set, y_set = next(iter(xs)), next(iter(ys))
            if not (_is_closed(magma, x_set) and _is_closed(magma, y_set)):
                continue
            x_s = any(t < x_set for t in
                      (s.members for s in enumerate_substructures(magma, "subsemigroup"))
                      if len(t) >= 2)
            y_s = any(t < y_set for t in
                      (s.members for s in enumerate_substructures(magma, "subsemigroup"))
                      if len(t) >= 2)
            need_both = notion == "s_normal_groupoid"
            ok = (x_s and y_s) if need_both else (x_s or y_s)
            if ok:
                return PropertyReport(notion, True, witness={
                    "V": sorted(magma.label(i) for i in vm),
                    "X": sorted(magma.label(i) for i in x_set),
                    "Y": sorted(magma.label(i) for i in y_set)})
        return _fail_report(notion)

    if notion in ("s_semi_conjugate", "s_conjugate_subgroupoids"):
        subs = _s_subgroupoids(magma)
        k = magma.order

        def translate(x, p, left):
            return frozenset(magma.op(x, a) if left else magma.op(a, x) for a in p)

        for h in subs:
            for p in subs:
                if h.members == p.members:
                    continue
                fwd = any(h.members == translate(x, p.members, left)
                          for x in range(k) for left in (True, False))
                back = any(p.members == translate(x, h.members, left)
                           for x in range(k) for left in (True, False))
                ok = (fwd or back) if notion == "s_semi_conjugate" else (fwd and back)
                if ok:
                    return PropertyReport(notion, True, witness={
                        "H": list(h.member_labels()), "P": list(p.member_labels())})
        return _fail_report(notion)

    if notion == "s_inner_commutative_groupoid":
        subs = _s_subgroupoids(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subgroupoids")
        semis = [s for s in enumerate_substructures(magma, "subsemigroup")
                 if s.size >= 2]
        for sub in subs:
            for t in semis:
                if t.members <= sub.members:
                    if any(magma.op(a, b) != magma.op(b, a)
                           for a in t.members for b in t.members):
                        return _fail_report(notion, ce=t.to_json())
        return PropertyReport(notion, True)

    if notion in ("s_moufang", "s_strong_moufang", "s_bol", "s_strong_bol",
                  "s_p", "s_strong_p", "s_alternative", "s_strong_alternative",
                  "s_right_alternative", "s_strong_right_alternative",
                  "s_left_alternative", "s_strong_left_alternative"):
        strong = "strong" in notion
        base = notion.replace("s_strong_", "").replace("s_", "")
        checks = {
            "moufang": lambda s: all(not _moufang_fail(magma, x, y, z)
                                     for x in s for y in s for z in s),
            "bol": lambda s: all(not _bol_fail(magma, x, y, z)
                                 for x in s for y in s for z in s),
            "p": lambda s: all(not _p_fail(magma, x, y) for x in s for y in s),
            "alternative": lambda s: all(not _right_alt_fail(magma, x, y) and
                                         not _left_alt_fail(magma, x, y)
                                         for x in s for y in s),
            "right_alternative": lambda s: all(not _right_alt_fail(magma, x, y)
                                               for x in s for y in s),
            "left_alternative": lambda s: all(not _left_alt_fail(magma, x, y)
                                              for x in s for y in s),
        }
        check = checks[base]
        subs = _s_subgroupoids(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subgroupoids")
        if strong:
            for sub in subs:
                if not check(sub.members):
                    return _fail_report(notion, ce=sub.to_json())
            return PropertyReport(notion, True)
        for sub in subs:
            if check(sub.members):
                return _witness_report(notion, sub)
        return _fail_report(notion)

    if notion in ("s_commutator_subloop", "s_associator_subloop"):
        subs = _s_subloops(magma)
        domain = subs[0].members if subs else frozenset(range(magma.order))
        gens = set()
        if notion == "s_commutator_subloop":
            for x in domain:
                for y in domain:
                    gens.add(commutator(magma, x, y))
        else:
            for x in domain:
                for y in domain:
                    for z in domain:
                        gens.add(associator(magma, x, y, z))
        sub = SubMagma(magma, _close_subloop(magma, gens), "subloop")
        return PropertyReport(notion, True,
                              witness={"members": list(sub.member_labels()),
                                       "from_s_subloop": bool(subs)})

    if notion in ("s_pseudo_commutative", "s_strongly_pseudo_commutative"):
        subs = _s_subloops(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subloops")
        for sub in subs:
            a_mem = sub.members
            if notion == "s_strongly_pseudo_commutative":
                ok = all(magma.op(a, magma.op(x, b)) in
                         (magma.op(b, magma.op(x, a)),
                          magma.op(magma.op(b, x), a))
                         for a in a_mem for b in a_mem for x in a_mem)
                if ok:
                    return _witness_report(notion, sub)
            else:
                groups = [g for g in _proper_subgroups(magma)
                          if g.members < a_mem]
                for g in groups:
                    ok = all(any(magma.op(a, magma.op(x, b)) in
                                 (magma.op(b, magma.op(x, a)),
                                  magma.op(magma.op(b, x), a))
                                 for x in g.members)
                             for a in a_mem for b in a_mem)
                    if ok:
                        return PropertyReport(notion, True, witness={
                            "A": list(sub.member_labels()),
                            "B": list(g.member_labels())})
        return _fail_report(notion)

    if notion == "s_associative":
        e = magma.identity
        for sub in _s_subloops(magma):
            for x in sub.members:
                for y in sub.members:
                    for z in sub.members:
                        if len({x, y, z}) == 3 and e not in (x, y, z):
                            if magma.op(x, magma.op(y, z)) == \
                               magma.op(magma.op(x, y), z):
                                return PropertyReport(notion, True, witness={
                                    "A": list(sub.member_labels()),
                                    "triple": [magma.label(x), magma.label(y),
                                               magma.label(z)]})
        return _fail_report(notion)

    if notion == "s_pairwise_associative":
        subs = _s_subloops(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subloops")
        for sub in subs:
            if all(magma.op(magma.op(x, y), x) == magma.op(x, magma.op(y, x))
                   for x in sub.members for y in sub.members):
                return _witness_report(notion, sub)
        return _fail_report(notion)

    if notion == "s_pseudo_associative":
        subs = _s_subloops(magma)
        if not subs:
            return _fail_report(notion, detail="no S-subloops")
        for sub in subs:
            sm = sub.members
            ok = True
            for a in sm:
                for b in sm:
                    for c in sm:
                        if magma.op(magma.op(a, b), c) != \
                           magma.op(a, magma.op(b, c)):
                            continue
                        if not any(magma.op(magma.op(a, x), magma.op(b, c)) ==
                                   magma.op(magma.op(a, b), magma.op(x, c))
                                   for x in sm):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                return _witness_report(notion, sub)
        return _fail_report(notion)

    if notion == "s_pseudo_associator_subloop":
        subs = _s_subloops(magma)
        domain = subs[0].members if subs else frozenset(range(magma.order))
        gens = set()
        for a in domain:
            for b in domain:
                for c in domain:
                    if magma.op(magma.op(a, b), c) != magma.op(a, magma.op(b, c)):
                        continue
                    for t in domain:
                        if magma.op(magma.op(a, b), magma.op(t, c)) == \
                           magma.op(magma.op(a, t), magma.op(b, c)):
                            gens.add(t)
        sub = SubMagma(magma, _close_subloop(magma, gens) if gens else
                       frozenset({magma.identity}), "subloop")
        return PropertyReport(notion, True,
                              witness={"members": list(sub.member_labels()),
                                       "from_s_subloop": bool(subs)})

    raise ValueError(f"unknown Smarandache magma notion {notion!r}")
