import numpy as np

from . import caps, _backend
from .report import PropertyReport, Witness


class RingScan:
    """Code-space view of a finite magma ring with vectorized products."""

    def __init__(self, r, cap=None):
        if not r.domain.finite:
            raise ValueError("exhaustive search requires a finite domain")
        caps.require("ring scan", r.cardinality, caps.global_cap(cap))
        self.ring = r
        self.k = r.magma.order
        self.m = r.domain.modulus
        self.n = r.cardinality
        self.table = np.array(r.magma.table, dtype=np.int64)
        self.vecs = _backend.all_vectors(self.m, self.k)
        self.weights = self.m ** np.arange(self.k, dtype=np.int64)
        self._lmats = None
        self._rmats = None
        self._squares = None
        self._mt = None
        self._at = None

    def _left_mats(self):
        if self._lmats is None:
            mats = np.zeros((self.n, self.k, self.k), dtype=np.int64)
            for i in range(self.k):
                for j in range(self.k):
                    mats[:, self.table[i][j], j] += self.vecs[:, i]
            self._lmats = mats % self.m
        return self._lmats

    def _right_mats(self):
        if self._rmats is None:
            mats = np.zeros((self.n, self.k, self.k), dtype=np.int64)
            for j in range(self.k):
                for i in range(self.k):
                    mats[:, self.table[i][j], i] += self.vecs[:, j]
            self._rmats = mats % self.m
        return self._rmats

    def add(self, x, y):
        if self._at is not None:
            return int(self._at[x, y])
        return int(((self.vecs[x] + self.vecs[y]) % self.m) @ self.weights)

    def neg(self, x):
        return int(((-self.vecs[x]) % self.m) @ self.weights)

    def mul(self, x, y):
        if self._mt is not None:
            return int(self._mt[x, y])
        v = _backend.convolve(self.vecs[x], self.vecs[y], self.table, self.m)
        return int(np.asarray(v) @ self.weights)

    def mul_table(self):
        """Full code-space multiplication table, cached."""
        if self._mt is None:
            caps.require("multiplication table", self.n, caps.PAIR_SCAN_CAP)
            mt = np.empty((self.n, self.n), dtype=np.int64)
            for x in range(self.n):
                mt[x] = self.mul_row(x)
            self._mt = mt
        return self._mt

    def add_table(self):
        """Full code-space addition table, cached."""
        if self._at is None:
            caps.require("addition table", self.n, caps.PAIR_SCAN_CAP)
            at = np.empty((self.n, self.n), dtype=np.int64)
            for x in range(self.n):
                at[x] = ((self.vecs + self.vecs[x]) % self.m) @ self.weights
            self._at = at
        return self._at

    def mul_row(self, x):
        """Codes of x*y for every y."""
        prod = (self._left_mats()[x] @ self.vecs.T).T % self.m
        return prod @ self.weights

    def mul_col(self, y):
        """Codes of x*y for every x."""
        prod = (self._right_mats()[y] @ self.vecs.T).T % self.m
        return prod @ self.weights

    def squares(self):
        if self._squares is None:
            self._squares = np.asarray(_backend.square_codes(self.table, self.m))
        return self._squares

    def augmentations(self):
        return self.vecs.sum(axis=1) % self.m

    def one_code(self):
        return int(self.ring.one().encode())

    def elem(self, code):
        return self.ring.decode(int(code))

    def label(self, code):
        return self.elem(code).text()

    def power_seq(self, x):
        """Left-normed powers x, x², ... up to first repeat (codes)."""
        seen = []
        seen_set = set()
        cur = x
        while cur not in seen_set:
            seen.append(cur)
            seen_set.add(cur)
            cur = self.mul(cur, x)
        return seen

    def is_nilpotent(self, x):
        return 0 in self.power_seq(x) if x != 0 else True


def _span_of_pair(scan, a, b):
    """All ring combinations c1*a + c2*b (the additive span of the pair)."""
    out = set()
    for c1 in range(scan.m):
        sa = int((scan.vecs[a] * c1 % scan.m) @ scan.weights)
        for c2 in range(scan.m):
            sb = int((scan.vecs[b] * c2 % scan.m) @ scan.weights)
            out.add(scan.add(sa, sb))
    return out


def _wit(scan, subject, partners=None, relations=None):
    return Witness(scan.label(subject),
                   {k: scan.label(v) for k, v in (partners or {}).items()},
                   relations)


def find_special(r, class_id, params=None, cap=None):
    """All elements of a named special class, in code order, with witnesses."""
    params = dict(params or {})
    scan = RingScan(r, cap)
    n = scan.n
    out = []

    if class_id == "idempotent":
        sq = scan.squares()
        for x in range(n):
            if sq[x] == x:
                out.append(_wit(scan, x, relations=["x*x = x"]))
        return out

    if class_id in ("unit", "left_unit", "right_unit"):
        if not r.has_one:
            raise ValueError("units require a ring with identity")
        one = scan.one_code()
        for x in range(n):
            if class_id == "left_unit":
                # x is a left unit: x*y = 1 for some y
                ys = np.nonzero(scan.mul_row(x) == one)[0]
                if ys.size:
                    out.append(_wit(scan, x, {"y": int(ys[0])}, ["x*y = 1"]))
            elif class_id == "right_unit":
                # x is a right unit: y*x = 1 for some y
                ys = np.nonzero(scan.mul_col(x) == one)[0]
                if ys.size:
                    out.append(_wit(scan, x, {"y": int(ys[0])}, ["y*x = 1"]))
            else:
                row = scan.mul_row(x)
                for y in map(int, np.nonzero(row == one)[0]):
                    if scan.mul(y, x) == one:
                        out.append(_wit(scan, x, {"y": y},
                                        ["x*y = 1", "y*x = 1"]))
                        break
        return out

    if class_id == "zero_divisor":
        for x in range(1, n):
            row = scan.mul_row(x)
            ys = np.nonzero(row == 0)[0]
            ys = ys[ys != 0]
            if ys.size:
                out.append(_wit(scan, x, {"b": int(ys[0])}, ["x*b = 0"]))
                continue
            col = scan.mul_col(x)
            zs = np.nonzero(col == 0)[0]
            zs = zs[zs != 0]
            if zs.size:
                out.append(_wit(scan, x, {"b": int(zs[0])}, ["b*x = 0"]))
        return out

    if class_id == "nilpotent":
        for x in range(1, n):
            seq = scan.power_seq(x)
            if 0 in seq:
                out.append(_wit(scan, x,
                                relations=[f"x^{seq.index(0) + 1} = 0 (left-normed)"]))
        return out

    if class_id == "semi_nilpotent":
        for x in range(n):
            seq = scan.power_seq(x)
            for idx in range(1, len(seq)):
                d = (scan.elem(seq[idx]) - scan.elem(x)).encode()
                if scan.is_nilpotent(int(d)):
                    out.append(_wit(scan, x, relations=[
                        f"x^{idx + 1} - x is nilpotent"]))
                    break
        return out

    if class_id in ("regular", "right_regular", "left_regular"):
        # right regular: x(yx) = x for some y; left regular: (xy)x = x.
        # bare "regular" follows the right-hand bracketing unless overridden.
        bracket = params.get("bracket", "x(yx)")
        if class_id == "left_regular":
            bracket = "(xy)x"
        elif class_id == "right_regular":
            bracket = "x(yx)"
        for x in range(n):
            col = scan.mul_col(x)       # y -> y*x
            row = scan.mul_row(x)       # y -> x*y
            for y in range(n):
                if bracket == "x(yx)":
                    val = scan.mul(x, int(col[y]))
                    rel = "x*(y*x) = x"
                else:
                    val = scan.mul(int(row[y]), x)
                    rel = "(x*y)*x = x"
                if val == x:
                    out.append(_wit(scan, x, {"y": y}, [rel]))
                    break
        return out

    if class_id in ("quasi_regular", "right_qr", "left_qr"):
        rqr, lqr = _backend.scan_circle_zero(scan.table, scan.m)
        rqr = np.asarray(rqr)
        lqr = np.asarray(lqr)
        for x in range(n):
            if class_id == "right_qr" and rqr[x] >= 0:
                out.append(_wit(scan, x, {"y": int(rqr[x])}, ["x o y = 0"]))
            elif class_id == "left_qr" and lqr[x] >= 0:
                out.append(_wit(scan, x, {"y": int(lqr[x])}, ["y o x = 0"]))
            elif class_id == "quasi_regular" and rqr[x] >= 0 and lqr[x] >= 0:
                out.append(_wit(scan, x, {"y_right": int(rqr[x]),
                                          "y_left": int(lqr[x])},
                                ["x o y_right = 0", "y_left o x = 0"]))
        return out

    if class_id == "semi_idempotent":
        from .substruct import generate_ideal
        whole = frozenset(range(n))
        for x in range(1, n):
            beta = (scan.elem(scan.squares()[x]) - scan.elem(x)).encode()
            ideal = generate_ideal(r, [scan.elem(int(beta))], "two").codes
            if x not in ideal or ideal == whole:
                out.append(_wit(scan, x, relations=[
                    "x not in ideal(x^2 - x)" if x not in ideal
                    else "ideal(x^2 - x) = R"]))
        return out

    if class_id == "normal_commuting":
        for x in range(n):
            if set(map(int, scan.mul_row(x))) == set(map(int, scan.mul_col(x))):
                out.append(_wit(scan, x, relations=["x*R = R*x"]))
        return out

    if class_id == "normal_orbit":
        for x in range(n):
            if set(map(int, scan.mul_col(x))) == set(range(n)):
                out.append(_wit(scan, x, relations=["R*x = R"]))
        return out

    if class_id == "pseudo_commutative_pair":
        ident = scan.one_code() if r.has_one else None
        pairs = []
        for x in range(n):
            for y in range(x + 1, n):
                if ident is not None and ident in (x, y):
                    continue
                if scan.mul(x, y) != scan.mul(y, x):
                    continue
                ok = True
                for a in range(n):
                    xa = scan.mul(x, a)
                    ax = scan.mul(a, x)
                    ya = scan.mul(y, a)
                    ay = scan.mul(a, y)
                    cands = {scan.mul(xa, y), scan.mul(x, ay)}
                    targets = {scan.mul(y, ax), scan.mul(ya, x),
                               scan.mul(y, ax)}
                    if not cands & targets:
                        ok = False
                        break
                if ok:
                    pairs.append(Witness(scan.label(x), {"y": scan.label(y)},
                                         ["pair is pseudo commutative"]))
        return pairs

    raise ValueError(f"unknown element class {class_id!r}")


def is_smarandache_element(r, x, s_class, params=None, cap=None):
    """Decide an S-refined element predicate, with full partner witness."""
    params = dict(params or {})
    scan = RingScan(r, cap)
    n = scan.n
    if hasattr(x, "encode"):
        x = x.encode()
    x = int(x)

    def report(holds, partners=None, relations=None, detail=None):
        wit = None
        if holds:
            wit = _wit(scan, x, partners, relations)
        return PropertyReport(s_class, holds, witness=wit, detail=detail,
                              params={"x": scan.label(x)})

    if s_class == "s_unit":
        if not r.has_one:
            raise ValueError("s_unit requires a ring with identity")
        one = scan.one_code()
        if x == one:
            return report(False, detail="x = 1 excluded")
        row = scan.mul_row(x)
        for y in map(int, np.nonzero(row == one)[0]):
            excl = {x, y, one}
            for a in range(n):
                if a in excl:
                    continue
                if scan.mul(x, a) != y and scan.mul(a, x) != y:
                    continue
                arow = scan.mul_row(a)
                for b in map(int, np.nonzero(arow == one)[0]):
                    if b in excl:
                        continue
                    if scan.mul(y, b) == x or scan.mul(b, y) == x:
                        return report(True, {"y": y, "a": a, "b": b},
                                      ["x*y = 1", "a relates x to y",
                                       "b relates y to x", "a*b = 1"])
        return report(False, detail="no (y, a, b) satisfies the clauses")

    if s_class == "s_idempotent":
        if scan.squares()[x] != x:
            return report(False, detail="x*x != x")
        sq = scan.squares()
        for b in range(n):
            if b == x or sq[b] != x:
                continue
            if scan.mul(x, b) == b or scan.mul(b, x) == b:
                return report(True, {"b": b},
                              ["b*b = x", "x*b = b or b*x = b"])
        return report(False, detail="no partner b with b*b = x")

    if s_class == "s_zero_divisor":
        if x == 0:
            return report(False, detail="x = 0")
        row = scan.mul_row(x)
        bs = [int(b) for b in np.nonzero(row == 0)[0] if b != 0]
        for b in bs:
            # partners must be independent witnesses: combinations of the
            # defining pair (the additive span of {x, b}) are excluded
            excl = _span_of_pair(scan, x, b)
            xa = [int(v) for v in np.nonzero(scan.mul_row(x) == 0)[0]]
            ax = [int(v) for v in np.nonzero(scan.mul_col(x) == 0)[0]]
            b_ann = set(int(v) for v in np.nonzero(scan.mul_row(b) == 0)[0]) | \
                set(int(v) for v in np.nonzero(scan.mul_col(b) == 0)[0])
            x_ann = set(xa) | set(ax)
            for xx in sorted(x_ann - excl):
                for yy in sorted(b_ann - excl):
                    if xx == yy:
                        continue
                    if scan.mul(xx, yy) != 0 or scan.mul(yy, xx) != 0:
                        return report(True, {"b": b, "xp": xx, "yp": yy},
                                      ["x*b = 0", "x-side annihilator xp",
                                       "b-side annihilator yp",
                                       "xp*yp != 0 or yp*xp != 0"])
        return report(False, detail="no annihilator pair with nonzero product")

    if s_class == "s_pseudo_zero_divisor":
        row = scan.mul_row(x)
        ys = [int(y) for y in np.nonzero(row == 0)[0] if y != 0]
        col = scan.mul_col(x)
        ys += [int(y) for y in np.nonzero(col == 0)[0]
               if y != 0 and y not in ys]
        sq = scan.squares()
        for y in ys:
            for a in range(n):
                if a in (0, x, y) or sq[a] != 0:
                    continue
                if scan.mul(a, y) == 0 or scan.mul(a, x) == 0:
                    return report(True, {"y": y, "a": a},
                                  ["x*y = 0", "a*y = 0 or a*x = 0", "a*a = 0"])
        return report(False, detail="no square-zero partner a")

    if s_class == "s_weak_zero_divisor":
        row = scan.mul_row(x)
        for y in [int(v) for v in np.nonzero(row == 0)[0] if v != 0]:
            excl = {0, x, y}
            x_ann = set(int(v) for v in np.nonzero(scan.mul_row(x) == 0)[0]) | \
                set(int(v) for v in np.nonzero(scan.mul_col(x) == 0)[0])
            y_ann = set(int(v) for v in np.nonzero(scan.mul_row(y) == 0)[0]) | \
                set(int(v) for v in np.nonzero(scan.mul_col(y) == 0)[0])
            for a in sorted(x_ann - excl):
                for b in sorted(y_ann - excl):
                    if scan.mul(a, b) == 0 or scan.mul(b, a) == 0:
                        return report(True, {"y": y, "a": a, "b": b},
                                      ["x*y = 0", "a annihilates x",
                                       "b annihilates y", "a*b = 0 or b*a = 0"])
        return report(False)

    if s_class == "s_quasi_regular":
        ys = []
        xe = scan.elem(x)
        for y in range(n):
            if (xe.circle(scan.elem(y))).is_zero():
                ys.append(y)
        for i, y in enumerate(ys):
            for z in ys[i + 1:]:
                ye, ze = scan.elem(y), scan.elem(z)
                if not ye.circle(ze).is_zero() and not ze.circle(ye).is_zero():
                    return report(True, {"y": y, "z": z},
                                  ["x o y = 0", "x o z = 0",
                                   "y o z != 0", "z o y != 0"])
        return report(False, detail="no two circle-inverses with y o z != 0")

    if s_class == "s_semi_idempotent":
        from .substruct import generate_ideal, sna_check
        if x == 0:
            return report(False, detail="x = 0")
        beta = (scan.elem(int(scan.squares()[x])) - scan.elem(x)).encode()
        ideal = generate_ideal(r, [scan.elem(int(beta))], "two")
        sna = sna_check(r, ideal, "sna_subring")
        if sna.holds is not True:
            return report(False,
                          detail="ideal(x^2 - x) carries no associative subring")
        if x not in ideal.codes:
            return report(True, relations=["x not in S-ideal(x^2 - x)"])
        return report(False, detail="x lies in the S-ideal(x^2 - x)")

    if s_class == "s_nilpotent":
        if x == 0:
            return report(False, detail="x = 0")
        seq = scan.power_seq(x)
        if 0 not in seq:
            return report(False, detail="x is not nilpotent (left-normed)")
        powers = seq[:seq.index(0)]
        for y in range(1, n):
            if y == x or scan.is_nilpotent(y):
                continue
            for r_i, p in enumerate(powers, start=1):
                if scan.mul(p, y) == 0:
                    return report(True, {"y": y},
                                  [f"x^{r_i} * y = 0", "y not nilpotent"])
                if scan.mul(y, p) == 0:
                    return report(True, {"y": y},
                                  [f"y * x^{r_i} = 0", "y not nilpotent"])
        return report(False, detail="no non-nilpotent annihilating partner")

    if s_class == "s_semi_nilpotent":
        seq = scan.power_seq(x)
        for idx in range(1, len(seq)):
            d = int((scan.elem(seq[idx]) - scan.elem(x)).encode())
            sub = is_smarandache_element(r, d, "s_nilpotent", cap=cap)
            if sub.holds is True:
                return report(True, {"difference": d},
                              [f"x^{idx + 1} - x is S-nilpotent"])
        return report(False)

    if s_class == "s_normal_element":
        from .substruct import enumerate_s_subrings
        subset = params.get("subring")
        strong = params.get("strong", False)
        if subset is not None:
            cands = [frozenset(int(c) for c in subset)]
        else:
            cands = [s.codes for s in enumerate_s_subrings(r)]
        if not cands:
            return report(False, detail="no S-subrings")
        hits = []
        for a_set in cands:
            left = {scan.mul(x, a) for a in a_set}
            right = {scan.mul(a, x) for a in a_set}
            if left == right:
                hits.append(a_set)
            elif strong:
                return report(False, detail="xA != Ax for some S-subring")
        if strong:
            return report(True, relations=["xA = Ax for every S-subring"])
        if hits:
            return report(True, relations=[
                f"xA = Ax for an S-subring of size {len(hits[0])}"])
        return report(False)

    raise ValueError(f"unknown Smarandache element class {s_class!r}")


def quasi_regular_scan(r, cap=None):
    """Exhaustive circle scan: r.q.r/l.q.r/q.r code sets, W and the
    'every element of W is right quasi regular' criterion."""
    scan = RingScan(r, cap)
    rqr, lqr = _backend.scan_circle_zero(scan.table, scan.m)
    rqr = np.asarray(rqr)
    lqr = np.asarray(lqr)
    rqr_set = frozenset(int(i) for i in np.nonzero(rqr >= 0)[0])
    lqr_set = frozenset(int(i) for i in np.nonzero(lqr >= 0)[0])
    aug = scan.augmentations()
    w = frozenset(int(i) for i in np.nonzero(aug == 0)[0])
    return {
        "rqr_set": rqr_set,
        "lqr_set": lqr_set,
        "qr_set": rqr_set & lqr_set,
        "W": w,
        "all_W_rqr": w <= rqr_set,
        "rqr_partner": rqr,
        "lqr_partner": lqr,
    }


def jacobson_like(r, variant="literal_set", cap=None):
    """J(R)-style sets built from right-quasi-regularity of aR."""
    scan = RingScan(r, cap)
    rqr, _ = _backend.scan_circle_zero(scan.table, scan.m)
    rqr_ok = np.asarray(rqr) >= 0
    out = set()
    if variant == "literal_set":
        for a in range(scan.n):
            if all(rqr_ok[int(c)] for c in scan.mul_row(a)):
                out.add(a)
        return frozenset(out)
    if variant == "generated_right_ideal":
        from .substruct import generate_ideal
        for a in range(scan.n):
            ideal = generate_ideal(r, [scan.elem(a)], "right")
            if all(rqr_ok[c] for c in ideal.codes):
                out.add(a)
        return frozenset(out)
    raise ValueError(f"unknown variant {variant!r}")
