#!/usr/bin/env python3
"""Reference values computed from first principles, frozen into frozen.json.

Nothing here shares code with the C++ library: fields are built from
polynomial arithmetic, codes are explicit word lists, kernels are found by
testing every translation, and pi permutations are recovered by matching
coordinates of Phi(e f) - Phi(e) against Phi(f).

Usage: oracle.py [out.json]
"""

import itertools
import json
import sys

import numpy as np


class GF:
    def __init__(self, p, m, poly):
        self.p, self.m, self.q = p, m, p**m
        self.poly = poly
        q = self.q
        self.add = np.zeros((q, q), dtype=np.int64)
        self.mul = np.zeros((q, q), dtype=np.int64)
        digits = [self.to_digits(a) for a in range(q)]
        for a in range(q):
            for b in range(q):
                self.add[a, b] = self.from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])])
                self.mul[a, b] = self.from_digits(self.polymul(digits[a], digits[b]))
        self.neg = np.array([self.from_digits([(-x) % p for x in digits[a]]) for a in range(q)])
        self.sub = self.add[:, self.neg]

    def to_digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def from_digits(self, d):
        return sum(c * self.p**i for i, c in enumerate(d))

    def polymul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus, highest degree first
        for d in range(2 * m - 1, m - 1, -1):
            c = prod[d]
            if c:
                for i in range(m + 1):
                    prod[d - m + i] = (prod[d - m + i] - c * self.poly[i]) % p
        return prod[:m]

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = int(self.mul[r, a])
        return r


def irreducible(p, poly):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            div = list(coeffs) + [1]
            rem = list(poly)
            for k in range(m, d - 1, -1):
                c = rem[k]
                if c:
                    for i in range(d + 1):
                        rem[k - d + i] = (rem[k - d + i] - c * div[i]) % p
            if not any(rem[:d]):
                return False
    return True


class Cocycle:
    """psi over a group given by its Cayley table, values in F."""

    def __init__(self, F, gmul, psi):
        self.F = F
        self.gmul = np.asarray(gmul, dtype=np.int64)
        self.psi = np.asarray(psi, dtype=np.int64)
        self.v = len(self.gmul)
        self.ginv = [int(np.where(self.gmul[g] == 0)[0][0]) for g in range(self.v)]


def additive(F, order):
    v = len(order)
    pos = {e: i for i, e in enumerate(order)}
    return [[pos[int(F.add[order[i], order[j]])] for j in range(v)] for i in range(v)]


def sylvester(F, order=None):
    order = order or list(range(F.q))
    gmul = additive(F, order)
    psi = [[int(F.mul[a, b]) for b in order] for a in order]
    return Cocycle(F, gmul, psi)


def primitive_order(F):
    x = F.p  # the class of x
    return [0] + [F.power(x, i) for i in range(F.q - 1)]


def trivial(F, k):
    v = F.p**k
    vecs = list(itertools.product(range(F.p), repeat=k))
    pos = {t: i for i, t in enumerate(vecs)}
    gmul = [[pos[tuple((a + b) % F.p for a, b in zip(s, t))] for t in vecs] for s in vecs]
    return Cocycle(F, gmul, np.zeros((v, v), dtype=np.int64))


def gen_sylvester(F, k):
    vecs = list(itertools.product(range(F.q), repeat=k))
    pos = {t: i for i, t in enumerate(vecs)}
    gmul = [[pos[tuple(int(F.add[a, b]) for a, b in zip(s, t))] for t in vecs] for s in vecs]
    psi = []
    for s in vecs:
        row = []
        for t in vecs:
            acc = 0
            for a, b in zip(s, t):
                acc = int(F.add[acc, F.mul[a, b]])
            row.append(acc)
        psi.append(row)
    return Cocycle(F, gmul, psi)


def tensor(a, b):
    F = a.F
    va, vb = a.v, b.v
    gmul = np.zeros((va * vb, va * vb), dtype=np.int64)
    psi = np.zeros((va * vb, va * vb), dtype=np.int64)
    for g in range(va):
        for g2 in range(vb):
            for h in range(va):
                for h2 in range(vb):
                    gmul[g * vb + g2, h * vb + h2] = a.gmul[g, h] * vb + b.gmul[g2, h2]
                    psi[g * vb + g2, h * vb + h2] = F.add[a.psi[g, h], b.psi[g2, h2]]
    return Cocycle(F, gmul, psi)


def planar(F, b):
    e = (3**b + 1) // 2
    phi = [F.power(g, e) for g in range(F.q)]
    gmul = F.add.tolist()
    psi = [[int(F.sub[F.sub[phi[F.add[g, h]], phi[g]], phi[h]]) for h in range(F.q)] for g in range(F.q)]
    return Cocycle(F, gmul, psi)


def orthogonal(c):
    lam = c.v // c.F.q
    for g in range(1, c.v):
        counts = np.bincount(c.psi[g], minlength=c.F.q)
        if any(counts != lam):
            return False
    return True


def is_gh(c):
    F, v = c.F, c.v
    lam = v // F.q
    for i in range(v):
        for j in range(i + 1, v):
            d = F.sub[c.psi[i], c.psi[j]]
            if any(np.bincount(d, minlength=F.q) != lam):
                return False
    return True


class Extension:
    """E_psi on U x G, element (u, g) stored as g * q + u."""

    def __init__(self, c):
        self.c = c
        self.q = c.F.q
        self.n = c.F.q * c.v

    def mul(self, a, b):
        c, q = self.c, self.q
        ga, ua, gb, ub = a // q, a % q, b // q, b % q
        u = c.F.add[c.F.add[ua, ub], c.psi[ga, gb]]
        return int(c.gmul[ga, gb]) * q + int(u)

    def inv(self, a):
        c, q = self.c, self.q
        g, u = a // q, a % q
        gi = c.ginv[g]
        return gi * q + int(c.F.neg[c.F.add[u, c.psi[g, gi]]])


def rds(c):
    E = Extension(c)
    q, v = c.F.q, c.v
    T = [g * q for g in range(v)]
    hits = np.zeros(E.n, dtype=np.int64)
    for a in T:
        for b in T:
            if a != b:
                hits[E.mul(a, E.inv(b))] += 1
    central = set(range(q))
    lam = v // q
    for x in range(1, E.n):
        if x in central:
            if hits[x]:
                return False
        elif hits[x] != lam:
            return False
    return True


def invariants(E, p):
    n = E.n
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = E.mul(y, x)
            k += 1
        orders.append(k)
    out = []
    k = 1
    counts = []
    while p**(k - 1) <= n:
        nk = sum(1 for o in orders if p**k % o == 0)
        counts.append(round(np.log(nk) / np.log(p)))
        if nk == n:
            break
        k += 1
    # counts[k-1] = log_p |{x : x^{p^k} = 1}|; factors of order >= p^k: counts[k-1] - counts[k-2]
    ge = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
    for k in range(len(ge), 0, -1):
        exact = ge[k - 1] - (ge[k] if k < len(ge) else 0)
        out += [p**k] * exact
    return out


class ExplicitCode:
    def __init__(self, c):
        F, v, q = c.F, c.v, c.F.q
        self.F = F
        words = []
        for g in range(v):
            for a in range(q):
                words.append(F.add[c.psi[g], a])
        self.words = np.array(words, dtype=np.int64)
        rng = np.random.default_rng(12345)
        self.key = rng.integers(1, 2**31, size=v, dtype=np.int64)
        self.hashes = self.hash(self.words)
        self.hashset = set(self.hashes.tolist())
        assert len(self.hashset) == len(words)

    def hash(self, w):
        return (w * self.key).sum(axis=-1) % ((1 << 61) - 1)

    def translation_ok(self, x):
        shifted = self.F.add[self.words, x[None, :]]
        return bool(np.isin(self.hash(shifted), self.hashes).all())

    def rank(self):
        F = self.F
        q = F.q
        inv = [0] * q
        for a in range(1, q):
            inv[a] = int(np.where(F.mul[a] == 1)[0][0])
        basis = []  # (pivot, row) with row[pivot] == 1
        for w in self.words:
            r = w.copy()
            for piv, b in basis:
                if r[piv]:
                    r = F.sub[r, F.mul[r[piv], b]]
            nz = np.nonzero(r)[0]
            if len(nz):
                piv = int(nz[0])
                basis.append((piv, F.mul[inv[r[piv]], r]))
        return len(basis)

    def kernels(self):
        F = self.F
        kp = [w for w in self.words if self.translation_ok(w)]
        kp_set = set(self.hash(np.array(kp)).tolist())
        k = [w for w in kp if all(self.hash(F.mul[a, w]) in kp_set for a in range(F.q))]
        p_dim = round(np.log(len(kp)) / np.log(F.p))
        q_dim = round(np.log(len(k)) / np.log(F.q))
        return q_dim, p_dim

    def min_distance(self):
        best = self.words.shape[1]
        for i in range(len(self.words)):
            d = (self.words[i + 1:] != self.words[i]).sum(axis=1)
            if len(d):
                best = min(best, int(d.min()))
        return best


def phi_word(c, k, g):
    F = c.F
    gi = c.ginv[g]
    scal = F.neg[F.add[k, c.psi[g, gi]]]
    return F.add[c.psi[gi], scal]


def pi_listing(c):
    """pi attached to Phi(0, g), in 1-based cycle form, for every g."""
    E = Extension(c)
    q, v = c.F.q, c.v
    out = []
    points = [(x % q, x // q) for x in range(E.n)]
    words = {x: phi_word(c, *points[x]) for x in range(E.n)}
    for g in range(v):
        e = g * q
        x = words[e]
        diffs = np.array([c.F.sub[words[E.mul(e, f)], x] for f in range(E.n)])
        ys = np.array([words[f] for f in range(E.n)])
        perm = [None] * v
        for l in range(v):
            matches = [j for j in range(v) if (diffs[:, j] == ys[:, l]).all()]
            assert len(matches) == 1
            perm[l] = matches[0]
        out.append(cycle_form(perm))
    return out


def cycle_form(perm):
    seen = [False] * len(perm)
    s = ""
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = perm[j]
        s += "(" + ",".join(map(str, cyc)) + ")"
    return s or "()"


def profile(c):
    E = Extension(c)
    q, v = c.F.q, c.v
    T = set(g * q for g in range(v))
    hist = {}
    for e in range(E.n):
        n = sum(1 for t in T if E.mul(e, t) in T)
        hist[str(n)] = hist.get(str(n), 0) + 1
    return dict(sorted(hist.items(), key=lambda kv: int(kv[0])))


def describe(name, c, pi=False):
    rec = {"q": c.F.q, "v": c.v}
    rec["orthogonal"] = orthogonal(c)
    rec["gh"] = is_gh(c)
    rec["rds"] = rds(c)
    if rec["orthogonal"]:
        code = ExplicitCode(c)
        rec["rank"] = code.rank()
        rec["kernel"], rec["p_kernel"] = code.kernels()
        if c.F.q * c.v <= 729:
            rec["min_distance"] = code.min_distance()
        rec["profile"] = profile(c)
        rec["extension_invariants"] = invariants(Extension(c), c.F.p)
        if pi:
            rec["pi_listing"] = pi_listing(c)
    print(name, rec if not pi else {k: v for k, v in rec.items() if k != "pi_listing"}, file=sys.stderr)
    return rec


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "frozen.json"
    f3 = GF(3, 1, [0, 1])
    f4 = GF(2, 2, [1, 1, 1])
    f8 = GF(2, 3, [1, 1, 0, 1])
    f81 = GF(3, 4, [2, 1, 0, 0, 1])

    facts = {
        "gf81_x_times_x3": int(f81.mul[3, 27]),
        "gf3_x4_plus_1_irreducible": irreducible(3, [1, 0, 0, 0, 1]),
        "gf81_poly_irreducible": irreducible(3, [2, 1, 0, 0, 1]),
        "gf81_all_units_order_divides_80": all(f81.power(g, 80) == 1 for g in range(1, 81)),
        "gf3_mul_table": f3.mul.tolist(),
    }

    s3 = sylvester(f3)
    s2 = tensor(s3, s3)
    t3 = trivial(f3, 1)
    ex41 = Cocycle(f4, [[a ^ b for b in range(4)] for a in range(4)],
                   [[0, 0, 0, 0], [0, 1, 3, 2], [0, 3, 2, 1], [0, 2, 1, 3]])
    cases = {}
    cases["trivial_z3"] = describe("trivial_z3", t3)
    cases["trivial_z3_2"] = describe("trivial_z3_2", trivial(f3, 2))
    cases["s3"] = describe("s3", s3, pi=True)
    cases["s4"] = describe("s4", sylvester(f4), pi=True)
    cases["s8"] = describe("s8", sylvester(f8), pi=True)
    cases["s8_primitive"] = describe("s8_primitive", sylvester(f8, primitive_order(f8)), pi=True)
    cases["ex41"] = describe("ex41", ex41, pi=True)
    cases["s2"] = describe("s2", s2, pi=True)
    cases["gen_sylvester_3_1_2"] = describe("gen_sylvester_3_1_2", gen_sylvester(f3, 2), pi=True)
    cases["gen_sylvester_2_2_2"] = describe("gen_sylvester_2_2_2", gen_sylvester(f4, 2))
    cases["s3_x_s2"] = describe("s3_x_s2", tensor(s3, s2))
    cases["s2_x_s3"] = describe("s2_x_s3", tensor(s2, s3))
    cases["s2_x_s2"] = describe("s2_x_s2", tensor(s2, s2))
    cases["s3_x_trivial"] = describe("s3_x_trivial", tensor(s3, t3))
    cases["dphi_4_3"] = describe("dphi_4_3", planar(f81, 3))
    cases["s81"] = describe("s81", sylvester(f81))

    with open(out_path, "w") as fh:
        json.dump({"facts": facts, "cases": cases}, fh, indent=1, sort_keys=False)
        fh.write("\n")


if __name__ == "__main__":
    main()
