"""Independent reference values for the test suite.

Rebuilds every suite complex from its facet list and computes invariants with
sympy (exact ranks), numpy (spectra), networkx (dual graphs) and scipy (LPs),
using direct formulas rather than the library's algorithms. Output is written
to oracle_values.json next to this file and is frozen in the repository.

Run: python3 tests/oracles/oracle.py
"""

import itertools
import json
import math
from fractions import Fraction
from pathlib import Path

import networkx as nx
import numpy as np
import sympy
from scipy.optimize import linprog


# ---- complexes -------------------------------------------------------------

def closure(facets):
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for r in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, r))
    dim = max(len(s) for s in faces) - 1
    return [sorted(s for s in faces if len(s) == d + 1) for d in range(dim + 1)]


def boundary_simplex(n):
    return [tuple(v for v in range(n + 1) if v != s) for s in range(n + 1)]


def octahedron():
    return [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]


def icosahedron():
    f = []
    for i in range(5):
        u, u1, l, l1 = 1 + i, 1 + (i + 1) % 5, 6 + i, 6 + (i + 1) % 5
        f += [(0, u, u1), (11, l, l1), (u, u1, l), (u1, l, l1)]
    return f


def torus7():
    return [t for i in range(7) for t in ((i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7))]


RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]


def cone(facets):
    apex = max(v for f in facets for v in f) + 1
    return [tuple(f) + (apex,) for f in facets]


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def union(a, b):
    off = max(v for f in a for v in f) + 1
    return list(a) + [tuple(v + off for v in f) for f in b]


def skeleton(facets, k):
    sk = closure(facets)
    return [s for d in range(min(k, len(sk) - 1) + 1) for s in sk[d]]


SUITE = {
    "boundary_simplex:3": boundary_simplex(3),
    "boundary_simplex:4": boundary_simplex(4),
    "octahedron": octahedron(),
    "icosahedron": icosahedron(),
    "torus7": torus7(),
    "rp2": RP2,
    "triangle": [(0, 1, 2)],
    "cycle:5": cycle(5),
    "cone(boundary_simplex:2)": cone(boundary_simplex(2)),
    "cone(cycle:4)": cone(cycle(4)),
    "skeleton(boundary_simplex:3,1)": skeleton(boundary_simplex(3), 1),
    "skeleton(octahedron,1)": skeleton(octahedron(), 1),
    "union(boundary_simplex:2,boundary_simplex:3)": union(boundary_simplex(2), boundary_simplex(3)),
}


# ---- matrices --------------------------------------------------------------

def boundary(sk, d):
    """B_d: rows Sigma_{d-1}, columns Sigma_d, entry (-1)^j for the face missing position j."""
    rows = {s: i for i, s in enumerate(sk[d - 1])}
    b = np.zeros((len(sk[d - 1]), len(sk[d])), dtype=np.int64)
    for c, s in enumerate(sk[d]):
        for j in range(len(s)):
            b[rows[s[:j] + s[j + 1:]], c] = (-1) ** j
    return b


def cob(sk, d):
    """delta_d = B_{d+1}^T (zero rows at the top dimension)."""
    if d + 1 >= len(sk):
        return np.zeros((0, len(sk[d])), dtype=np.int64)
    return boundary(sk, d + 1).T


def reduced_excluded(sk, d):
    """Columns spanning Im delta_{d-1}; the constants in degree 0."""
    if d == 0:
        return np.ones((len(sk[0]), 1), dtype=np.int64)
    return boundary(sk, d).T


def rank_q(m):
    if m.size == 0:
        return 0
    return sympy.Matrix(m.tolist()).rank()


def rank_gf2(m):
    a = (np.array(m) % 2).astype(np.uint8)
    if a.size == 0:
        return 0
    a = a.copy()
    r = 0
    for c in range(a.shape[1]):
        piv = next((i for i in range(r, a.shape[0]) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def betti(sk, rank):
    ranks = [0] + [rank(boundary(sk, d)) for d in range(1, len(sk))] + [0]
    return [len(sk[d]) - ranks[d] - ranks[d + 1] for d in range(len(sk))]


def up_degrees(sk, d):
    if d + 1 >= len(sk):
        return np.zeros(len(sk[d]), dtype=np.int64)
    return np.abs(boundary(sk, d + 1)).sum(axis=1)


def normalized_up(sk, d):
    b = boundary(sk, d + 1).astype(float)
    deg = up_degrees(sk, d).astype(float)
    s = 1 / np.sqrt(deg)
    return (s[:, None] * (b @ b.T)) * s[None, :]


# ---- signed Cheeger constants from the definition ---------------------------

def up_pairs(sk, d):
    """(tau, tau', s) for every pair of d-faces of a (d+1)-simplex, s = sgn*sgn."""
    idx = {s: i for i, s in enumerate(sk[d])}
    out = []
    for sig in sk[d + 1]:
        faces = [(idx[sig[:j] + sig[j + 1:]], (-1) ** j) for j in range(len(sig))]
        for (a, sa), (b, sb) in itertools.combinations(faces, 2):
            out.append((a, b, sa * sb))
    return out


def beta(pairs, deg, a, ap):
    u = a | ap
    vol = sum(deg[i] for i in u)
    e = 0
    for x, y, s in pairs:
        inside = (x in u) + (y in u)
        if inside == 1:
            e += 1
        elif inside == 2:
            same = (x in a and y in a) or (x in ap and y in ap)
            if (same and s == -1) or (not same and s == 1):
                e += 2
    return Fraction(e, int(vol))


def h_k_sigma(sk, d, k):
    n = len(sk[d])
    deg = up_degrees(sk, d)
    pairs = up_pairs(sk, d)
    best = None
    # label 0 = unused, 2i-1 / 2i = the two sides of pair i
    for lab in itertools.product(range(2 * k + 1), repeat=n):
        sets = [set() for _ in range(2 * k + 1)]
        for v, l in enumerate(lab):
            sets[l].add(v)
        if any(not (sets[2 * i + 1] | sets[2 * i + 2]) for i in range(k)):
            continue
        val = max(beta(pairs, deg, sets[2 * i + 1], sets[2 * i + 2]) for i in range(k))
        if best is None or val < best:
            best = val
    return best


# ---- gap-0 constant: multiset ratios with LP fillings ------------------------

def filling(delta, y, w):
    n = delta.shape[1]
    # min sum w (p + q) with delta (p - q) = y
    res = linprog(np.concatenate([w, w]), A_eq=np.hstack([delta, -delta]), b_eq=y,
                  bounds=[(0, None)] * (2 * n), method="highs")
    assert res.status == 0
    return res.fun


def h_sigma_grid(sk, d, m):
    delta = cob(sk, d).astype(float)
    w = up_degrees(sk, d).astype(float)
    n = len(sk[d])
    best = None
    seen = {}
    for x in itertools.product(range(-m, m + 1), repeat=n):
        y = delta @ np.array(x, dtype=float)
        if not np.any(np.abs(y) > 0.5):
            continue
        g = math.gcd(*[int(round(v)) for v in y])
        key = tuple(int(round(v)) // g for v in y)
        first = next(v for v in key if v)
        if first < 0:
            key = tuple(-v for v in key)
        if key not in seen:
            ky = np.array(key, dtype=float)
            seen[key] = Fraction(np.abs(ky).sum() / filling(delta, ky, w)).limit_denominator(1000)
        if best is None or seen[key] < best:
            best = seen[key]
    return best


def z2_constant(sk, d):
    n = len(sk[d])
    delta = cob(sk, d) % 2
    g = reduced_excluded(sk, d) % 2
    im = set()
    for c in itertools.product((0, 1), repeat=g.shape[1]):
        im.add(tuple((g @ np.array(c)) % 2))
    best = None
    for bits in itertools.product((0, 1), repeat=n):
        phi = np.array(bits)
        coset = [tuple((phi + np.array(v)) % 2) for v in im]
        if tuple(phi) in im:
            continue
        wmin = min(sum(c) for c in coset)
        num = int(((delta @ phi) % 2).sum())
        val = Fraction(num, wmin)
        if best is None or val < best:
            best = val
    return best


def graph_cheeger(adj):
    n = len(adj)
    total = sum(len(a) for a in adj)
    best = None
    for mask in range(1, 1 << n):
        s = {v for v in range(n) if mask >> v & 1}
        vol = sum(len(adj[v]) for v in s)
        if vol == 0 or 2 * vol > total:
            continue
        cut = sum(1 for v in s for u in adj[v] if u not in s)
        val = Fraction(cut, vol)
        if best is None or val < best:
            best = val
    return best


def dual_graph(sk):
    top = sk[-1]
    g = nx.Graph()
    g.add_nodes_from(range(len(top)))
    for i, j in itertools.combinations(range(len(top)), 2):
        if len(set(top[i]) & set(top[j])) == len(top[i]) - 1:
            g.add_edge(i, j)
    return g


# ---- p-family --------------------------------------------------------------

def claim_ratio(p, x):
    k = len(x)
    num = k ** (p - 1) * sum(abs(v) ** p for v in x) - abs(sum(x)) ** p
    den = sum(abs(a - b) ** p for a, b in itertools.combinations(x, 2))
    return num / den


def main():
    out = {"complexes": {}}
    for name, facets in SUITE.items():
        sk = closure(facets)
        rec = {
            "counts": [len(s) for s in sk],
            "betti_q": betti(sk, rank_q),
            "betti_gf2": betti(sk, rank_gf2),
            "dims": {},
        }
        for d in range(len(sk) - 1):
            deg = up_degrees(sk, d)
            drec = {"n": len(sk[d])}
            rank_bd = 1 if d == 0 else rank_q(boundary(sk, d))
            drec["I_d"] = rank_bd + 1
            if np.all(deg > 0):
                ev = np.linalg.eigvalsh(normalized_up(sk, d))
                drec["lambda_max"] = float(ev[-1])
                drec["lambda_I_d"] = float(ev[rank_bd])
                drec["zero_multiplicity_up_normalized"] = int(np.sum(np.abs(ev) < 1e-8))
                if len(sk[d]) <= 10:
                    drec["h_1"] = str(h_k_sigma(sk, d, 1))
                if len(sk[d]) <= 6:
                    drec["h_2"] = str(h_k_sigma(sk, d, 2))
                if len(sk[d]) <= 8:
                    drec["h_gap0_grid_M1"] = str(h_sigma_grid(sk, d, 1))
                if len(sk[d]) <= 6:
                    drec["h_gap0_grid_M2"] = str(h_sigma_grid(sk, d, 2))
            if len(sk[d]) <= 16:
                drec["z2"] = str(z2_constant(sk, d))
            rec["dims"][str(d)] = drec
        if len(sk) >= 2 and all(x == 2 for x in up_degrees(sk, len(sk) - 2)):
            g = dual_graph(sk)
            if nx.is_connected(g):
                rec["dual_diameter"] = nx.diameter(g)
                if g.number_of_nodes() <= 20:
                    rec["dual_graph_cheeger"] = str(graph_cheeger([list(g.neighbors(v)) for v in g.nodes]))
        out["complexes"][name] = rec
    out["claim_ratio_p1.5_k3_(1,-1,0)"] = claim_ratio(1.5, (1.0, -1.0, 0.0))
    out["claim_ratio_p1.5_k3_closed_form"] = 2 * math.sqrt(3) / (2 * math.sqrt(2) + 2)
    path = Path(__file__).with_name("oracle_values.json")
    path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
