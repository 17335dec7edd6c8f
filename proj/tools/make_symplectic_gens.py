#!/usr/bin/env python3
"""Write permutation generators for Sp_{2m}(2) acting on quadratic forms.

Sp_{2m}(2) acts 2-transitively on the quadratic forms polarising to the
symplectic form, split by Arf invariant into orbits of size
2^{m-1}(2^m + 1) and 2^{m-1}(2^m - 1).  Output uses the generator file
format (1-based disjoint cycles).

    python3 tools/make_symplectic_gens.py 2 data/
"""
import itertools
import random
import sys
from pathlib import Path


def symp(x, y, m):
    s = 0
    for k in range(m):
        s ^= ((x >> k) & 1) & ((y >> (m + k)) & 1)
        s ^= ((x >> (m + k)) & 1) & ((y >> k) & 1)
    return s


def quad(c, x, m):
    s = 0
    for k in range(m):
        s ^= ((x >> k) & 1) & ((x >> (m + k)) & 1)
    s ^= bin(c & x).count("1") & 1
    return s


def transvection(v, m):
    return lambda x: x ^ v if symp(x, v, m) else x


def act_on_forms(g, m):
    dim = 2 * m
    # g is an involution for transvections; build inverse table generally
    table = [g(x) for x in range(1 << dim)]
    inv = [0] * (1 << dim)
    for x, y in enumerate(table):
        inv[y] = x
    tables = {}
    for c in range(1 << dim):
        tables[tuple(quad(c, x, m) for x in range(1 << dim))] = c
    images = []
    for c in range(1 << dim):
        t = tuple(quad(c, inv[x], m) for x in range(1 << dim))
        images.append(tables[t])
    return images


def closure_order(gens):
    start = tuple(range(len(gens[0])))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(len(p)))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def cycles(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def main():
    m = int(sys.argv[1])
    outdir = Path(sys.argv[2])
    dim = 2 * m
    order = 2 ** (m * m)
    for k in range(1, m + 1):
        order *= 4 ** k - 1
    vecs = [v for v in range(1, 1 << dim)]
    trans = [act_on_forms(transvection(v, m), m) for v in vecs]
    zeros = [sum(1 - quad(c, x, m) for x in range(1 << dim)) for c in range(1 << dim)]
    plus = [c for c in range(1 << dim) if zeros[c] > (1 << (dim - 1))]
    minus = [c for c in range(1 << dim) if zeros[c] < (1 << (dim - 1))]
    rng = random.Random(20240601)
    for label, pts in (("plus", plus), ("minus", minus)):
        idx = {c: i for i, c in enumerate(pts)}
        perms = [[idx[t[c]] for c in pts] for t in trans]

        def mul(a, b):
            return [a[b[i]] for i in range(len(b))]

        while True:
            a = rng.choice(perms)
            b = rng.choice(perms)
            for _ in range(6):
                b = mul(b, rng.choice(perms))
            if closure_order([a, b]) == order:
                break
        path = outdir / f"sp{dim}_2_deg{len(pts)}.gens"
        with open(path, "w") as fh:
            fh.write(f"# Sp{dim}(2) on {len(pts)} quadratic forms of {label} type, order {order}\n")
            fh.write(f"degree {len(pts)}\n")
            fh.write(cycles(a) + "\n")
            fh.write(cycles(b) + "\n")
        print(path, len(pts), order)


if __name__ == "__main__":
    main()
