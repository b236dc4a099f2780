#!/usr/bin/env python3
"""Writes data/sz8.txt: Sz(8) acting on the 65 points of its ovoid in PG(3,8).

GF(8) = GF(2)[x]/(x^3 + x + 1); theta is x -> x^4, so theta^2 is the Frobenius.
Matrices act on row vectors. Points are projective (first nonzero coordinate 1).
"""
import sys
from itertools import product

MOD = 0b1011


def mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= MOD
    return r


def power(a, e):
    r = 1
    for _ in range(e):
        r = mul(r, a)
    return r


def inv(a):
    return power(a, 6)


def theta(a):
    return power(a, 4)


def U(a, b):
    at = theta(a)
    return [
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, at, 1, 0],
        [mul(power(a, 2), at) ^ mul(a, b) ^ theta(b), mul(a, at) ^ b, a, 1],
    ]


def D(lam):
    li = inv(lam)
    return [[power(lam, 3) if i == j == 0 else power(lam, 2) if i == j == 1 else
             power(li, 2) if i == j == 2 else power(li, 3) if i == j == 3 else 0
             for j in range(4)] for i in range(4)]


J = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def act(v, m):
    out = []
    for j in range(4):
        s = 0
        for i in range(4):
            s ^= mul(v[i], m[i][j])
        out.append(s)
    return tuple(out)


def normalize(v):
    for c in v:
        if c:
            ci = inv(c)
            return tuple(mul(ci, x) for x in v)
    raise ValueError("zero vector")


def main(path):
    gens = [U(1, 0), U(0, 1), U(2, 0), U(0, 2), U(4, 0), D(2), J]
    start = (0, 0, 0, 1)
    orbit = [start]
    seen = {start}
    for v in orbit:
        for g in gens:
            w = normalize(act(v, g))
            if w not in seen:
                seen.add(w)
                orbit.append(w)
    assert len(orbit) == 65, len(orbit)
    orbit.sort()
    index = {v: i for i, v in enumerate(orbit)}
    lines = [
        "# Sz(8), order 29120, on the 65 points of its ovoid in PG(3,8).",
        "# Generated by tools/gen_sz8.py: GF(8) = GF(2)[x]/(x^3+x+1), theta: a -> a^4,",
        "# generators U(1,0), U(0,1), U(2,0), U(0,2), U(4,0), D(x), J acting on row",
        "# vectors; points are the orbit of <(0,0,0,1)>, sorted, numbered from 0.",
        "degree 65",
    ]
    for g in gens:
        img = [index[normalize(act(v, g))] for v in orbit]
        seen = [False] * 65
        cycles = []
        for i in range(65):
            if seen[i] or img[i] == i:
                continue
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = img[j]
            cycles.append("(" + " ".join(map(str, c)) + ")")
        lines.append("".join(cycles))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sz8.txt")
