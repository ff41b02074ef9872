#!/usr/bin/env python3
"""Writes fixtures/matrices_d{2..5}.txt from the explicit low-dimensional
gamma and spin matrices (Pauli blocks), independently of the C++ code.

The spin matrices are taken from their explicit block forms and checked
against S_ij = -(i/4)[gamma_i, gamma_j] before anything is written."""

import sys
from fractions import Fraction as F
from pathlib import Path


def c(re, im=0):
    return (F(re), F(im))


def mul_s(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def add_s(a, b):
    return (a[0] + b[0], a[1] + b[1])


def scale(m, s):
    return [[mul_s(s, e) for e in row] for row in m]


def matmul(a, b):
    n = len(a)
    out = [[c(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = c(0)
            for k in range(n):
                acc = add_s(acc, mul_s(a[i][k], b[k][j]))
            out[i][j] = acc
    return out


def sub(a, b):
    return [[(x[0] - y[0], x[1] - y[1]) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def block(a, b, cc, d):
    top = [ra + rb for ra, rb in zip(a, b)]
    bot = [rc + rd for rc, rd in zip(cc, d)]
    return top + bot


ZERO2 = [[c(0), c(0)], [c(0), c(0)]]
ID2 = [[c(1), c(0)], [c(0), c(1)]]
SIGMA = [
    [[c(0), c(1)], [c(1), c(0)]],
    [[c(0), c(0, -1)], [c(0, 1), c(0)]],
    [[c(1), c(0)], [c(0), c(-1)]],
]


def gammas(d):
    if d in (2, 3):
        return SIGMA[:d]
    out = [block(ZERO2, scale(s, c(0, 1)), scale(s, c(0, -1)), ZERO2) for s in SIGMA]
    out.append(block(ZERO2, ID2, ID2, ZERO2))
    if d == 5:
        out.append(block(ID2, ZERO2, ZERO2, scale(ID2, c(-1))))
    return out


def eps(i, j, k):
    return {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (1, 3, 2): -1, (3, 2, 1): -1, (2, 1, 3): -1}.get((i, j, k), 0)


def spins(d):
    """Explicit spin matrices S_ij (i < j)."""
    half = c(F(1, 2))
    out = {}
    if d == 2:
        out[(1, 2)] = scale(SIGMA[2], half)
        return out
    for i in range(1, 4):
        for j in range(i + 1, 4):
            k = next(k for k in range(1, 4) if eps(i, j, k))
            s = SIGMA[k - 1] if d == 3 else block(SIGMA[k - 1], ZERO2, ZERO2, SIGMA[k - 1])
            out[(i, j)] = scale(s, c(F(eps(i, j, k), 2)))
    if d == 3:
        return out
    for i in range(1, 4):
        out[(i, 4)] = scale(block(SIGMA[i - 1], ZERO2, ZERO2, scale(SIGMA[i - 1], c(-1))), half)
    if d == 5:
        for i in range(1, 4):
            out[(i, 5)] = scale(block(ZERO2, SIGMA[i - 1], SIGMA[i - 1], ZERO2), c(F(-1, 2)))
        out[(4, 5)] = scale(block(ZERO2, ID2, scale(ID2, c(-1)), ZERO2), c(0, F(1, 2)))
    return out


def frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def entry(e):
    re, im = e
    sign = "-" if im < 0 else "+"
    return f"{frac(re)}{sign}{frac(abs(im))}i"


def fixture(d):
    g = gammas(d)
    s = spins(d)
    for (i, j), m in s.items():
        comm = sub(matmul(g[i - 1], g[j - 1]), matmul(g[j - 1], g[i - 1]))
        if scale(comm, c(0, F(-1, 4))) != m:
            sys.exit(f"spin matrix S_{i}{j} at d={d} disagrees with its gamma commutator")
    blocks = []
    for i, m in enumerate(g, 1):
        blocks.append((f"gamma {d} {i}", m))
    for (i, j) in sorted(s):
        blocks.append((f"spin {d} {i} {j}", s[(i, j)]))
    text = []
    for header, m in blocks:
        text.append(header + "\n" + "".join(" ".join(entry(e) for e in row) + "\n" for row in m))
    return "\n".join(text)


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    for d in range(2, 6):
        (out_dir / f"matrices_d{d}.txt").write_text(fixture(d))


if __name__ == "__main__":
    main()
