#!/usr/bin/env python3
"""Generate the Riemann-Siegel remainder tables used by `zeta::riemann_siegel`.

The remainder of the Riemann-Siegel formula is written as

    R = sum_{n < DEPTH} a^{-n} G_n(p),   a = sqrt(t / 2 pi),  p = 1 - 2 frac(a)

where each G_n is a combination of derivatives of

    F(z) = (exp(pi i (z^2/2 + 3/8)) - i sqrt(2) cos(pi z / 2)) / (2 cos(pi z)).

This script expands F as a power series at high precision, builds the
combination coefficients d[n][k] by their three-term recursion and writes the
Taylor coefficients of every G_n in p to `crates/core/src/zeta/rs_tables.rs`.

Usage: python3 scripts/gen_rs_tables.py > crates/core/src/zeta/rs_tables.rs
"""
import mpmath as mp

DEPTH = 12
F_DEGREE = 140
G_DEGREE = 52

mp.mp.dps = 320
pi = mp.pi


def f_series(deg):
    num = [mp.mpc(0)] * (deg + 1)
    e = mp.expj(3 * pi / 8)
    for j in range(deg // 2 + 1):
        num[2 * j] += e * (1j * pi / 2) ** j / mp.factorial(j)
        num[2 * j] += -1j * mp.sqrt(2) * (-1) ** j * (pi / 2) ** (2 * j) / mp.factorial(2 * j)
    den = [mp.mpf(0)] * (deg + 1)
    for j in range(deg // 2 + 1):
        den[2 * j] = 2 * (-1) ** j * pi ** (2 * j) / mp.factorial(2 * j)
    out = [mp.mpc(0)] * (deg + 1)
    for k in range(deg + 1):
        out[k] = (num[k] - sum(den[j] * out[k - j] for j in range(1, k + 1))) / den[0]
    return out


def d_coefficients(depth):
    d = {(0, 0): mp.mpf(1)}
    g = lambda n, k: d.get((n, k), mp.mpf(0))
    for n in range(1, depth):
        for k in range(0, 3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m != 0:
                d[(n, k)] = -(m + 1) * g(n - 1, k - 2) + g(n - 1, k) / (4 * m)
            else:
                v = mp.mpf(0)
                for r in range(k):
                    v -= (-1) ** (k - r) * g(n, r) * mp.factorial(2 * k - 2 * r) / mp.factorial(k - r)
                d[(n, k)] = v
    return d


def main():
    c = f_series(F_DEGREE)
    d = d_coefficients(DEPTH)
    tables = []
    for n in range(DEPTH):
        co = [mp.mpc(0)] * (G_DEGREE + 1)
        for l in range(3 * n // 2 + 1):
            m = 3 * n - 2 * l
            f = d.get((n, l), 0) / pi ** (2 * n - l) / (2j) ** l
            for j in range(G_DEGREE + 1):
                co[j] += f * c[j + m] * mp.ff(j + m, m)
        tables.append(co)

    print("// @generated by scripts/gen_rs_tables.py; do not edit by hand.")
    print()
    print(f"pub(crate) const RS_DEPTH: usize = {DEPTH};")
    print(f"pub(crate) const RS_DEGREE: usize = {G_DEGREE};")
    print()
    print("/// Taylor coefficients in `p` of the remainder terms, as `(re, im)` pairs.")
    print("#[allow(clippy::excessive_precision, clippy::unreadable_literal)]")
    print("pub(crate) static RS_REMAINDER: [[(f64, f64); RS_DEGREE + 1]; RS_DEPTH] = [")
    for co in tables:
        print("    [")
        for z in co:
            print(f"        ({mp.nstr(z.real, 20, min_fixed=1, max_fixed=0)}, {mp.nstr(z.imag, 20, min_fixed=1, max_fixed=0)}),")
        print("    ],")
    print("];")


if __name__ == "__main__":
    main()
