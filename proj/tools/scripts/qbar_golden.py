#!/usr/bin/env python3
"""Regenerate tests/golden/qbar_first_1000.jsonl with sympy and mpmath.

Independent of the C++ code: irreducibility comes from sympy's factorization,
roots from mpmath.polyroots at 80 digits.
"""
import itertools
import json
import sys

import mpmath
import sympy

COUNT = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
mpmath.mp.dps = 80
z = sympy.Symbol("z")


def admissible(coeffs_desc, h):
    d = len(coeffs_desc) - 1
    if max(abs(c) for c in coeffs_desc) != h:
        return False
    if d >= 2 and coeffs_desc[-1] == 0:
        return False
    from math import gcd
    g = 0
    for c in coeffs_desc:
        g = gcd(g, c)
    if g != 1:
        return False
    poly = sympy.Poly(coeffs_desc, z)
    _, factors = sympy.factor_list(poly)
    return len(factors) == 1 and factors[0][1] == 1


def ordered_roots(coeffs_desc):
    if len(coeffs_desc) == 2:
        return [mpmath.mpc(mpmath.mpf(-coeffs_desc[1]) / coeffs_desc[0])]
    roots = mpmath.polyroots(coeffs_desc, maxsteps=500, extraprec=400)
    tol = mpmath.mpf(10) ** -60
    cleaned = []
    for r in roots:
        r = mpmath.mpc(r)
        im = r.imag if abs(r.imag) > tol else mpmath.mpf(0)
        cleaned.append(mpmath.mpc(r.real, im))
    key = lambda r: (mpmath.nint(r.real * 10**50), r.imag)
    return sorted(cleaned, key=key)


def main():
    out = []
    s = 2
    while len(out) < COUNT:
        for d in range(1, s):
            h = s - d
            for lead in range(1, h + 1):
                for rest in itertools.product(range(-h, h + 1), repeat=d):
                    c = [lead, *rest]
                    if not admissible(c, h):
                        continue
                    for i, r in enumerate(ordered_roots(c)):
                        out.append({
                            "k": len(out) + 1,
                            "coeffs": list(reversed(c)),
                            "root_index": i,
                            "re": mpmath.nstr(r.real, 40, min_fixed=-5, max_fixed=5),
                            "im": mpmath.nstr(r.imag, 40, min_fixed=-5, max_fixed=5),
                        })
            if len(out) >= COUNT:
                break
        s += 1
    for rec in out[:COUNT]:
        print(json.dumps(rec))


if __name__ == "__main__":
    main()
