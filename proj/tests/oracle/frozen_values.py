"""Regenerates the constants frozen in tests/frozen.hpp, independently of the C++ code.

Truncated series are plain lists of Fractions; sympy is only used for closed-form expansions.
"""

from fractions import Fraction as F
from math import factorial

import sympy as sp

x = sp.symbols("x")
N = 12


def mul(a, b, n):
    out = [F(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j, bj in enumerate(b[: n + 1 - i]):
                out[i + j] += ai * bj
    return out


def compose(f, g, n):
    # f(g(x)) with g(0) = 0, by summing powers of g
    out = [F(0)] * (n + 1)
    p = [F(1)] + [F(0)] * n
    for k in range(n + 1):
        if k < len(f):
            for i in range(n + 1):
                out[i] += f[k] * p[i]
        p = mul(p, g, n)
    return out


def half_iterate(f, n):
    # g = x + ..., g(g(x)) = f(x): coefficient k of g∘g is 2 g_k + (terms in lower g_j)
    g = [F(0), F(1)] + [F(0)] * (n - 1)
    for k in range(2, n + 1):
        g[k] = F(0)
        c = compose(g, g, k)[k]
        g[k] = (f[k] - c) / 2
    return g


def itlog(f, n):
    # [x^m] f^s is a polynomial in s of degree < m; its derivative at 0 via integer iterates
    iters = [[F(0), F(1)] + [F(0)] * (n - 1)]
    for _ in range(n + 1):
        iters.append(compose(f, iters[-1], n))
    out = [F(0)] * (n + 1)
    for m in range(1, n + 1):
        pts = [(j, iters[j][m]) for j in range(m + 1)]
        s = sp.symbols("s")
        poly = sp.interpolate([(a, sp.Rational(b.numerator, b.denominator)) for a, b in pts], s)
        d = sp.Rational(sp.diff(poly, s).subs(s, 0))
        out[m] = F(int(d.p), int(d.q))
    return out


def coeffs(expr, n):
    ser = sp.series(expr, x, 0, n + 1).removeO()
    return [F(int(sp.Rational(ser.coeff(x, k)).p), int(sp.Rational(ser.coeff(x, k)).q)) for k in range(n + 1)]


def show(name, vals):
    print(f"// {name}")
    print("{" + ", ".join(f'"{v}"' for v in vals) + "}")


expm1 = [F(0)] + [F(1, factorial(k)) for k in range(1, N + 1)]
xx2 = [F(0), F(1), F(1)] + [F(0)] * (N - 2)

show("half iterate of e^x - 1", half_iterate(expm1, N))
show("half iterate of x + x^2", half_iterate(xx2, N))
il = itlog(expm1, 10)
show("itlog(e^x - 1)", il)
show("itlog(x + x^2)", itlog(xx2, 10))
show("Koszul numbers n! c_n", [factorial(k) * c for k, c in enumerate(il)])
show("Bernoulli numbers", [factorial(k) * c for k, c in enumerate(coeffs(x / (sp.exp(x) - 1), N))])
show("LambertW", coeffs(sp.LambertW(x), 8))
show("asin", coeffs(sp.asin(x), 9))
show("(1+x)^(-2/3)", coeffs((1 + x) ** sp.Rational(-2, 3), 8))
show("log(1 + x + x^2)", coeffs(sp.log(1 + x + x**2), 8))
show("exp(x + x^2)", coeffs(sp.exp(x + x**2), 8))
show("tan", coeffs(sp.tan(x), 9))
show("x/(e^x-1) - log(1+x)", coeffs(x / (sp.exp(x) - 1) - sp.log(1 + x), 8))
