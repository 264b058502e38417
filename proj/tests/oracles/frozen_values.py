#!/usr/bin/env python3
"""Reference values frozen into the C++ unit tests.

Every number here comes from a direct, high-precision evaluation (mpmath,
50 digits) that shares no code with the library.  Run this script to
regenerate the constants printed in tests/unit/*.cpp.
"""
import mpmath as mp

mp.mp.dps = 50


def hermite_phys(n, x):
    # explicit sum, H_n(x) = n! sum (-1)^m (2x)^(n-2m) / (m! (n-2m)!)
    return mp.fsum(
        (-1) ** m * mp.factorial(n) * (2 * x) ** (n - 2 * m)
        / (mp.factorial(m) * mp.factorial(n - 2 * m))
        for m in range(n // 2 + 1)
    )


def psi(n, x):
    x = mp.mpf(x)
    return (mp.pi ** mp.mpf(-0.25) * mp.mpf(2) ** (-mp.mpf(n) / 2)
            / mp.sqrt(mp.factorial(n)) * mp.exp(-x * x / 2) * hermite_phys(n, x))


def laguerre_sum(n, a, x):
    # L_n^(a)(x) = sum_i (-1)^i binom(n+a, n-i) x^i / i!
    return mp.fsum((-1) ** i * mp.binomial(n + a, n - i) * mp.mpf(x) ** i / mp.factorial(i)
                   for i in range(n + 1))


def hyp0f1_series(a, z):
    return mp.nsum(lambda n: mp.mpf(z) ** n * mp.gamma(a) / (mp.factorial(n) * mp.gamma(a + n)),
                   [0, mp.inf])


def fock_tomogram(m, n, x):
    # |<n|D(alpha)|m>|^2 via the explicit double sum over normal-ordered
    # displacement D = e^{-x/2} e^{alpha a^dag} e^{-alpha^* a}, real alpha = sqrt(x)
    a = mp.sqrt(mp.mpf(x))
    amp = mp.mpf(0)
    for k in range(m + 1):
        j = n - (m - k)
        if j < 0:
            continue
        # e^{-a a}|m> -> coefficient of |m-k>, then e^{a a^dag} -> |n>
        c1 = (-a) ** k / mp.factorial(k) * mp.sqrt(mp.factorial(m) / mp.factorial(m - k))
        c2 = a ** j / mp.factorial(j) * mp.sqrt(mp.factorial(n) / mp.factorial(m - k))
        amp += c1 * c2
    return (mp.exp(-mp.mpf(x) / 2) * amp) ** 2


def kerr_logF(k, lam):
    return mp.fsum(mp.log(mp.sqrt((j - 1 + lam) / lam)) for j in range(1, k + 1))


def linear_entropy_quadruple(a1, a2, lam, N=40):
    # literal quadruple sum of the two-mode linear-entropy series
    F = [mp.exp(kerr_logF(k, lam)) for k in range(2 * N + 1)]
    x1, x2 = mp.mpf(a1) ** 2, mp.mpf(a2) ** 2
    norm = mp.fsum(x1 ** n * x2 ** k / (mp.factorial(n) * mp.factorial(k) * F[n + k] ** 2)
                   for n in range(N) for k in range(N))
    # collapse only over the innermost index to keep the script fast
    G = [[mp.fsum(x2 ** k / (mp.factorial(k) * F[n + k] * F[p + k]) for k in range(N))
          for p in range(N)] for n in range(N)]
    s = mp.fsum(x1 ** (n + p) / (mp.factorial(n) * mp.factorial(p)) * G[n][p] ** 2
                for n in range(N) for p in range(N))
    return 1 - s / norm ** 2


def poisson_entropy(x, tail=mp.mpf("1e-12")):
    x = mp.mpf(x)
    acc, h, m = mp.mpf(0), mp.mpf(0), 0
    while True:
        p = mp.exp(-x) * x ** m / mp.factorial(m)
        acc += p
        h -= p * mp.log(p)
        if 1 - acc < tail:
            return h
        m += 1


def poisson_information(x, s=2, M=200):
    x = mp.mpf(x)
    p = [mp.exp(-x) * x ** m / mp.factorial(m) for m in range(M)]
    H = lambda v: -mp.fsum(q * mp.log(q) for q in v if q > 0)
    rows = [mp.fsum(p[j * s:(j + 1) * s]) for j in range((M + s - 1) // s)]
    cols = [mp.fsum(p[l::s]) for l in range(s)]
    return H(rows) + H(cols) - H(p)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 17)}")


if __name__ == "__main__":
    show("psi_3(1)", psi(3, 1))
    show("L_2^(1)(2)", laguerre_sum(2, 1, 2))
    show("0F1(1,1)", hyp0f1_series(1, 1))
    show("0F1(2,4)", hyp0f1_series(2, 4))
    show("f_qosc(0.5, 3)", mp.sqrt(mp.sinh(mp.mpf(1.5)) / mp.mpf(1.5)))
    show("kerr(1) alpha=1 c0", hyp0f1_series(1, 1) ** mp.mpf(-0.5))
    show("W_3(1, |a|^2=2)", fock_tomogram(3, 1, 2))
    show("lambda_5(2, 1.5)", fock_tomogram(5, 2, mp.mpf(1.5)) * mp.exp(mp.mpf(1.5)))
    show("H(Poisson(1))", poisson_entropy(1))
    show("I(Poisson(1), s=2)", poisson_information(1))
    show("I(Poisson(4), s=3)", poisson_information(4, 3))
    show("S_kerr(1; 1, 1)", linear_entropy_quadruple(1, 1, mp.mpf(1)))
    e = mp.exp(-4)
    show("S+_inf(1)", 1 - mp.mpf(0.5) * (1 + e) ** -2 * (1 + 6 * e + e * e))
