"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run from the repository root to regenerate tests/oracle_values.hpp:
    python3 tests/oracles/frozen_values.py > tests/oracle_values.hpp
"""
import mpmath as mp
from mpmath import mpc, mpf

mp.mp.dps = 40
I = mpc(0, 1)
TINY = mpf(10) ** -30


def bp(w, p):
    return mp.exp(p * mp.log(w))


def shifted(z, side):
    z = mpc(z)
    if side:
        z += side * I * TINY
    return z


def freg(a, b, c, x):
    # F(a,b;c;x)/Gamma(c), including c a nonpositive integer
    cr = mp.nint(mp.re(c))
    if abs(c - cr) < mpf(10) ** -30 and cr <= 0:
        m = int(-cr)
        return mp.rf(a, m + 1) * mp.rf(b, m + 1) / mp.factorial(m + 1) * x ** (m + 1) * mp.hyp2f1(a + m + 1, b + m + 1, m + 2, x)
    return mp.hyp2f1(a, b, c, x) * mp.rgamma(c)


def p_fn(j, m, n, z, side=0):
    z = shifted(z, side)
    return bp((z - 1) / 2, (n - m) / 2) * bp((z + 1) / 2, (n + m) / 2) * freg(j + n + 1, -j + n, n - m + 1, (1 - z) / 2)


def q_fn(j, m, n, z, side=0):
    z = shifted(z, side)
    return (mp.exp(I * mp.pi * (m - n)) * mp.gamma(j + m + 1) * mp.gamma(j - n + 1) / 2
            * bp((z - 1) / 2, -(j + 1)) * bp(z + 1, (n + m) / 2) * bp(z - 1, -(n + m) / 2)
            * freg(j + n + 1, j + m + 1, 2 * j + 2, 2 / (1 - z)))


def ptilde_fn(j, m, n, x):
    return mp.exp(I * mp.pi * (m - n) / 2) * p_fn(j, m, n, x, +1)


def wigner_sum(j2, mu2, nu2, x):
    # <j mu| exp(-i beta J_y) |j nu>, x = cos beta, explicit factorial sum
    j, mp_, m = mpf(j2) / 2, mpf(mu2) / 2, mpf(nu2) / 2
    beta = mp.acos(x)
    c, s = mp.cos(beta / 2), mp.sin(beta / 2)
    f = mp.factorial
    pref = mp.sqrt(f(j + mp_) * f(j - mp_) * f(j + m) * f(j - m))
    total = mpf(0)
    for k in range(0, int(2 * j) + 1):
        a1, a2, a3 = j + m - k, mp_ - m + k, j - mp_ - k
        if a1 < 0 or a2 < 0 or a3 < 0:
            continue
        total += ((-1) ** int(mp_ - m + k) * pref / (f(a1) * f(k) * f(a2) * f(a3))
                  * c ** int(2 * j + m - mp_ - 2 * k) * s ** int(mp_ - m + 2 * k))
    return total


def c(v):
    v = mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 17, min_fixed=-1, max_fixed=-1), mp.nstr(v.imag, 17, min_fixed=-1, max_fixed=-1))


def r(v):
    return mp.nstr(mpf(v), 17, min_fixed=-1, max_fixed=-1)


out = []
emit = out.append
emit("// Generated by tests/oracles/frozen_values.py (mpmath, 40 digits). Do not edit.")
emit("#pragma once")
emit("")
emit("namespace oracle {")
emit("")
emit("struct C {")
emit("    double re, im;")
emit("};")
emit("")

# gamma
emit("struct GammaCase {")
emit("    C z, gamma;")
emit("};")
emit("inline constexpr GammaCase gamma_cases[] = {")
for z in [0.5, 3.7, mpc(-2.5, 0.1), mpc(1, 20), -7.3, mpc(0.01, -0.02), mpc(25, 3), mpc(-40.5, 2)]:
    z = mpc(z)
    emit("    {%s, %s}," % (c(z), c(mp.gamma(z))))
emit("};")
emit("")

# regularized hypergeometric
emit("// F(a,b;c;x)/Gamma(c); side +1/-1 selects x + i0 / x - i0 for real x > 1.")
emit("struct HypCase {")
emit("    C a, b, c, x;")
emit("    int side;")
emit("    C value;")
emit("};")
emit("inline constexpr HypCase hyp_cases[] = {")
hyp = [
    (0.5, 1.5, 2.0, 0.3, 0),
    (mpc(1, 1), mpc(-0.5, 0.2), mpc(2.5, -1), mpc(0.6, 0.5), 0),
    (1.2, 2.3, 3.1, -5.0, 0),
    (1.2, 2.3, 3.1, -0.97, 0),
    (0.3, 0.7, 1.0, 0.999, 0),
    (0.3, 0.7, 1.0, 1.001, 1),
    (0.3, 0.7, 1.0, 1.001, -1),
    (mpc(0.4, 0.3), mpc(1.1, -0.2), mpc(2.2, 0.1), 3.5, 1),
    (mpc(0.4, 0.3), mpc(1.1, -0.2), mpc(2.2, 0.1), 3.5, -1),
    (1.5, 2.5, -2.0, 0.4, 0),
    (-3.0, 2.5, 1.5, mpc(4, 3), 0),
    (1.0, 1.0, 2.0, mpc(0.5, 0.866), 0),
    (2.0, 3.0, 5.0, mpc(-20, 1), 0),
    (0.25, 0.75, 1.5, mpc(1.2, -0.3), 0),
    (mpc(3.1, 2.0), mpc(-1.4, 0.5), mpc(0.5, 0.5), mpc(0.45, -0.88), 0),
]
for a, b, cc, x, side in hyp:
    a, b, cc, x = mpc(a), mpc(b), mpc(cc), mpc(x)
    xv = x + side * I * TINY if side else x
    emit("    {%s, %s, %s, %s, %d, %s}," % (c(a), c(b), c(cc), c(x), side, c(freg(a, b, cc, xv))))
emit("};")
emit("")

# P and Q
emit("// P^j_{mu nu}(z) ('P') and Q^j_{mu nu}(z) ('Q'); side +1/-1 for z on a cut.")
emit("struct LegendreCase {")
emit("    char kind;")
emit("    C j, mu, nu, z;")
emit("    int side;")
emit("    C value;")
emit("};")
emit("inline constexpr LegendreCase legendre_cases[] = {")
triples = [
    (0.5, 0.25, -0.3),
    (mpc(1.3, 0.4), mpc(0.6, -0.2), mpc(0.2, 0.1)),
    (mpc(-0.7, 1.1), mpc(-1.2, 0.3), mpc(0.9, -0.5)),
    (2.0, 1.0, 0.0),
    (mpc(0.2, 2.5), mpc(1.5, 0.5), mpc(-0.5, 1.0)),
    (3.5, 0.5, 1.5),
]
points = [(2.0, 0), (mpc(1.5, 0.5), 0), (mpc(-2.0, 1.0), 0), (7.5, 0), (0.3, 1), (0.3, -1), (-3.0, 1), (-3.0, -1),
          (mpc(0.2, -0.05), 0)]
for (j, m, n) in triples:
    j, m, n = mpc(j), mpc(m), mpc(n)
    for z, side in points:
        z = mpc(z)
        emit("    {'P', %s, %s, %s, %s, %d, %s}," % (c(j), c(m), c(n), c(z), side, c(p_fn(j, m, n, z, side))))
        emit("    {'Q', %s, %s, %s, %s, %d, %s}," % (c(j), c(m), c(n), c(z), side, c(q_fn(j, m, n, z, side))))
emit("};")
emit("")

# P-tilde
emit("struct PtildeCase {")
emit("    C j, mu, nu;")
emit("    double x;")
emit("    C value;")
emit("};")
emit("inline constexpr PtildeCase ptilde_cases[] = {")
for (j, m, n) in triples[:3] + [(1.5, 0.5, -0.5), (mpc(0.7, 0.3), -0.4, -0.6)]:
    j, m, n = mpc(j), mpc(m), mpc(n)
    for x in [-0.9, -0.2, 0.0, 0.45, 0.95]:
        emit("    {%s, %s, %s, %s, %s}," % (c(j), c(m), c(n), r(x), c(ptilde_fn(j, m, n, mpf(x)))))
emit("};")
emit("")

# associated Legendre, mpmath's own implementation (type 3)
emit("// Associated Legendre P_j^mu(z) ('P') and Q_j^mu(z) ('Q') for z off the cut [-inf, 1].")
emit("struct AssociatedCase {")
emit("    char kind;")
emit("    double j, mu;")
emit("    C z;")
emit("    C value;")
emit("};")
emit("inline constexpr AssociatedCase associated_cases[] = {")
for jj in range(0, 6):
    for mm in range(0, jj + 1):
        for z in [mpc(1.5), mpc(2, 1), mpc(3.7, -0.4)]:
            emit("    {'P', %d, %d, %s, %s}," % (jj, mm, c(z), c(mp.legenp(jj, mm, z, type=3))))
            emit("    {'Q', %d, %d, %s, %s}," % (jj, mm, c(z), c(mp.legenq(jj, mm, z, type=3))))
for jj, mm in [(mpf("0.5"), mpf("0.5")), (mpf("2.3"), mpf("1.7")), (mpf("4.5"), mpf("-1.5"))]:
    for z in [mpc(1.5), mpc(2, 1)]:
        emit("    {'P', %s, %s, %s, %s}," % (r(jj), r(mm), c(z), c(mp.legenp(jj, mm, z, type=3))))
        emit("    {'Q', %s, %s, %s, %s}," % (r(jj), r(mm), c(z), c(mp.legenq(jj, mm, z, type=3))))
emit("};")
emit("")

# Wigner d by the explicit factorial sum
emit("// d^j_{mu nu}(x) = <j mu|exp(-i beta J_y)|j nu>, x = cos beta; indices doubled.")
emit("struct WignerCase {")
emit("    int j2, mu2, nu2;")
emit("    double x, value;")
emit("};")
emit("inline constexpr WignerCase wigner_cases[] = {")
for j2, mu2, nu2 in [(1, 1, 1), (1, 1, -1), (2, 2, 0), (2, 0, 0), (3, 1, -3), (4, -2, 2), (5, 3, 1), (8, 4, -6), (7, -5, 5)]:
    for x in [-0.8, 0.1, 0.6]:
        emit("    {%d, %d, %d, %s, %s}," % (j2, mu2, nu2, r(x), r(wigner_sum(j2, mu2, nu2, mpf(x)))))
emit("};")
emit("")

# Bessel J and regularized Kummer function
emit("struct BesselCase {")
emit("    C v, y, value;")
emit("};")
emit("inline constexpr BesselCase bessel_cases[] = {")
for v, y in [(0, 1.5), (0.5, 3.0), (mpc(0.3, 0.2), 2.5), (mpc(-0.4, 0.1), mpc(1, 0.5)), (2, 25.0), (mpc(1.2, -0.7), 0.3)]:
    v, y = mpc(v), mpc(y)
    emit("    {%s, %s, %s}," % (c(v), c(y), c(mp.besselj(v, y))))
emit("};")
emit("")
emit("// Phi(a; c; x)/Gamma(c)")
emit("struct KummerCase {")
emit("    C a, c, x, value;")
emit("};")
emit("inline constexpr KummerCase kummer_cases[] = {")
for a, cc, x in [(0.5, 1.5, 2.0), (mpc(0.3, 0.4), mpc(1.2, -0.1), -3.5), (1.0, -1.0, 0.7), (mpc(2, 1), 0.5, mpc(4, 1)),
                 (-2.0, 1.5, 3.0)]:
    a, cc, x = mpc(a), mpc(cc), mpc(x)
    emit("    {%s, %s, %s, %s}," % (c(a), c(cc), c(x), c(mp.hyp1f1(a, cc, x) * mp.rgamma(cc) if mp.nint(cc.real) != cc.real or cc.real > 0
                                             else mp.rf(a, 1 - int(cc.real)) * x ** (1 - int(cc.real)) / mp.factorial(1 - int(cc.real)) * mp.hyp1f1(a + 1 - int(cc.real), 2 - int(cc.real), x))))
emit("};")
emit("")
emit("} // namespace oracle")
print("\n".join(out))
