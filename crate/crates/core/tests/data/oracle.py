"""Exact-fraction oracle for the frozen spot values in tests/acceptance.rs.

Uses only fractions.Fraction and math.comb; no p-adic code. Prints one
line per value: name p m residue.
"""
from fractions import Fraction as F
from math import comb as C


def res(x, p, m):
    x = F(x)
    mod = p**m
    assert x.denominator % p != 0, "not p-integral"
    return x.numerator * pow(x.denominator, -1, mod) % mod


def domb(n):
    return sum(C(n, k)**2 * C(2*k, k) * C(2*n - 2*k, n - k) for k in range(n + 1))


def az(n):
    return sum(C(2*k, k) * C(3*k, k) * C(n, 3*k) * C(n + k, k) * (-3)**(n - 3*k)
               for k in range(n // 3 + 1))


def w(n):
    return sum(C(2*k, k) * C(3*k, k) * C(n, 3*k) * (-3)**(n - 3*k) for k in range(n // 3 + 1))


def gb(a, k):
    r = F(1)
    for i in range(k):
        r = r * (F(a) - i) / (i + 1)
    return r


def pair(a, p, wt):
    return sum((gb(a, k) * gb(-1 - F(a), k) * wt(k) for k in range(p)), F(0))


def fam16(p, wt):
    return sum((F(C(2*k, k)**2, 16**k) * wt(k) for k in range(p)), F(0))


def fam27(p, wt, last=None):
    last = p - 1 if last is None else last
    return sum((F(C(2*k, k) * C(3*k, k), 27**k) * wt(k) for k in range(last + 1)), F(0))


def seq_sum(f, p, base):
    return sum((F(f(n), base**n) for n in range(p)), F(0))


out = []
out.append(("domb_over_16", 7, 2, res(seq_sum(domb, 7, 16), 7, 2)))
out.append(("domb_over_4", 7, 2, res(seq_sum(domb, 7, 4), 7, 2)))
out.append(("f27_over_3k2", 7, 2, res(fam27(7, lambda k: F(1, 3*k + 2)), 7, 2)))
out.append(("w_over_m3", 13, 2, res(seq_sum(w, 13, -3), 13, 2)))
out.append(("minus_l_plus_p_over_l", 13, 2, res(F(5) + F(13, -5), 13, 2)))
out.append(("f16_full", 5, 2, res(fam16(5, lambda k: 1), 5, 2)))
out.append(("f16_full", 7, 2, res(fam16(7, lambda k: 1), 7, 2)))
out.append(("az_over_m3", 7, 2, res(seq_sum(az, 7, -3), 7, 2)))
out.append(("az_over_m27", 7, 2, res(seq_sum(az, 7, -27), 7, 2)))
out.append(("f16_p_over_3k1", 13, 2, res(fam16(13, lambda k: F(13, 3*k + 1)), 13, 2)))
out.append(("f16_p_over_3k1", 7, 3, res(fam16(7, lambda k: F(7, 3*k + 1)), 7, 3)))
out.append(("pair_central_b1_3", 7, 2, res(pair(F(-1, 2), 7, lambda k: F(7) / (k + F(1, 3))), 7, 2)))
out.append(("pair_ka_a1_3", 7, 3, res(pair(F(1, 3), 7, lambda k: 1 / (k + F(1, 3))), 7, 3)))
out.append(("pair_ka_a126", 5, 3, res(pair(F(126), 5, lambda k: 1 / (k + F(126))), 5, 3)))
out.append(("w_third_kernel", 13, 2, res(fam27(13, lambda k: F(13, 3*k + 1), 13 // 3), 13, 2)))
for name, p, m, r in out:
    print(name, p, m, r)
