"""Sup-over-k error oracle using Python integers and the closed-form first correction."""
from fractions import Fraction
import math


def row(n, q):
    r = [1]
    for _ in range(n):
        nr = [0] * (len(r) + q)
        for i, c in enumerate(r):
            for j in range(q + 1):
                nr[i + j] += c
        r = nr
    return r


def sup_error(n, q, order):
    r = row(n, q)
    scale = math.sqrt(q * (q + 2) * n / 12)
    best, arg = -1.0, None
    for k, c in enumerate(r):
        exact = float(Fraction(c, (q + 1) ** n)) * scale
        x = math.sqrt(12) * (k - q * n / 2) / math.sqrt(q * (q + 2) * n)
        g = math.exp(-x * x / 2) / math.sqrt(2 * math.pi)
        if order == 1:
            g *= 1 - ((q + 1) ** 4 - 1) * (x**4 - 6 * x**2 + 3) / (20 * n * q * q * (q + 2) ** 2)
        e = abs(exact - g)
        if e > best:
            best, arg = e, k
    return best, arg


if __name__ == "__main__":
    for args in [(1, 1, 0), (100, 2, 0), (100, 2, 1), (50, 1, 1), (200, 3, 0)]:
        print(args, "%.17g %d" % sup_error(*args))
    c = row(2, 2)[2]
    print("eger(2,2) %.17g" % (c / 9 * math.sqrt(2 * math.pi * 2 * 8 / 12)))
    print("eger(200,2) %.17g" % (float(Fraction(row(200, 2)[200], 3**200)) * math.sqrt(2 * math.pi * 200 * 8 / 12)))
