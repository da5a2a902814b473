#!/usr/bin/env python3
"""Independent checks for finite-field construction.

Finds the canonical modulus (lexicographically least monic irreducible,
comparing coefficient tuples from the constant term up) by trial division,
spot-checks a few extension-field products against hand multiplication,
and solves the quadratic fixed-point equations used by the tube-parameter
calibration.  No package imports.

Run:  python3 tools/oracle_fields.py
"""

from itertools import product


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mod(a, f, p):
    out = list(a)
    df = len(f) - 1
    inv = pow(f[-1], p - 2, p)
    while len(out) - 1 >= df and out:
        if out[-1]:
            c = out[-1] * inv % p
            shift = len(out) - 1 - df
            for k, fk in enumerate(f):
                out[shift + k] = (out[shift + k] - c * fk) % p
        out.pop()
    while out and out[-1] == 0:
        out.pop()
    return out


def is_irreducible(f, p):
    """Trial division by all monic polynomials of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not poly_mod(f, g, p):
                return False
    return True


def least_irreducible(p, m):
    for tail in product(range(p), repeat=m):
        f = list(tail) + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible found")


def pack(coeffs, p):
    return sum(c * p**k for k, c in enumerate(coeffs))


def mul_packed(x, y, p, f):
    ax = []
    while x:
        ax.append(x % p)
        x //= p
    ay = []
    while y:
        ay.append(y % p)
        y //= p
    return pack(poly_mod(poly_mul(ax or [0], ay or [0], p), f, p), p)


def main():
    for p, m in [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)]:
        f = least_irreducible(p, m)
        print(f"GF({p}^{m}) canonical modulus coefficients (constant first): {f}")

    # GF(4) = F2[x]/(x^2+x+1); element 2 encodes x, so 2*2 = x^2 = x+1 = 3
    f4 = least_irreducible(2, 2)
    table = {(a, b): mul_packed(a, b, 2, f4) for a in range(4) for b in range(4)}
    print("GF(4) products:", {k: v for k, v in table.items() if k[0] >= 2 and k[1] >= 2})

    # GF(9) = F3[x]/(x^2+1); element 3 encodes x, so 3*3 = x^2 = -1 = 2
    f9 = least_irreducible(3, 2)
    print("GF(9) 3*3 =", mul_packed(3, 3, 3, f9))

    # fixed points of the tube actions: lam = lam/(lam-1) over F5 means
    # lam^2 - 2 lam = 0; lam = 1/(1-lam) over F7 means lam^2 - lam + 1 = 0
    print("F5 solutions of t^2-2t=0:", [t for t in range(5) if (t * t - 2 * t) % 5 == 0])
    print("F7 solutions of t^2-t+1=0:", [t for t in range(7) if (t * t - t + 1) % 7 == 0])

    # three-cycle of the order-3 action over F7 away from the fixed points
    act = {t: pow((1 - t) % 7, 5, 7) for t in range(2, 7)}
    print("F7 action 1/(1-t) on 2..6:", act)
    # order-2 action over F5 away from 0, 1
    act5 = {t: t * pow((t - 1) % 5, 3, 5) % 5 for t in range(2, 5)}
    print("F5 action t/(t-1) on 2..4:", act5)


if __name__ == "__main__":
    main()
