"""Brute-force oracles for the frozen expected values used by the C++ tests.

Everything here is deliberately naive: plain Python integers and
fractions.Fraction, direct enumeration, no shared code with the library.
Run `python3 tests/oracles/compute_oracles.py` to regenerate the numbers.
"""
from fractions import Fraction
from math import gcd, log


def rationals_by_height(h):
    out = {Fraction(0)}
    for q in range(1, h + 1):
        for p in range(-h, h + 1):
            if gcd(abs(p), q) == 1:
                out.add(Fraction(p, q))
    return out


def triple_product(a, b, c):
    # (x^2-1)(y^2+1)(z+1) evaluated with x^2 = a, y^2 = b
    return (a - 1) * (b + 1) * (c + 1)


def triple_product_count(n, literal):
    us = [2**i + 1 for i in range(1, n + 1)]
    vs = [2**j + 1 if literal else 2**j - 1 for j in range(1, n + 1)]
    zs = [2**k - 1 for k in range(1, n + 1)]
    return len({triple_product(u, v, z) for u in us for v in vs for z in zs})


def is_power_of_two(r):
    if r <= 0:
        return False
    p, q = r.numerator, r.denominator
    return (p & (p - 1)) == 0 and (q & (q - 1)) == 0


def intersection_pow2(g, h):
    return sorted(x for x in rationals_by_height(h) if g(x) != 0 and is_power_of_two(g(x)))


def iroot(n, w):
    if n < 0:
        if w % 2 == 0:
            return None
        r = iroot(-n, w)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi**w <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**w <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**w == n else None


def rational_root(r, w):
    p = iroot(r.numerator, w)
    q = iroot(r.denominator, w)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def longest_brute(values, kind):
    vals = sorted(set(values))
    if kind == "geometric":
        vals = [v for v in vals if v != 0]
    s = set(vals)
    best = 1 if vals else 0
    for a in vals:
        for b in vals:
            if a == b:
                continue
            if kind == "arithmetic":
                if b < a:
                    continue
                d, nxt, length = b - a, b, 2
                while nxt + d in s:
                    nxt += d
                    length += 1
            else:
                r = b / a
                if r in (0, 1, -1):
                    continue
                nxt, length = b, 2
                while nxt * r in s:
                    nxt *= r
                    length += 1
            best = max(best, length)
    return best


def sumset(a, b):
    return sorted({x + y for x in a for y in b})


def main():
    print("enumerate H=1,2,3:", [len(rationals_by_height(h)) for h in (1, 2, 3)])
    print("F1(3,1,1) =", (9 - 1) * (1 + 1) * (1 + 1))
    print("triple product corrected n=5:", triple_product_count(5, False))
    print("triple product literal   n=5:", triple_product_count(5, True))
    print("triple product corrected n=2..20:", [triple_product_count(n, False) for n in range(2, 21)])
    print("triple product corrected n=10:", triple_product_count(10, False))

    cube1 = lambda x: (x + 1) ** 3
    cubx = lambda x: x**3 + x
    for h in (33, 1024):
        pts = intersection_pow2(cube1, h)
        print(f"(x+1)^3 in <2>, H={h}: count", len(pts))
        pts = intersection_pow2(cubx, h)
        print(f"x^3+x  in <2>, H={h}: count", len(pts), pts)

    pts = []
    for x in sorted(rationals_by_height(10)):
        y = rational_root(cubx(x), 5)
        if y is not None:
            pts.append((x, y))
    print("curve x^3+x = y^5, H=10:", pts)

    sq = [i * i for i in range(1, 101)]
    print("longest AP in squares 1..100:", longest_brute(sq, "arithmetic"))
    print("longest GP in {1,2,4,9}:", longest_brute([1, 2, 4, 9], "geometric"))
    rng = {x * x for x in range(-100, 101)}
    print("range x^2 on [-100,100], AP:", longest_brute(rng, "arithmetic"))
    rng = {(x + 1) ** 3 - 1 for x in range(-50, 51)}
    print("range (x+1)^3-1 on [-50,50], GP:", longest_brute(rng, "geometric"))
    rng = {x**3 + x for x in range(-50, 51)}
    print("range x^3+x on [-50,50], GP:", longest_brute(rng, "geometric"))

    # fiber check, Cubic square
    A = [1, 2, 3]
    gA = [x**3 + x for x in A]
    hB = [y**3 for y in A]
    F2 = lambda x, y: (x**3 + x + y**3 + 2) ** 2
    print("fiber ex2:", len(sumset(gA, hB)), len({F2(x, y) for x in A for y in A}))
    A = [0, 1, 2]
    print("fiber (x+y)^2:", len(sumset(A, A)), len({(x + y) ** 2 for x in A for y in A}))
    print("{1,4,16}*{1,4,16}:", sorted({x * y for x in (1, 4, 16) for y in (1, 4, 16)}))

    for ns in ((100, 200, 400),):
        counts = [len(sumset(range(1, n + 1), range(1, n + 1))) for n in ns]
        xs = [log(n) for n in ns]
        ys = [log(c) for c in counts]
        mx, my = sum(xs) / 3, sum(ys) / 3
        slope = sum((a - mx) * (b - my) for a, b in zip(xs, ys)) / sum((a - mx) ** 2 for a in xs)
        print("sweep x+y:", counts, slope)
        counts = [len({2 ** (i + j) for i in range(1, n + 1) for j in range(1, n + 1)}) for n in ns]
        print("sweep xy GP:", counts)
    sq_counts = [len({a * a + b * b for a in range(1, n + 1) for b in range(1, n + 1)}) for n in (50, 100, 200)]
    print("sweep x^2+y^2:", sq_counts)

    # squares 4-AP check (N = 10, 100) with 3-AP counts
    for n in (4, 10, 100):
        s = [i * i for i in range(1, n + 1)]
        ss = set(s)
        three = four = 0
        for i in range(n):
            for j in range(i + 1, n):
                d = s[j] - s[i]
                if s[j] + d in ss:
                    three += 1
                    if s[j] + 2 * d in ss:
                        four += 1
        print(f"squares N={n}: 3-APs {three}, 4-APs {four}")


if __name__ == "__main__":
    main()
