#!/usr/bin/env python3
"""Generate the Stieltjes constant table used by include/mfvar/stieltjes.hpp.

gamma_m = lim_{n->inf} [ sum_{k<=n} (log k)^m / k - (log n)^(m+1)/(m+1) ]

evaluated with Euler-Maclaurin summation at a finite cut-off n:

  gamma_m = sum_{k<n} f(k) + f(n)/2 - (log n)^(m+1)/(m+1)
            - sum_{j=1..J} B_{2j}/(2j)! f^{(2j-1)}(n),   f(x) = (log x)^m / x

using 60-digit arithmetic. The result is cross-checked against
mpmath.stieltjes and the script aborts on disagreement beyond 1e-25.

Usage: python3 tools/stieltjes_table.py > table.txt
"""
import mpmath as mp

mp.mp.dps = 60
CUTOFF = 200
TERMS = 20
COUNT = 16


def euler_maclaurin(m):
    f = lambda x: mp.log(x) ** m / x
    n = mp.mpf(CUTOFF)
    s = mp.fsum(f(mp.mpf(k)) for k in range(1, CUTOFF))
    s += f(n) / 2 - mp.log(n) ** (m + 1) / (m + 1)
    for j in range(1, TERMS + 1):
        s -= mp.bernoulli(2 * j) / mp.factorial(2 * j) * mp.diff(f, n, 2 * j - 1)
    return s


def main():
    for m in range(COUNT):
        value = euler_maclaurin(m)
        check = mp.stieltjes(m)
        if abs(value - check) > mp.mpf("1e-25") * max(1, abs(check)):
            raise SystemExit(f"mismatch at m={m}: {value} vs {check}")
        print(f"    {mp.nstr(value, 25, min_fixed=-1, max_fixed=-1)},  // gamma_{m}")


if __name__ == "__main__":
    main()
