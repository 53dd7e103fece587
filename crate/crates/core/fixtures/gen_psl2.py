"""Writes permutation generators of PSL_n(2) = SL_n(2) acting on the nonzero
vectors of GF(2)^n.

A vector is identified with its integer value v in 1..2^n - 1, and v is also
its point label, so the output is already 1-indexed. Matrices act on row
vectors from the right. The generators are the transvection I + E_12 and the
permutation matrix of the cycle e_1 -> e_2 -> ... -> e_n -> e_1.

Usage: python3 gen_psl2.py n > psl<n>_2.txt
"""

import sys


def act(v, n, kind):
    bits = [(v >> i) & 1 for i in range(n)]  # bits[i] = coordinate i+1
    if kind == "transvection":
        bits[1] ^= bits[0]
    else:
        bits = [bits[-1]] + bits[:-1]
    return sum(b << i for i, b in enumerate(bits))


def cycles(images):
    seen = set()
    out = []
    for start in sorted(images):
        if start in seen or images[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = images[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = images[nxt]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out)


def main():
    n = int(sys.argv[1])
    points = range(1, 2**n)
    print(f"# PSL_{n}(2) on the {2**n - 1} nonzero vectors of GF(2)^{n}")
    print(f"degree {2**n - 1}")
    for kind in ("transvection", "cycle"):
        print(cycles({v: act(v, n, kind) for v in points}))


if __name__ == "__main__":
    main()
