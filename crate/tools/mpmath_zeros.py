"""Print zeta-zero ordinates with mpmath as "index value" lines.

    python3 tools/mpmath_zeros.py 1 700 > low.txt
    python3 tools/mpmath_zeros.py 1000000000001 1000000000012 --base 267653395647

Values are printed relative to --base so they can be compared with the
offset tables in data/.
"""
import argparse

import mpmath


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("first", type=int)
    ap.add_argument("last", type=int)
    ap.add_argument("--base", type=int, default=0)
    ap.add_argument("--dps", type=int, default=25)
    args = ap.parse_args()
    mpmath.mp.dps = args.dps
    for n in range(args.first, args.last + 1):
        gamma = mpmath.zetazero(n).imag
        print(n, mpmath.nstr(gamma - args.base, 20), flush=True)


if __name__ == "__main__":
    main()
