"""Regenerate src/blockingsets/_moduli.py.

Each entry is the least primitive monic polynomial of degree h over GF(p) in
Conway order (see ``blockingsets.gf.least_primitive``), for every p^h <= 2^16.
Bump VERSION whenever the rule changes; codes in saved files depend on it.
"""

import pathlib
import sys

from blockingsets.gf import TABLE_CAP, _PrimeOps, is_prime, least_primitive

VERSION = 1
OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "blockingsets" / "_moduli.py"


def main():
    rows = []
    for p in range(2, TABLE_CAP + 1):
        if not is_prime(p):
            continue
        h = 1
        while p**h <= TABLE_CAP:
            rows.append((p, h, tuple(least_primitive(h, _PrimeOps(p)))))
            h += 1
    lines = [
        '"""Default moduli, generated by tools/gen_moduli.py -- do not edit."""',
        "",
        f"MODULI_TABLE_VERSION = {VERSION}",
        "",
        "# (p, h): coefficients low to high",
        "DEFAULT_MODULI = {",
    ]
    lines += [f"    ({p}, {h}): {list(m)}," for p, h, m in rows]
    lines += ["}", ""]
    OUT.write_text("\n".join(lines))
    print(f"wrote {len(rows)} entries to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
