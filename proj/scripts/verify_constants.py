#!/usr/bin/env python3
"""Independent exact verification of the numeric constants embedded in core/.

Checks, using integer arithmetic only:
  1. The modular polynomial coefficients in core/src/quat.cpp satisfy
     Phi_ell(j(q), j(q^ell)) = 0 as a q-series identity.
  2. CM fixed-point identities Phi_ell(j_D, j_D) = 0 for orders with a
     norm-ell endomorphism, plus Phi_2(j(i), j(2i)) = 0.
  3. Every class-number-one j-invariant in core/src/ssloc.cpp matches a
     fixed-point evaluation of the j q-expansion at the CM point
     (scaled-integer arithmetic, no floating point).
"""

import re
import sys
from math import isqrt
from pathlib import Path

# pi * 10^60, truncated
PI = 3141592653589793238462643383279502884197169399375105820974944
SCALE = 10**60


def parse_phi(src: str):
    """The set(a, b, "c") calls in make_phi, in source order: 7 for ell=2."""
    calls = re.findall(r'set\((\d+),\s*(\d+),\s*"(-?\d+)"\)', src)
    assert len(calls) == 17, f"expected 17 modular polynomial entries, got {len(calls)}"
    phi2 = {(int(a), int(b)): int(c) for a, b, c in calls[:7]}
    phi3 = {(int(a), int(b)): int(c) for a, b, c in calls[7:]}
    return phi2, phi3


def parse_cm_table(src: str):
    block = src[src.index("cm_seed_table") :]
    rows = re.findall(r'\{(\d+),\s*BigInt\("?(-?\d+)"?\),\s*(\d+)\}', block)
    table = [(int(d), int(j), int(u)) for d, j, u in rows]
    assert len(table) == 9, f"expected 9 CM seeds, got {len(table)}"
    return table


def phi_coeff_grid(phi, deg):
    grid = [[0] * (deg + 2) for _ in range(deg + 2)]
    for (a, b), c in phi.items():
        grid[a][b] = c
        grid[b][a] = c
    return grid


def phi_eval_int(phi, deg, x, y):
    grid = phi_coeff_grid(phi, deg)
    total = 0
    for a in range(deg + 2):
        for b in range(deg + 2):
            total += grid[a][b] * x**a * y**b
    return total


# --- exact q-series of j ------------------------------------------------------


def j_coefficients(terms):
    """[c_-1, c_0, c_1, ...] with j = sum c_n q^n, length `terms`."""
    n = terms + 2
    sigma3 = [0] * n
    for d in range(1, n):
        for m in range(d, n, d):
            sigma3[m] += d**3
    e4 = [1] + [240 * sigma3[k] for k in range(1, n)]
    # Delta / q = prod (1 - q^k)^24
    unit = [1] + [0] * (n - 1)
    for k in range(1, n):
        for _ in range(24):
            nxt = unit[:]
            for i in range(n - k):
                nxt[i + k] -= unit[i]
            unit = nxt
    # invert the unit (leading coefficient 1, so the inverse is integral)
    inv = [1] + [0] * (n - 1)
    for i in range(1, n):
        inv[i] = -sum(unit[k] * inv[i - k] for k in range(1, i + 1))
    e4sq = mul_trunc(e4, e4, n)
    e4cu = mul_trunc(e4sq, e4, n)
    jq = mul_trunc(e4cu, inv, n)  # coefficients of q^0.. of j*q
    return jq[:terms]


def mul_trunc(a, b, n):
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for k in range(min(len(b), n - i)):
            out[i + k] += ai * b[k]
    return out


# --- Laurent series with precision tracking ----------------------------------


class Laurent:
    """coeffs[k] is the coefficient of q^(v+k); exact strictly below `prec`."""

    def __init__(self, v, coeffs, prec):
        self.v = v
        self.coeffs = coeffs
        self.prec = prec

    @staticmethod
    def constant(c, prec):
        return Laurent(0, [c], prec)

    def __add__(self, o):
        prec = min(self.prec, o.prec)
        v = min(self.v, o.v)
        out = [0] * (max(self.v + len(self.coeffs), o.v + len(o.coeffs)) - v)
        for k, c in enumerate(self.coeffs):
            out[self.v + k - v] += c
        for k, c in enumerate(o.coeffs):
            out[o.v + k - v] += c
        return Laurent(v, out[: prec - v], prec)

    def __mul__(self, o):
        prec = min(self.v + o.prec, o.v + self.prec)
        v = self.v + o.v
        out = [0] * max(prec - v, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(o.coeffs):
                e = v + i + k
                if e < prec:
                    out[e - v] += a * b
        return Laurent(v, out, prec)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)


def j_series(terms, step):
    coeffs = j_coefficients(terms)
    expanded = []
    for c in coeffs:
        expanded.append(c)
        expanded.extend([0] * (step - 1))
    expanded = expanded[: (terms - 1) * step + 1]
    return Laurent(-step, expanded, (terms - 1) * step)


def check_q_identity(phi, ell, terms=70):
    x = j_series(terms, 1)
    y = j_series(terms, ell)
    grid = phi_coeff_grid(phi, ell + 1)
    prec_floor = min(x.prec, y.prec)
    # Horner in y of polynomials in x
    acc = Laurent.constant(0, prec_floor)
    for b in range(ell + 1, -1, -1):
        inner = Laurent.constant(0, prec_floor)
        for a in range(ell + 1, -1, -1):
            inner = inner * x + Laurent.constant(grid[a][b], prec_floor)
        acc = acc * y + inner
    window = acc.prec - acc.v
    assert window >= 30, f"Phi_{ell} residual window too small ({window})"
    assert acc.is_zero(), f"Phi_{ell}(j(q), j(q^{ell})) != 0 in the exact window"
    return window


# --- fixed-point CM evaluation ------------------------------------------------


def exp_fixed(x):
    """e^(x/SCALE) * SCALE for x >= 0, by Taylor series in scaled integers."""
    term = SCALE
    total = SCALE
    k = 1
    while term:
        term = term * x // (SCALE * k)
        total += term
        k += 1
    return total


def j_at_cm(D, coeffs):
    sqrt_d = isqrt(D * SCALE * SCALE)
    e = exp_fixed(PI * sqrt_d // SCALE)  # e^(pi sqrt(D)), scaled
    s = -1 if D % 2 else 1  # q = s * e^(-pi sqrt(D))
    q = s * SCALE * SCALE // e
    total = s * e + coeffs[1] * SCALE  # q^(-1) and constant terms
    qn = SCALE
    for c in coeffs[2:]:
        qn = qn * q // SCALE
        total += c * qn
    return total  # j(tau) * SCALE


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1]
    phi2, phi3 = parse_phi((root / "core/src/quat.cpp").read_text())
    cm = parse_cm_table((root / "core/src/ssloc.cpp").read_text())

    w2 = check_q_identity(phi2, 2)
    print(f"ok: Phi_2 q-series identity (window {w2})")
    w3 = check_q_identity(phi3, 3)
    print(f"ok: Phi_3 q-series identity (window {w3})")

    jmap = {d: j for d, j, _ in cm}
    fixed_points = [
        (phi2, 2, jmap[4], jmap[4]),     # 1 + i has norm 2
        (phi2, 2, jmap[7], jmap[7]),     # (1 + sqrt(-7))/2 has norm 2
        (phi2, 2, jmap[8], jmap[8]),     # sqrt(-2) has norm 2
        (phi2, 2, jmap[4], 287496),      # 2-isogeny j(i) -> j(2i)
        (phi3, 3, jmap[3], jmap[3]),     # sqrt(-3) has norm 3
        (phi3, 3, jmap[8], jmap[8]),     # 1 + sqrt(-2) has norm 3
        (phi3, 3, jmap[11], jmap[11]),   # (1 + sqrt(-11))/2 has norm 3
    ]
    for phi, ell, x, y in fixed_points:
        assert phi_eval_int(phi, ell, x, y) == 0, f"Phi_{ell}({x}, {y}) != 0"
    print(f"ok: {len(fixed_points)} CM fixed-point identities")

    units = {3: 3, 4: 2}
    coeffs = j_coefficients(42)
    for d, j_expected, u in cm:
        assert u == units.get(d, 1), f"u(-{d}) wrong"
        got = j_at_cm(d, coeffs)
        err = abs(got - j_expected * SCALE)
        assert err < SCALE // 10**6, f"j(-{d}): fixed-point value off by {err}/{SCALE}"
    print(f"ok: {len(cm)} class-number-one j-invariants via fixed-point evaluation")
    print("all constants verified")


if __name__ == "__main__":
    main()
