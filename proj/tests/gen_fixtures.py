#!/usr/bin/env python3
"""Regenerates fixtures.hpp: reference values computed with mpmath at 40 digits."""

import mpmath as mp

mp.mp.dps = 40


def cfmt(z):
    z = mp.mpc(z)
    return f"{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}}"


def main():
    out = []
    out.append("// Generated by gen_fixtures.py; do not edit by hand.")
    out.append("#pragma once")
    out.append("#include <complex>")
    out.append("namespace fixtures {")
    out.append("using cd = std::complex<double>;")

    # gamma on a grid covering the working domain
    gamma_pts = [
        (0.75, 0.0), (0.5, 0.0), (3.0, 4.0), (10.0, 30.0), (0.5, 200.0),
        (50.0, 200.0), (-9.5, 0.5), (-4.5, 137.0), (1.0, -50.0), (25.0, -100.0),
        (0.95, 0.0), (0.85, 0.0), (2.0, 0.0),
    ]
    out.append("inline const struct { cd z, val; } gamma_values[] = {")
    for re, im in gamma_pts:
        z = mp.mpc(re, im)
        out.append(f"  {{{cfmt(z)}, {cfmt(mp.gamma(z))}}},")
    out.append("};")

    zeta_pts = [
        (3.0, 0.0), (2.0, 0.0), (0.0, 0.0), (0.5, 14.134725), (0.5, 200.0),
        (-4.5, 3.0), (1.5, -80.0), (1.0001, 0.0), (-2.5, 150.0), (4.0, 1.0),
    ]
    out.append("inline const struct { cd z, val; } zeta_values[] = {")
    for re, im in zeta_pts:
        z = mp.mpc(re, im)
        out.append(f"  {{{cfmt(z)}, {cfmt(mp.zeta(z))}}},")
    out.append("};")

    hz_pts = [
        (2.0, 0.0, 0.25), (0.5, 30.0, 0.125), (-3.0, 5.0, 0.7), (1.5, 0.0, 1.0),
        (0.5, 200.0, 0.375), (-5.0, 100.0, 0.9), (6.0, -12.0, 0.01),
    ]
    out.append("inline const struct { cd s; double a; cd val; } hurwitz_values[] = {")
    for re, im, a in hz_pts:
        s = mp.mpc(re, im)
        out.append(f"  {{{cfmt(s)}, {mp.nstr(mp.mpf(a), 20)}, {cfmt(mp.zeta(s, a))}}},")
    out.append("};")

    # L(sigma, chi_{-8}) at assorted points: chi mod 8 = (1,0,1,0,-1,0,-1,0)
    def L8(s):
        return 8 ** (-s) * (mp.zeta(s, mp.mpf(1) / 8) + mp.zeta(s, mp.mpf(3) / 8)
                            - mp.zeta(s, mp.mpf(5) / 8) - mp.zeta(s, mp.mpf(7) / 8))

    l8_pts = [0.0, 0.25, 0.5, 0.75, 1.0, 2.0]
    out.append("inline const struct { double sigma; double val; } l_chi8_values[] = {")
    for sig in l8_pts:
        if sig == 1.0:
            # functional-equation-safe evaluation at the Hurwitz pole
            val = mp.limit(lambda e: L8(1 + e), 0)
        else:
            val = L8(sig)
        out.append(f"  {{{mp.nstr(mp.mpf(sig), 20)}, {mp.nstr(val, 20)}}},")
    out.append("};")

    # Stieltjes constants used by zeta1p
    out.append("inline const double stieltjes[11] = {")
    for n in range(11):
        out.append(f"  {mp.nstr(mp.stieltjes(n), 20)},")
    out.append("};")

    out.append("}  // namespace fixtures")
    with open("fixtures.hpp", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
