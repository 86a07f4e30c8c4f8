#!/usr/bin/env python3
"""High-precision Taylor coefficient oracle for the series certifier.

Extracts Taylor coefficients numerically (mpmath.taylor, which differentiates
at working precision) of the two target functions and prints them so they can
be frozen into tests/test_series.cpp. Nothing here uses the closed-form
coefficient formulas.

    log-mean target:   s^4 + s^3 - s - 1 - 3 (s^2 + 1) s log s,  in powers of (1 - s)
    artanh-tan target: sin(2z)/2 - (1 - z^2) artanh z,           in powers of z
"""
import mpmath as mp

mp.mp.dps = 60


def log_mean_target(u):
    s = 1 - u
    return s**4 + s**3 - s - 1 - 3 * (s**2 + 1) * s * mp.log(s)


def artanh_tan_target(z):
    return mp.sin(2 * z) / 2 - (1 - z**2) * mp.atanh(z)


def main():
    log_coeffs = mp.taylor(log_mean_target, 0, 12)
    print("log-mean series, coefficient of (1-s)^n:")
    for n, c in enumerate(log_coeffs):
        print(f"  n={n:2d}  {mp.nstr(c, 20)}")
    tan_coeffs = mp.taylor(artanh_tan_target, 0, 13)
    print("artanh-tan series, coefficient of z^(2n+1):")
    for k, c in enumerate(tan_coeffs):
        if k % 2 == 1:
            print(f"  n={(k - 1) // 2:2d}  {mp.nstr(c, 20)}")


if __name__ == "__main__":
    main()
