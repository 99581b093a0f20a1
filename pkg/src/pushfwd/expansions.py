"""Polynomials over F_p and truncated local power series.

Polynomials and series are plain lists of residues, index = degree.
Series are truncated to a fixed length; all arithmetic is exact mod p.
The two expansions the Riemann-Roch oracle needs live here:

* at a point with two preimages over its x-value, the local parameter is
  t = x - x0 and y expands as the square root of f(x0 + t) with the chosen
  sign of y0;
* at a ramification point of y (y0 = 0), the parameter is t = y and
  x - x0 is an even series in t obtained by inverting f(x0 + u) = t^2.
"""

from __future__ import annotations


def poly_trim(coeffs: list[int]) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_eval(coeffs, x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def poly_derivative(coeffs, p: int) -> list[int]:
    return poly_trim([(k * c) % p for k, c in enumerate(coeffs)][1:])


def poly_divmod(num, den, p: int) -> tuple[list[int], list[int]]:
    num = poly_trim(num)
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p)
    quo = [0] * max(0, len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(num) - len(den), -1, -1):
        coef = (rem[k + len(den) - 1] * inv_lead) % p
        if coef:
            quo[k] = coef
            for j, d in enumerate(den):
                rem[k + j] = (rem[k + j] - coef * d) % p
    return poly_trim(quo), poly_trim(rem)


def poly_gcd(a, b, p: int) -> list[int]:
    """Monic gcd over F_p."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def poly_is_squarefree(coeffs, p: int) -> bool:
    deriv = poly_derivative(coeffs, p)
    if not deriv:
        # derivative vanishes identically: a p-th power, never squarefree
        return False
    return len(poly_gcd(coeffs, deriv, p)) == 1


def poly_shift(coeffs, x0: int, p: int) -> list[int]:
    """Coefficients of f(x0 + t) as a polynomial in t (Horner on t + x0)."""
    out = [0]
    for c in reversed(coeffs):
        # out <- out * (t + x0) + c
        shifted = [0] + out
        for k in range(len(out)):
            shifted[k] = (shifted[k] + out[k] * x0) % p
        shifted[0] = (shifted[0] + c) % p
        out = shifted
    return out


def series_mul(a, b, prec: int, p: int) -> list[int]:
    out = [0] * prec
    for i in range(min(prec, len(a))):
        ai = a[i]
        if ai:
            for j in range(min(prec - i, len(b))):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    return out


def poly_compose_series(coeffs, inner, prec: int, p: int) -> list[int]:
    """f(inner(t)) truncated to prec terms; Horner over series."""
    out = [0] * prec
    for c in reversed(coeffs):
        out = series_mul(out, inner, prec, p)
        out[0] = (out[0] + c) % p
    return out


def sqrt_series(poly, y0: int, prec: int, p: int) -> list[int]:
    """Series y(t) with y(t)^2 = poly(t) and y(0) = y0, nonzero.

    Coefficient recurrence from comparing t^k on both sides.
    """
    y0 %= p
    if y0 == 0:
        raise ValueError("square-root expansion needs a nonzero constant term")
    out = [y0] + [0] * (prec - 1)
    inv = pow(2 * y0 % p, p - 2, p)
    for k in range(1, prec):
        conv = 0
        for i in range(1, k):
            conv = (conv + out[i] * out[k - i]) % p
        target = poly[k] if k < len(poly) else 0
        out[k] = (target - conv) * inv % p
    return out


def series_inverse_of_poly(poly, prec: int, p: int) -> list[int]:
    """u(s) with poly(u(s)) = s mod s^prec, given poly(0) = 0 and poly'(0) != 0.

    Fixed-point refinement gains one correct order per pass, so prec passes
    suffice starting from zero.
    """
    if poly_eval(poly, 0, p) != 0:
        raise ValueError("inversion needs a zero constant term")
    lin = poly[1] % p if len(poly) > 1 else 0
    if lin == 0:
        raise ValueError("inversion needs an invertible linear term")
    inv_lin = pow(lin, p - 2, p)
    u = [0] * prec
    for _ in range(prec):
        composed = poly_compose_series(poly, u, prec, p)
        for i in range(prec):
            target = 1 if i == 1 else 0
            u[i] = (u[i] + (target - composed[i]) * inv_lin) % p
    return u


def split_point_series(curve_poly, x0: int, y0: int, prec: int, p: int) -> tuple[list[int], list[int]]:
    """(x(t), y(t)) at a point with y0 != 0, local parameter t = x - x0."""
    x_series = [0] * prec
    x_series[0] = x0 % p
    if prec > 1:
        x_series[1] = 1
    shifted = poly_shift(curve_poly, x0, p)
    y_series = sqrt_series(shifted, y0, prec, p)
    return x_series, y_series


def weierstrass_point_series(curve_poly, x0: int, prec: int, p: int) -> tuple[list[int], list[int]]:
    """(x(t), y(t)) at a ramification point (y0 = 0), local parameter t = y.

    x - x0 = u(t^2) where u inverts the shifted curve polynomial, so the
    x-series is even in t.
    """
    shifted = poly_shift(curve_poly, x0, p)
    s_terms = (prec - 1) // 2 + 1
    u = series_inverse_of_poly(shifted, s_terms, p)
    x_series = [0] * prec
    x_series[0] = x0 % p
    for k in range(1, s_terms):
        if 2 * k < prec:
            x_series[2 * k] = u[k]
    y_series = [0] * prec
    if prec > 1:
        y_series[1] = 1
    return x_series, y_series
