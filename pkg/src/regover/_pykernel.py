"""Pure-Python truncated power series kernels.

Fallback twin of the compiled module ``regover._ckernel``; both expose the
same four functions with identical semantics.  Coefficient lists may be
shorter than ``out_len`` (missing entries are zero); outputs have exactly
``out_len`` entries.  Modular results are least nonnegative residues.
"""


def _nonzero_mod(coeffs, limit, m):
    return [(i, v) for i, c in enumerate(coeffs[:limit]) if (v := c % m)]


def _nonzero(coeffs, limit):
    return [(i, c) for i, c in enumerate(coeffs[:limit]) if c]


def mul_mod(a, b, out_len, m):
    """Cauchy product of a and b mod m, truncated to out_len coefficients."""
    nza = _nonzero_mod(a, out_len, m)
    nzb = _nonzero_mod(b, out_len, m)
    if len(nza) < len(nzb):
        nza, nzb = nzb, nza
    out = [0] * out_len
    for j, d in nzb:
        lim = out_len - j
        for i, c in nza:
            if i >= lim:
                break
            out[i + j] = (out[i + j] + c * d) % m
    return out


def mul_exact(a, b, out_len):
    """Cauchy product over exact integers, truncated to out_len coefficients."""
    nza = _nonzero(a, out_len)
    nzb = _nonzero(b, out_len)
    if len(nza) < len(nzb):
        nza, nzb = nzb, nza
    out = [0] * out_len
    for j, d in nzb:
        lim = out_len - j
        if d == 1:
            for i, c in nza:
                if i >= lim:
                    break
                out[i + j] += c
        elif d == -1:
            for i, c in nza:
                if i >= lim:
                    break
                out[i + j] -= c
        else:
            for i, c in nza:
                if i >= lim:
                    break
                out[i + j] += c * d
    return out


def div_mod(num, den, out_len, m):
    """Truncated quotient num/den mod m; den[0] must be invertible mod m."""
    d0 = (den[0] if den else 0) % m
    inv0 = pow(d0, -1, m)  # raises ValueError when not a unit
    tail = _nonzero_mod(den[1:out_len], out_len - 1, m)
    tail = [(k + 1, v) for k, v in tail]
    nlen = len(num)
    q = [0] * out_len
    for n in range(out_len):
        acc = num[n] if n < nlen else 0
        for k, v in tail:
            if k > n:
                break
            acc -= v * q[n - k]
        q[n] = acc * inv0 % m
    return q


def div_exact(num, den, out_len):
    """Truncated quotient num/den over exact integers; den[0] must be ±1."""
    d0 = den[0] if den else 0
    if d0 not in (1, -1):
        raise ValueError("constant term of divisor must be 1 or -1")
    tail = [(k, v) for k, v in _nonzero(den[1:out_len], out_len - 1)]
    tail = [(k + 1, v) for k, v in tail]
    nlen = len(num)
    q = [0] * out_len
    magnitudes = {abs(v) for _, v in tail}
    if len(magnitudes) <= 1:
        # lacunary divisors like (q;q)_inf or phi(-q) have a single
        # magnitude g in the tail: accumulate a signed sum, scale once
        g = magnitudes.pop() if magnitudes else 0
        signed = [(k, v > 0) for k, v in tail]
        for n in range(out_len):
            s = 0
            for k, pos in signed:
                if k > n:
                    break
                if pos:
                    s += q[n - k]
                else:
                    s -= q[n - k]
            acc = (num[n] if n < nlen else 0) - g * s
            q[n] = acc if d0 == 1 else -acc
        return q
    for n in range(out_len):
        acc = num[n] if n < nlen else 0
        for k, v in tail:
            if k > n:
                break
            acc -= v * q[n - k]
        q[n] = acc if d0 == 1 else -acc
    return q
