# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled truncated power series kernels.

Same contract as ``regover._pykernel``.  Modular kernels use int64
arithmetic and require modulus < 2**31 (the dispatcher in
``regover.kernels`` enforces this); exact kernels run Python big-int
arithmetic inside C loops.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from libc.stdlib cimport free, malloc


cdef struct SparseMod:
    Py_ssize_t n
    Py_ssize_t *pos
    long long *val


cdef int _collect_mod(list coeffs, Py_ssize_t limit, long long m, SparseMod *out) except -1:
    cdef Py_ssize_t n = PyList_GET_SIZE(coeffs)
    if n > limit:
        n = limit
    if n < 0:
        n = 0
    out.pos = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    out.val = <long long *> malloc((n + 1) * sizeof(long long))
    if out.pos == NULL or out.val == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k = 0
    cdef long long v
    cdef object o
    for i in range(n):
        o = <object> PyList_GET_ITEM(coeffs, i)
        v = o % m  # object-level reduction: safe for arbitrary ints
        if v:
            out.pos[k] = i
            out.val[k] = v
            k += 1
    out.n = k
    return 0


def mul_mod(list a, list b, Py_ssize_t out_len, long long m):
    """Cauchy product of a and b mod m, truncated to out_len coefficients."""
    if out_len <= 0:
        return []
    cdef SparseMod sa, sb
    sa.pos = sb.pos = NULL
    sa.val = sb.val = NULL
    cdef long long *out = NULL
    cdef SparseMod *dense
    cdef SparseMod *sparse
    cdef Py_ssize_t i, j, lim, idx
    cdef long long d
    try:
        _collect_mod(a, out_len, m, &sa)
        _collect_mod(b, out_len, m, &sb)
        out = <long long *> malloc(out_len * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(out_len):
            out[i] = 0
        if sa.n >= sb.n:
            dense = &sa
            sparse = &sb
        else:
            dense = &sb
            sparse = &sa
        for j in range(sparse.n):
            d = sparse.val[j]
            lim = out_len - sparse.pos[j]
            for i in range(dense.n):
                if dense.pos[i] >= lim:
                    break
                idx = dense.pos[i] + sparse.pos[j]
                out[idx] = (out[idx] + dense.val[i] * d % m) % m
        return [out[i] for i in range(out_len)]
    finally:
        free(sa.pos)
        free(sa.val)
        free(sb.pos)
        free(sb.val)
        free(out)


def div_mod(list num, list den, Py_ssize_t out_len, long long m):
    """Truncated quotient num/den mod m; den[0] must be invertible mod m."""
    cdef object o = den[0] if PyList_GET_SIZE(den) > 0 else 0
    cdef long long d0 = o % m
    cdef long long inv0 = pow(d0, -1, m)  # ValueError when not a unit
    if out_len <= 0:
        return []
    cdef SparseMod tail
    tail.pos = NULL
    tail.val = NULL
    cdef long long *q = NULL
    cdef Py_ssize_t nlen = PyList_GET_SIZE(num)
    cdef Py_ssize_t n, t, k
    cdef long long acc
    try:
        _collect_mod(den[1:out_len], out_len - 1, m, &tail)
        q = <long long *> malloc(out_len * sizeof(long long))
        if q == NULL:
            raise MemoryError()
        for n in range(out_len):
            if n < nlen:
                o = <object> PyList_GET_ITEM(num, n)
                acc = o % m
            else:
                acc = 0
            for t in range(tail.n):
                k = tail.pos[t] + 1
                if k > n:
                    break
                acc -= tail.val[t] * q[n - k] % m
                if acc < 0:
                    acc += m
            q[n] = acc * inv0 % m
        return [q[n] for n in range(out_len)]
    finally:
        free(tail.pos)
        free(tail.val)
        free(q)


def mul_exact(list a, list b, Py_ssize_t out_len):
    """Cauchy product over exact integers, truncated to out_len coefficients."""
    if out_len <= 0:
        return []
    cdef list nza_pos = []
    cdef list nza_val = []
    cdef list nzb_pos = []
    cdef list nzb_val = []
    cdef Py_ssize_t i
    cdef object c
    for i in range(min(PyList_GET_SIZE(a), out_len)):
        c = <object> PyList_GET_ITEM(a, i)
        if c != 0:
            nza_pos.append(i)
            nza_val.append(c)
    for i in range(min(PyList_GET_SIZE(b), out_len)):
        c = <object> PyList_GET_ITEM(b, i)
        if c != 0:
            nzb_pos.append(i)
            nzb_val.append(c)
    if len(nza_pos) < len(nzb_pos):
        nza_pos, nzb_pos = nzb_pos, nza_pos
        nza_val, nzb_val = nzb_val, nza_val
    cdef list out = [0] * out_len
    cdef Py_ssize_t na = len(nza_pos)
    cdef Py_ssize_t nb = len(nzb_pos)
    cdef Py_ssize_t j, p, pj, lim
    cdef object d
    cdef int kind
    for j in range(nb):
        pj = nzb_pos[j]
        d = <object> PyList_GET_ITEM(nzb_val, j)
        lim = out_len - pj
        kind = 0
        if d == 1:
            kind = 1
        elif d == -1:
            kind = -1
        if kind == 1:
            for i in range(na):
                p = nza_pos[i]
                if p >= lim:
                    break
                out[p + pj] = <object> PyList_GET_ITEM(out, p + pj) + <object> PyList_GET_ITEM(nza_val, i)
        elif kind == -1:
            for i in range(na):
                p = nza_pos[i]
                if p >= lim:
                    break
                out[p + pj] = <object> PyList_GET_ITEM(out, p + pj) - <object> PyList_GET_ITEM(nza_val, i)
        else:
            for i in range(na):
                p = nza_pos[i]
                if p >= lim:
                    break
                out[p + pj] = <object> PyList_GET_ITEM(out, p + pj) + <object> PyList_GET_ITEM(nza_val, i) * d
    return out


def div_exact(list num, list den, Py_ssize_t out_len):
    """Truncated quotient num/den over exact integers; den[0] must be ±1."""
    cdef object d0 = den[0] if PyList_GET_SIZE(den) > 0 else 0
    if d0 != 1 and d0 != -1:
        raise ValueError("constant term of divisor must be 1 or -1")
    if out_len <= 0:
        return []
    cdef bint d0_pos = d0 == 1
    cdef Py_ssize_t dlen = min(PyList_GET_SIZE(den), out_len)
    cdef Py_ssize_t ntail = 0
    cdef Py_ssize_t i
    cdef object v, mag
    for i in range(1, dlen):
        if <object> PyList_GET_ITEM(den, i) != 0:
            ntail += 1
    cdef Py_ssize_t *pos = <Py_ssize_t *> malloc((ntail + 1) * sizeof(Py_ssize_t))
    cdef char *sgn = <char *> malloc((ntail + 1) * sizeof(char))
    if pos == NULL or sgn == NULL:
        free(pos)
        free(sgn)
        raise MemoryError()
    cdef list vals = []
    cdef Py_ssize_t t = 0
    cdef bint uniform = True
    mag = None
    for i in range(1, dlen):
        v = <object> PyList_GET_ITEM(den, i)
        if v != 0:
            pos[t] = i
            if v > 0:
                sgn[t] = 1
            else:
                sgn[t] = -1
                v = -v
            vals.append(v)
            if mag is None:
                mag = v
            elif v != mag:
                uniform = False
            t += 1
    cdef list q = [0] * out_len
    cdef Py_ssize_t nlen = PyList_GET_SIZE(num)
    cdef Py_ssize_t n, k
    cdef object acc, s
    try:
        if uniform and ntail > 0:
            # single-magnitude tail (pentagonal/theta divisors): signed sum,
            # one multiply per coefficient
            for n in range(out_len):
                s = 0
                for t in range(ntail):
                    k = pos[t]
                    if k > n:
                        break
                    if sgn[t] > 0:
                        s = s + <object> PyList_GET_ITEM(q, n - k)
                    else:
                        s = s - <object> PyList_GET_ITEM(q, n - k)
                acc = (<object> PyList_GET_ITEM(num, n) if n < nlen else 0) - mag * s
                q[n] = acc if d0_pos else -acc
        else:
            for n in range(out_len):
                acc = <object> PyList_GET_ITEM(num, n) if n < nlen else 0
                for t in range(ntail):
                    k = pos[t]
                    if k > n:
                        break
                    if sgn[t] > 0:
                        acc = acc - <object> PyList_GET_ITEM(vals, t) * <object> PyList_GET_ITEM(q, n - k)
                    else:
                        acc = acc + <object> PyList_GET_ITEM(vals, t) * <object> PyList_GET_ITEM(q, n - k)
                q[n] = acc if d0_pos else -acc
        return q
    finally:
        free(pos)
        free(sgn)
