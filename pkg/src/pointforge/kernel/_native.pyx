# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled evaluation kernels.

Bit-for-bit mirror of kernel/pure.py: same instruction semantics, same libm
calls, same constants, same operation order.  Keep the two lanes in lockstep;
the parity tests compare their outputs exactly.
"""

from libc.math cimport (acosh, asinh, ceil, cos, exp, fabs, floor, isfinite,
                        log, log1p, sin, sqrt, tan, tanh, NAN, INFINITY)
from libc.stdint cimport int32_t, int64_t, uint64_t

import numpy as np

cdef double UNIT53 = 1.0 / 9007199254740992.0  # 2**-53
cdef double TAU = 6.283185307179586
cdef double SQRT_PI = 1.7724538509055160273
cdef double TWO_POW_52 = 4503599627370496.0

# Opcodes and operand codes: must match kernel/program.py.
cdef enum:
    OP_ATOM = 0
    OP_APPLY = 1
    OP_BINOP = 2


ctypedef struct RngS:
    uint64_t s0
    uint64_t s1
    uint64_t s2
    uint64_t s3
    int has_spare
    double spare


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline double _next_unit(RngS *r) nogil:
    cdef uint64_t result = _rotl(r.s1 * <uint64_t>5, 7) * <uint64_t>9
    cdef uint64_t t = r.s1 << 17
    r.s2 ^= r.s0
    r.s3 ^= r.s1
    r.s1 ^= r.s2
    r.s0 ^= r.s3
    r.s2 ^= t
    r.s3 = _rotl(r.s3, 45)
    return <double>(result >> 11) * UNIT53


cdef inline double _gauss(RngS *r) nogil:
    cdef double u1, u2, rad, t, z
    if r.has_spare:
        r.has_spare = 0
        return r.spare
    u1 = _next_unit(r)
    u2 = _next_unit(r)
    rad = sqrt(-2.0 * log(1.0 - u1))
    t = TAU * u2
    z = rad * cos(t)
    r.spare = rad * sin(t)
    r.has_spare = 1
    return z


cdef inline double _sample(RngS *r, int dist) nogil:
    if dist == 0:    # uniform(-1, 1)
        return -1.0 + 2.0 * _next_unit(r)
    if dist == 1:    # gauss(0, 1)
        return _gauss(r)
    if dist == 2:    # betavariate(1, 1)
        return _next_unit(r)
    if dist == 3:    # gammavariate(1, 1)
        return -log(1.0 - _next_unit(r))
    return exp(_gauss(r))  # lognormvariate(0, 1)


cdef double _erf(double x) nogil:
    cdef double ax, x2, acc, fk, a, da, p, p_last, q, q_last, b, tmp, erfc
    cdef int i
    if x != x:
        return x
    ax = fabs(x)
    if ax < 1.5:
        x2 = x * x
        acc = 0.0
        fk = 25.5
        for i in range(25):
            acc = 2.0 + x2 * acc / fk
            fk -= 1.0
        return acc * x * exp(-x2) / SQRT_PI
    if ax >= 30.0:
        erfc = 0.0
    else:
        x2 = ax * ax
        a = 0.0
        da = 0.5
        p = 1.0
        p_last = 0.0
        q = da + x2
        q_last = 1.0
        for i in range(50):
            a += da
            da += 2.0
            b = da + x2
            tmp = p
            p = b * p - a * p_last
            p_last = tmp
            tmp = q
            q = b * q - a * q_last
            q_last = tmp
        erfc = p / q * ax * exp(-x2) / SQRT_PI
    if x > 0.0:
        return 1.0 - erfc
    return erfc - 1.0


cdef inline double _apply_func(int kind, double v) nogil:
    if v != v:
        return v
    if kind == 0:
        return tanh(v)
    if kind == 1:
        return cos(v)
    if kind == 2:
        return sin(v)
    if kind == 3:
        return v
    if kind == 4:
        return fabs(v)
    if kind == 5:
        return ceil(v)
    if kind == 6:
        return floor(v)
    if kind == 7:
        return tan(v)
    if kind == 8:
        return _erf(v)
    if kind == 9:
        return sqrt(fabs(v))
    if kind == 10:
        return log1p(fabs(v))
    if kind == 11:
        return acosh(fabs(v) + 1.0)
    return asinh(v)


cdef inline double _atom(int kind, double x, double y) nogil:
    if kind == 0:
        return x * y
    if kind == 1:
        return x
    if kind == 2:
        return y
    if kind == 3:
        return 1.0 / x
    if kind == 4:
        return 1.0 / y
    if kind == 5:
        return x / y
    if kind == 6:
        return y - x
    if kind == 7:
        return x - y
    if kind == 8:
        return x + y
    if kind == 9:
        return (x * x) * x
    if kind == 10:
        return (y * y) * y
    if kind == 11:
        return x * x
    if kind == 12:
        return y * y
    if kind == 13:
        return (x * x) * y
    if kind == 14:
        return (y * y) * x
    if kind == 15:
        return x * x + y * y
    if kind == 16:
        return y * y - x * x
    if kind == 17:
        return (x * x) * ((y * y) * y)
    if kind == 18:
        return ((x * x) * x) * (y * y)
    if kind == 19:
        return x * ((y * y) * y)
    return y * ((x * x) * x)


cdef double _run(int32_t[:, ::1] codes, double *samples, double *stack,
                 double x, double y) nogil:
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t i
    cdef int sp = -1
    cdef int op, a, b
    for i in range(n):
        op = codes[i, 0]
        a = codes[i, 1]
        b = codes[i, 2]
        if op == OP_ATOM:
            sp += 1
            stack[sp] = _atom(a, x, y)
        elif op == OP_APPLY:
            stack[sp] = samples[b] * _apply_func(a, stack[sp])
        else:
            sp -= 1
            if a == 0:
                stack[sp] = stack[sp] + stack[sp + 1]
            elif a == 1:
                stack[sp] = stack[sp] - stack[sp + 1]
            elif a == 2:
                stack[sp] = stack[sp] * stack[sp + 1]
            else:
                stack[sp] = stack[sp] / stack[sp + 1]
    return stack[0]


cdef inline void _mode_map(int mode, double v1, double v2, double x, double y,
                           int64_t i, double *a, double *b) nogil:
    if mode == 0:
        a[0] = v1; b[0] = v2
    elif mode == 1:
        a[0] = v2; b[0] = v1
    elif mode == 2:
        a[0] = v2; b[0] = <double>i
    elif mode == 3:
        a[0] = v1; b[0] = <double>i
    elif mode == 4:
        a[0] = <double>i; b[0] = v1
    elif mode == 5:
        a[0] = <double>i; b[0] = v2
    elif mode == 6:
        a[0] = v1; b[0] = x
    elif mode == 7:
        a[0] = v2; b[0] = x
    elif mode == 8:
        a[0] = v1; b[0] = y
    elif mode == 9:
        a[0] = v2; b[0] = y
    elif mode == 10:
        a[0] = x; b[0] = v1
    elif mode == 11:
        a[0] = x; b[0] = v2
    elif mode == 12:
        a[0] = y; b[0] = v1
    else:
        a[0] = y; b[0] = v2


def transform_grid(axis, prog1, prog2, int mode, words):
    """Grid transform; same contract as kernel.pure.transform_grid."""
    cdef double[::1] ax = np.ascontiguousarray(axis, dtype=np.float64)
    cdef int32_t[:, ::1] c1 = prog1.codes
    cdef int32_t[:, ::1] c2 = prog2.codes
    cdef int ns1 = prog1.n_samples
    cdef int ns2 = prog2.n_samples
    cdef int d1 = prog1.dist
    cdef int d2 = prog2.dist
    cdef RngS r
    r.s0 = words[0]
    r.s1 = words[1]
    r.s2 = words[2]
    r.s3 = words[3]
    r.has_spare = 0
    r.spare = 0.0

    cdef Py_ssize_t m = ax.shape[0]
    cdef Py_ssize_t total = m * m
    xs = np.empty(total, dtype=np.float64)
    ys = np.empty(total, dtype=np.float64)
    src = np.empty(total, dtype=np.int64)
    cdef double[::1] xs_v = xs
    cdef double[::1] ys_v = ys
    cdef int64_t[::1] src_v = src

    cdef int nmax = ns1 if ns1 > ns2 else ns2
    samp = np.empty(nmax if nmax > 0 else 1, dtype=np.float64)
    cdef double[::1] samp_v = samp
    cdef double stack[16]

    cdef Py_ssize_t ix, iy, cnt = 0
    cdef int64_t i = 0, dropped = 0
    cdef int k
    cdef double x, y, v1, v2, a, b
    with nogil:
        for ix in range(m):
            x = ax[ix]
            for iy in range(m):
                y = ax[iy]
                i += 1
                for k in range(ns1):
                    samp_v[k] = _sample(&r, d1)
                v1 = _run(c1, &samp_v[0], stack, x, y)
                for k in range(ns2):
                    samp_v[k] = _sample(&r, d2)
                v2 = _run(c2, &samp_v[0], stack, x, y)
                _mode_map(mode, v1, v2, x, y, i, &a, &b)
                if isfinite(a) and isfinite(b):
                    xs_v[cnt] = a
                    ys_v[cnt] = b
                    src_v[cnt] = i
                    cnt += 1
                else:
                    dropped += 1
    return xs[:cnt].copy(), ys[:cnt].copy(), src[:cnt].copy(), int(dropped)


def sample_stream(words, int dist, Py_ssize_t n):
    """n successive draws of one sampler from raw state words (test surface)."""
    cdef RngS r
    r.s0 = words[0]
    r.s1 = words[1]
    r.s2 = words[2]
    r.s3 = words[3]
    r.has_spare = 0
    r.spare = 0.0
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] out_v = out
    cdef Py_ssize_t k
    with nogil:
        for k in range(n):
            out_v[k] = _sample(&r, dist)
    return out


def blend_markers(canvas_arr, px_arr, py_arr, offsets_arr, coverage_arr, colors_arr):
    """Alpha-blend marker footprints; same contract as kernel.pure.blend_markers."""
    cdef double[:, :, ::1] canvas = canvas_arr
    cdef int64_t[::1] px = px_arr
    cdef int64_t[::1] py = py_arr
    cdef int32_t[:, ::1] offs = offsets_arr
    cdef double[::1] cov = coverage_arr
    cdef double[:, ::1] colors = colors_arr

    cdef Py_ssize_t h = canvas.shape[0]
    cdef Py_ssize_t w = canvas.shape[1]
    cdef Py_ssize_t n = px.shape[0]
    cdef Py_ssize_t k = offs.shape[0]
    cdef Py_ssize_t p, j
    cdef int64_t cx, cy, xx, yy
    cdef double cr, cg, cb, ca, ea, keep
    with nogil:
        for p in range(n):
            cx = px[p]
            cy = py[p]
            cr = colors[p, 0]
            cg = colors[p, 1]
            cb = colors[p, 2]
            ca = colors[p, 3]
            for j in range(k):
                xx = cx + offs[j, 0]
                yy = cy + offs[j, 1]
                if xx < 0 or xx >= w or yy < 0 or yy >= h:
                    continue
                ea = ca * cov[j]
                keep = 1.0 - ea
                canvas[yy, xx, 0] = ea * cr + keep * canvas[yy, xx, 0]
                canvas[yy, xx, 1] = ea * cg + keep * canvas[yy, xx, 1]
                canvas[yy, xx, 2] = ea * cb + keep * canvas[yy, xx, 2]
