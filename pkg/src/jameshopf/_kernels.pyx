# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops for the coordinate ring; same contract as _pykernels."""

ctypedef unsigned long long u64


cdef inline u64 _mask(tuple key):
    cdef u64 m = 0
    cdef Py_ssize_t i
    for i in range(len(key)):
        m |= (<u64>1) << (<long>key[i])
    return m


def index_mask(key):
    return _mask(tuple(key))


def series_mul(dict a, dict b):
    cdef dict out = {}
    cdef list bk = list(b.keys())
    cdef list bc = list(b.values())
    cdef Py_ssize_t nb = len(bk), j
    cdef u64 ma
    cdef u64[:] mb
    cdef tuple ka, key
    cdef object ca, c
    import array
    buf = array.array("Q", [0]) * nb
    mb = buf
    for j in range(nb):
        mb[j] = _mask(<tuple>bk[j])
    for ka, ca in a.items():
        ma = _mask(ka)
        for j in range(nb):
            if ma & mb[j]:
                continue
            key = ka + <tuple>bk[j]
            c = out.get(key, 0) + ca * bc[j]
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


cdef inline int _popcount(u64 m):
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


cdef dict _mul_unit(dict a, dict masks, tuple letter, object coeff):
    cdef u64 lm = _mask(letter)
    if _popcount(lm) != len(letter):
        # null letter: repeated index, e_letter = 0
        return a
    cdef dict out = dict(a)
    cdef tuple ka, key
    cdef object ca, c
    for ka, ca in a.items():
        if (<u64>masks[ka]) & lm:
            continue
        key = ka + letter
        c = out.get(key, 0) + ca * coeff
        if c:
            out[key] = c
            if key not in masks:
                masks[key] = (<u64>masks[ka]) | lm
        else:
            out.pop(key, None)
    return out


def mul_unit_factor(dict a, letter, coeff):
    if not coeff:
        return dict(a)
    cdef dict masks = {k: _mask(k) for k in a}
    return dict(_mul_unit(a, masks, tuple(letter), coeff))


def mul_unit_factors(dict a, factors):
    cdef dict masks = {k: _mask(k) for k in a}
    for letter, coeff in factors:
        if coeff:
            a = _mul_unit(a, masks, tuple(letter), coeff)
    return a


def subword_product(letters, exponents, int k):
    cdef list ls = list(letters)
    cdef list es = list(exponents)
    cdef Py_ssize_t l = len(ls), i, t, top
    if k > l:
        return []
    if k == 0:
        return [((), 1)]
    cdef Py_ssize_t[64] idx
    if k > 64:
        raise ValueError("k too large")
    for i in range(k):
        idx[i] = i
    cdef list out = []
    cdef tuple letter
    cdef object e
    while True:
        letter = ()
        e = 1
        for i in range(k):
            letter = letter + <tuple>ls[idx[i]]
            e = e * es[idx[i]]
        out.append((letter, e))
        i = 0
        while i < k:
            top = idx[i + 1] if i + 1 < k else l
            if idx[i] + 1 < top:
                break
            i += 1
        if i == k:
            return out
        idx[i] += 1
        for t in range(i):
            idx[t] = t
