"""Pure-Python inner loops for the coordinate ring.

A series is a dict mapping a flat index tuple (the concatenation of its
tuple-letters) to a nonzero int. Two monomials multiply to zero when their
index sets meet, so every routine carries a bitmask of used indices.
"""


def index_mask(key):
    m = 0
    for i in key:
        m |= 1 << i
    return m


def series_mul(a, b):
    """Product of two sparse series, dropping monomials with a repeated index."""
    out = {}
    bm = [(kb, cb, index_mask(kb)) for kb, cb in b.items()]
    for ka, ca in a.items():
        ma = index_mask(ka)
        for kb, cb, mb in bm:
            if ma & mb:
                continue
            key = ka + kb
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def mul_unit_factor(a, letter, coeff):
    """Return a * (1 + coeff * e_letter); a letter with a repeated index is e = 0."""
    lm = index_mask(letter)
    if not coeff or bin(lm).count("1") != len(letter):
        return dict(a)
    out = dict(a)
    for ka, ca in a.items():
        if index_mask(ka) & lm:
            continue
        key = ka + letter
        c = out.get(key, 0) + ca * coeff
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out


def mul_unit_factors(a, factors):
    """Fold ``mul_unit_factor`` over a sequence of (letter, coeff) pairs."""
    for letter, coeff in factors:
        a = mul_unit_factor(a, letter, coeff)
    return a


def subword_product(letters, exponents, k):
    """(letter, exponent) pairs of H_k on a word, k-subsets in colex order.

    ``letters[j]`` is a tuple and ``exponents[j]`` an int. For each index set
    j_1 < ... < j_k the pair is (concatenated letters, product of exponents).
    """
    l = len(letters)
    if k > l:
        return []
    if k == 0:
        return [((), 1)]
    idx = list(range(k))
    out = []
    while True:
        letter = ()
        e = 1
        for j in idx:
            letter += letters[j]
            e *= exponents[j]
        out.append((letter, e))
        # colex successor: bump the first position that has room
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
