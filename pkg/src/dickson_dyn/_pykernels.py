"""Pure-Python versions of the hot loops.

All functions take field tables as flat sequences: ``add[a*q + b]``,
``mul[a*q + b]`` and ``neg[a]`` over canonical element encodings.  Reduced
polynomials are length-q tuples indexed by exponent.  The compiled module
``_ckernels`` exposes the same functions with the same signatures.
"""


def shift_map(q, d):
    """Target exponent of x^e * x^d after reduction mod x^q - x, for e in 0..q-1."""
    out = []
    for e in range(q):
        t = e + d
        if t >= q:
            t = (t - 1) % (q - 1) + 1
        out.append(t)
    return tuple(out)


def linrec(h1, h2, smap, c, e, count, q, add, mul, neg):
    """Iterate h_next = x^d*h2 + c*h2 - e*h1 (with smap encoding x^d) count times.

    Returns the list of the ``count`` new terms.
    """
    out = []
    ne = neg[e]
    for _ in range(count):
        nxt = [0] * q
        for k in range(q):
            a = h2[k]
            if a:
                t = smap[k]
                nxt[t] = add[nxt[t] * q + a]
        if c:
            cq = c * q
            for k in range(q):
                a = h2[k]
                if a:
                    nxt[k] = add[nxt[k] * q + mul[cq + a]]
        neq = ne * q
        for k in range(q):
            a = h1[k]
            if a:
                nxt[k] = add[nxt[k] * q + mul[neq + a]]
        h3 = tuple(nxt)
        out.append(h3)
        h1, h2 = h2, h3
    return out


def eval_table(coeffs, q, add, mul):
    """Values of the reduced polynomial at every element, by Horner's rule."""
    out = []
    top = q - 1
    for b in range(q):
        v = 0
        for k in range(top, -1, -1):
            v = add[mul[v * q + b] * q + coeffs[k]]
        out.append(v)
    return tuple(out)


def interpolate(values, q, add, mul, neg):
    """Coefficients of the unique degree < q polynomial with the given value table.

    c_0 = f(0); for 1 <= k <= q-2, c_k = -sum_{b != 0} f(b) b^(q-1-k);
    c_{q-1} = -sum_b f(b).
    """
    acc = [0] * q
    for b in range(1, q):
        v = values[b]
        if not v:
            continue
        # add v * b^j into slot q-1-j, j = 0..q-2
        pw = 1
        for j in range(q - 1):
            slot = q - 1 - j
            acc[slot] = add[acc[slot] * q + mul[v * q + pw]]
            pw = mul[pw * q + b]
    acc[q - 1] = add[acc[q - 1] * q + values[0]]
    out = [neg[a] for a in acc]
    out[0] = values[0]
    return tuple(out)


def polymul_reduced(a, b, q, add, mul):
    """Product of two reduced polynomials, reduced mod x^q - x."""
    out = [0] * q
    for i in range(q):
        x = a[i]
        if not x:
            continue
        xq = x * q
        for j in range(q):
            y = b[j]
            if not y:
                continue
            e = i + j
            if e >= q:
                e = (e - 1) % (q - 1) + 1
            out[e] = add[out[e] * q + mul[xq + y]]
    return tuple(out)
