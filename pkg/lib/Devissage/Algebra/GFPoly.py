# Dense polynomials over F_p as plain lists of ints, constant term first.
#
# These helpers carry the heavy modular work (distinct-degree factorization,
# trace invariants) where wrapping every coefficient in an object would be
# far too slow for thousand-digit p. Every function returns stripped lists
# with entries in [0, p).

# Above this many bits per coefficient we multiply by Kronecker substitution
KRONECKER_BITS = 256


def gf_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_from_ints(coeffs, p):
    return gf_strip([c % p for c in coeffs])


def gf_degree(a):
    return len(a) - 1


def gf_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] = (res[i] + c) % p
    return gf_strip(res)


def gf_sub(a, b, p):
    res = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        res[i] = (res[i] - c) % p
    return gf_strip(res)


def gf_neg(a, p):
    return gf_strip([(-c) % p for c in a])


def gf_scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return gf_strip([x * c % p for x in a])


def _kronecker_width(a, b, p):
    terms = min(len(a), len(b))
    bits = 2 * p.bit_length() + terms.bit_length() + 1
    return (bits + 7) // 8


def _kronecker_pack(a, width):
    return int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in a), "little"
    )


def _kronecker_unpack(n, width, count, p):
    raw = n.to_bytes(width * count, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") % p
        for i in range(count)
    ]


def gf_mul(a, b, p):
    if not a or not b:
        return []
    if p.bit_length() > KRONECKER_BITS and len(a) > 2 and len(b) > 2:
        # Pack both operands into single integers and let the big-int
        # multiplication do the convolution.
        width = _kronecker_width(a, b, p)
        product = _kronecker_pack(a, width) * _kronecker_pack(b, width)
        return gf_strip(_kronecker_unpack(product, width, len(a) + len(b) - 1, p))
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return gf_strip([c % p for c in res])


def gf_sqr(a, p):
    if not a:
        return []
    if p.bit_length() > KRONECKER_BITS and len(a) > 2:
        width = _kronecker_width(a, a, p)
        packed = _kronecker_pack(a, width)
        return gf_strip(_kronecker_unpack(packed * packed, width, 2 * len(a) - 1, p))
    n = len(a)
    res = [0] * (2 * n - 1)
    for i in range(n):
        x = a[i]
        if x == 0:
            continue
        res[2 * i] += x * x
        x2 = 2 * x
        for j in range(i + 1, n):
            res[i + j] += x2 * a[j]
    return gf_strip([c % p for c in res])


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero mod %d" % p)
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], gf_strip(r)
    inv = pow(b[-1], -1, p) if b[-1] != 1 else 1
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c == 0:
            continue
        c = c * inv % p
        q[k] = c
        for j in range(db + 1):
            r[k + j] -= c * b[j]
    return gf_strip(q), gf_strip([c % p for c in r[:db]])


def gf_rem(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_quo(a, b, p):
    return gf_divmod(a, b, p)[0]


def gf_monic(a, p):
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return gf_scale(a, pow(a[-1], -1, p), p)


def gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_deriv(a, p):
    return gf_strip([(i * c) % p for i, c in enumerate(a)][1:])


def gf_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def gf_mulmod(a, b, f, p):
    return gf_rem(gf_mul(a, b, p), f, p)


def gf_powx_mod(n, f, p):
    # x^n mod f by square-and-multiply; the multiply step is a shift
    result = [1]
    for bit in bin(n)[2:]:
        result = gf_rem(gf_sqr(result, p), f, p)
        if bit == "1":
            result = gf_rem([0] + result, f, p)
    return result


def gf_pow_mod(a, n, f, p):
    result = [1]
    base = gf_rem(a, f, p)
    for bit in bin(n)[2:]:
        result = gf_rem(gf_sqr(result, p), f, p)
        if bit == "1":
            result = gf_mulmod(result, base, f, p)
    return result


def gf_power_table(x, f, p):
    # [1, x, x^2, ..., x^(deg f - 1)] reduced mod f
    table = [[1]]
    for _ in range(1, len(f) - 1):
        table.append(gf_mulmod(table[-1], x, f, p))
    return table


def gf_compose_mod(g, table, f, p):
    # g(X) mod f where table holds the powers of X mod f. Since deg g < deg f
    # this is a linear combination of precomputed rows, no multiplications
    # of polynomials are needed.
    res = [0] * max(len(t) for t in table)
    for j, c in enumerate(g):
        if c == 0:
            continue
        for i, t in enumerate(table[j]):
            res[i] += c * t
    return gf_rem(gf_strip([c % p for c in res]), f, p)


def gf_is_squarefree(a, p):
    if len(a) <= 2:
        return True
    d = gf_deriv(a, p)
    if not d:
        return False
    return len(gf_gcd(a, d, p)) == 1


def gf_roots(a, p):
    # Roots in F_p with multiplicity by exhaustive search; for small p only
    roots = []
    a = gf_monic(a, p)
    for r in range(p):
        while len(a) > 1 and gf_eval(a, r, p) == 0:
            roots.append(r)
            a = gf_quo(a, [(-r) % p, 1], p)
    return roots


def gf_is_irreducible(f, p):
    # Rabin style: f is irreducible iff gcd(x^(p^i) - x, f) = 1 for
    # i <= deg/2 and f is squarefree.
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    f = gf_monic(f, p)
    if not gf_is_squarefree(f, p):
        return False
    x = gf_powx_mod(p, f, p)
    table = gf_power_table(x, f, p)
    h = x
    for i in range(1, n // 2 + 1):
        if len(gf_gcd(f, gf_sub(h, [0, 1], p), p)) > 1:
            return False
        h = gf_compose_mod(h, table, f, p)
    return True


def gf_inverse_mod(a, f, p):
    # Extended Euclid: returns u with u*a = 1 mod f, for a coprime to f
    r0, r1 = list(f), gf_rem(a, f, p)
    s0, s1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("polynomial is not invertible modulo f")
    return gf_scale(s0, pow(r0[0], -1, p), p)
