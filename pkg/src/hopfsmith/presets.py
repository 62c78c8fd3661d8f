"""Preset Hopf algebras: group algebras, function algebras, Sweedler, Taft.

Group presets are driven by Cayley tables (``table[i][j]`` = index of the
product).  Every constructor ends in the axiom checker, so a bad table or an
inadmissible parameter fails loudly.
"""

from __future__ import annotations

from .fields import FieldSpec, Scalar
from .hopf import AlgebraData, CoalgebraData, HopfData, Mat, dual_hopf, validated


# ---------------------------------------------------------------------------
# Cayley tables
# ---------------------------------------------------------------------------

def cyclic_table(n: int) -> list:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3_table() -> list:
    # permutations of {0,1,2} in one-line notation; composition p∘q
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        table.append([index[tuple(p[q[k]] for k in range(3))] for q in perms])
    return table


def q8_table() -> list:
    # elements 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def unsign(x):
        return (x[1:], -1) if x.startswith("-") else (x, 1)

    def sign_apply(x, s):
        if s == 1:
            return x
        return x[1:] if x.startswith("-") else "-" + x

    def mul(a, b):
        xa, sa = unsign(a)
        xb, sb = unsign(b)
        s = sa * sb
        if xa == "1":
            return sign_apply(xb, s)
        if xb == "1":
            return sign_apply(xa, s)
        prod = base[(xa, xb)]
        return sign_apply(prod, s)

    idx = {nm: i for i, nm in enumerate(names)}
    return [[idx[mul(a, b)] for b in names] for a in names]


GROUP_TABLES = {f"C{n}": (lambda n=n: cyclic_table(n)) for n in range(1, 13)}
GROUP_TABLES["S3"] = s3_table
GROUP_TABLES["Q8"] = q8_table


class NotAGroupError(ValueError):
    pass


def check_group_table(table: list):
    """Closure, identity, inverses, associativity; raises with a witness."""
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroupError(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAGroupError(f"entry ({i},{j}) = {v!r} is not an element index")
    identity = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("no two-sided identity element")
    for i in range(n):
        if not any(table[i][j] == identity and table[j][i] == identity for j in range(n)):
            raise NotAGroupError(f"element {i} has no two-sided inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroupError(f"associativity fails at ({i},{j},{k})")
    return identity


def group_inverse(table: list, identity: int, i: int) -> int:
    for j in range(len(table)):
        if table[i][j] == identity and table[j][i] == identity:
            return j
    raise NotAGroupError(f"element {i} has no inverse")


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

def preset_group_algebra(table: list, field: FieldSpec, names=None) -> HopfData:
    """KG with Delta(g) = g(x)g, eps(g) = 1, S(g) = g^{-1}."""
    identity = check_group_table(table)
    n = len(table)
    f = field
    z, o = f.zero, f.one
    mult = [[[z] * n for _ in range(n)] for _ in range(n)]
    comult = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mult[i][j][table[i][j]] = o
        comult[i][i][i] = o
    unit = [z] * n
    unit[identity] = o
    counit = [o] * n
    s = Mat.zeros(f, n, n)
    for i in range(n):
        s.data[group_inverse(table, identity, i)][i] = o
    basis = names or [f"g{i}" for i in range(n)]
    return validated(HopfData(AlgebraData(f, n, mult, unit),
                              CoalgebraData(f, n, comult, counit), s, None, basis))


def preset_function_algebra(table: list, field: FieldSpec) -> HopfData:
    """K^G, realized as the dual of the group algebra."""
    kg = preset_group_algebra(table, field)
    out = dual_hopf(kg)
    out.basis = [f"d{i}" for i in range(len(table))]
    return out


def preset_sweedler(field: FieldSpec) -> HopfData:
    """The 4-dimensional Sweedler algebra on basis {1, g, x, gx}.

    Relations g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g(x)g,
    Delta(x) = x(x)1 + g(x)x; S(g) = g, S(x) = -gx.
    """
    f = field
    if f.characteristic == 2:
        raise ValueError("the Sweedler algebra needs -1 != 1, so char 2 is excluded")
    z, o = f.zero, f.one
    m = f.neg(o)
    n = 4
    E, G, X, GX = 0, 1, 2, 3

    mult = [[[z] * n for _ in range(n)] for _ in range(n)]

    def put(i, j, k, c):
        mult[i][j][k] = c

    # left column: 1·y = y, right: y·1 = y
    for i in range(n):
        put(E, i, i, o)
        put(i, E, i, o)
    put(G, G, E, o)       # g·g = 1
    put(G, X, GX, o)      # g·x = gx
    put(G, GX, X, o)      # g·gx = x
    put(X, G, GX, m)      # x·g = -gx
    put(GX, G, X, m)      # gx·g = g(xg) = -x
    # all products with two x factors vanish: x·x, x·gx, gx·x, gx·gx

    comult = [[[z] * n for _ in range(n)] for _ in range(n)]
    comult[E][E][E] = o
    comult[G][G][G] = o
    comult[X][X][E] = o      # Delta(x) = x(x)1 + g(x)x
    comult[X][G][X] = o
    comult[GX][GX][G] = o    # Delta(gx) = Delta(g)Delta(x) = gx(x)g + 1(x)gx
    comult[GX][E][GX] = o

    unit = [o, z, z, z]
    counit = [o, o, z, z]
    s = Mat.zeros(f, n, n)
    s.data[E][E] = o
    s.data[G][G] = o
    s.data[GX][X] = m       # S(x) = -gx
    s.data[X][GX] = o       # S(gx) = S(x)S(g) = -gx·g = x
    return validated(HopfData(AlgebraData(f, n, mult, unit),
                              CoalgebraData(f, n, comult, counit), s, None,
                              ["1", "g", "x", "gx"]))


def preset_taft(n: int, q: Scalar, field: FieldSpec) -> HopfData:
    """Taft algebra of dimension n^2: g^n = 1, x^n = 0, xg = q·gx.

    Basis g^a x^b at index b*n + a; q must be a primitive n-th root of unity.
    """
    f = field
    q = f.parse(q) if isinstance(q, (int, str)) else q
    if n < 1:
        raise ValueError("n must be positive")
    pw = f.one
    for k in range(1, n):
        pw = f.mul(pw, q)
        if f.eq(pw, f.one):
            raise ValueError(f"q is not a primitive {n}-th root of unity (q^{k} = 1)")
    if not f.eq(f.mul(pw, q), f.one):
        raise ValueError(f"q is not an {n}-th root of unity")

    dim = n * n
    z, o = f.zero, f.one

    def idx(a, b):
        return b * n + a

    qpow = [o]
    for _ in range(n * n):
        qpow.append(f.mul(qpow[-1], q))

    mult = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d >= n:
                        continue
                    # (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
                    mult[idx(a, b)][idx(c, d)][idx((a + c) % n, b + d)] = qpow[b * c]
    unit = [z] * dim
    unit[idx(0, 0)] = o
    alg = AlgebraData(f, dim, mult, unit)

    # comultiplication: extend Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x
    # multiplicatively inside the tensor-square algebra
    def tens(u, v):
        out = [z] * (dim * dim)
        for i, xx in enumerate(u):
            if not xx:
                continue
            for j, yy in enumerate(v):
                if yy:
                    out[i * dim + j] = f.mul(xx, yy)
        return out

    e = [z] * dim
    e[idx(0, 0)] = o
    gv = [z] * dim
    gv[idx(1 % n, 0)] = o
    xv = [z] * dim
    if n > 1:
        xv[idx(0, 1)] = o
    dg = tens(gv, gv)
    dx = [f.add(a2, b2) for a2, b2 in zip(tens(xv, e), tens(gv, xv))]
    d_acc = {}
    cur = tens(e, e)
    for a in range(n):
        inner = cur
        for b in range(n):
            d_acc[idx(a, b)] = inner
            if b + 1 < n:
                inner = alg.mul2(inner, dx)
        if a + 1 < n:
            cur = alg.mul2(cur, dg)
    comult = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for k in range(dim):
        flat = d_acc[k]
        for i in range(dim):
            for j in range(dim):
                comult[k][i][j] = flat[i * dim + j]
    counit = [z] * dim
    for a in range(n):
        counit[idx(a, 0)] = o

    # antipode: S(g) = g^{n-1}, S(x) = -g^{-1} x, extended antimultiplicatively
    sg = [z] * dim
    sg[idx((n - 1) % n, 0)] = o
    sx = [z] * dim
    if n > 1:
        sx_val = f.neg(o)
        sx[idx(n - 1, 1)] = sx_val  # -g^{n-1} x
    s_mat = Mat.zeros(f, dim, dim)
    for a in range(n):
        for b in range(n):
            # S(g^a x^b) = S(x)^b S(g)^a
            acc = e
            for _ in range(b):
                acc = alg.mul(acc, sx)
            for _ in range(a):
                acc = alg.mul(acc, sg)
            for t, val in enumerate(acc):
                if val:
                    s_mat.data[t][idx(a, b)] = val
    def _nm(a, b):
        ga = "" if a == 0 else ("g" if a == 1 else f"g^{a}")
        xb = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
        return (ga + xb) or "1"

    names = [_nm(a, b) for b in range(n) for a in range(n)]
    coa = CoalgebraData(f, dim, comult, counit)
    return validated(HopfData(alg, coa, s_mat, None, names))


# ---------------------------------------------------------------------------
# Preset resolution for the CLI and tests
# ---------------------------------------------------------------------------

def resolve_preset(spec: str, field: FieldSpec) -> HopfData:
    """Build a preset from a name like group:C3, functions:S3, sweedler, taft:3:2."""
    parts = spec.split(":")
    kind = parts[0]
    if kind == "group" and len(parts) == 2:
        name = parts[1]
        if name not in GROUP_TABLES:
            raise ValueError(f"unknown group {name!r}; have {sorted(GROUP_TABLES)}")
        return preset_group_algebra(GROUP_TABLES[name](), field)
    if kind == "functions" and len(parts) == 2:
        name = parts[1]
        if name not in GROUP_TABLES:
            raise ValueError(f"unknown group {name!r}; have {sorted(GROUP_TABLES)}")
        return preset_function_algebra(GROUP_TABLES[name](), field)
    if kind == "sweedler" and len(parts) == 1:
        return preset_sweedler(field)
    if kind == "taft" and len(parts) == 3:
        return preset_taft(int(parts[1]), field.parse(parts[2]), field)
    raise ValueError(f"cannot parse preset spec {spec!r}")
