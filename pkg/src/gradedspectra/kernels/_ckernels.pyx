# cython: language_level=3str, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for subset algebra over finite operation tables.

Same interface as ``pykernels``: tables prepared once per carrier, subsets
as int bitmasks.  Masks are unpacked into flag buffers at the boundary and
all loops run over C arrays.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

NAME = "cython"

ctypedef unsigned char u8

DEF MAXN = 4096   # carriers are bounded far below this


cdef class RingTables:
    cdef public int n
    cdef public int zero
    cdef int[::1] add
    cdef int[::1] mul

    def __init__(self, n, add_flat, mul_flat, zero):
        self.n = n
        self.zero = zero
        self.add = add_flat
        self.mul = mul_flat


cdef class ModuleTables:
    cdef public int n
    cdef public int m
    cdef public int zero
    cdef int[::1] madd
    cdef int[::1] act

    def __init__(self, n, m, madd_flat, act_flat, zero):
        self.n = n
        self.m = m
        self.zero = zero
        self.madd = madd_flat
        self.act = act_flat


cdef _flatten(rows):
    from array import array
    flat = array("i")
    for row in rows:
        flat.extend(row)
    return flat


def prepare_ring(add_rows, mul_rows):
    n = len(add_rows)
    if n > MAXN:
        raise ValueError(f"carrier of size {n} exceeds the kernel bound {MAXN}")
    add_flat = _flatten(add_rows)
    mul_flat = _flatten(mul_rows)
    zero = -1
    for z in range(n):
        row = add_rows[z]
        if all(row[x] == x for x in range(n)):
            zero = z
            break
    if zero < 0:
        raise ValueError("no additive identity in table")
    return RingTables(n, add_flat, mul_flat, zero)


def prepare_module(madd_rows, act_rows):
    m = len(madd_rows)
    n = len(act_rows)
    if m > MAXN or n > MAXN:
        raise ValueError(f"carrier of size {max(m, n)} exceeds the kernel bound {MAXN}")
    madd_flat = _flatten(madd_rows)
    act_flat = _flatten(act_rows)
    zero = -1
    for z in range(m):
        row = madd_rows[z]
        if all(row[x] == x for x in range(m)):
            zero = z
            break
    if zero < 0:
        raise ValueError("no additive identity in table")
    return ModuleTables(n, m, madd_flat, act_flat, zero)


cdef inline bytes _unpack(object mask, int n):
    # bit-packed little-endian bytes of length ceil(n/8)
    return mask.to_bytes((n + 7) >> 3, "little")


cdef void _fill_flags(bytes packed, u8 *flags, int n):
    cdef int i
    cdef const u8 *src = <const u8 *> packed
    for i in range(n):
        flags[i] = (src[i >> 3] >> (i & 7)) & 1


cdef object _pack_flags(u8 *flags, int n):
    cdef int nb = (n + 7) >> 3
    cdef bytes out = PyBytes_FromStringAndSize(NULL, nb)
    cdef u8 *dst = <u8 *> out
    cdef int i
    for i in range(nb):
        dst[i] = 0
    for i in range(n):
        if flags[i]:
            dst[i >> 3] |= <u8> (1 << (i & 7))
    return int.from_bytes(out, "little")


cdef int _members(bytes packed, int *out, int n):
    cdef int i, k = 0
    cdef const u8 *src = <const u8 *> packed
    for i in range(n):
        if (src[i >> 3] >> (i & 7)) & 1:
            out[k] = i
            k += 1
    return k


def ring_orbit(RingTables rt, int a):
    """Mask of R*a.  In a commutative unital ring this is the principal ideal."""
    cdef u8 flags[MAXN]
    cdef int i, n = rt.n
    for i in range(n):
        flags[i] = 0
    for i in range(n):
        flags[rt.mul[i * n + a]] = 1
    return _pack_flags(flags, n)


def set_sums(RingTables rt, object amask, object bmask):
    """Mask of pairwise sums {a + b}.  For two ideals this is the ideal sum."""
    cdef int n = rt.n
    cdef int amem[MAXN]
    cdef int bmem[MAXN]
    cdef int na = _members(_unpack(amask, n), amem, n)
    cdef int nb = _members(_unpack(bmask, n), bmem, n)
    cdef u8 out[MAXN]
    cdef int i, j, base
    for i in range(n):
        out[i] = 0
    for i in range(na):
        base = amem[i] * n
        for j in range(nb):
            out[rt.add[base + bmem[j]]] = 1
    return _pack_flags(out, n)


def set_products(RingTables rt, object amask, object bmask):
    cdef int n = rt.n
    cdef int amem[MAXN]
    cdef int bmem[MAXN]
    cdef int na = _members(_unpack(amask, n), amem, n)
    cdef int nb = _members(_unpack(bmask, n), bmem, n)
    cdef u8 out[MAXN]
    cdef int i, j, base
    for i in range(n):
        out[i] = 0
    for i in range(na):
        base = amem[i] * n
        for j in range(nb):
            out[rt.mul[base + bmem[j]]] = 1
    return _pack_flags(out, n)


def additive_closure(RingTables rt, object seed):
    """Smallest subset containing ``seed`` and the zero that is closed under +."""
    cdef int n = rt.n
    cdef u8 flags[MAXN]
    cdef int stack[MAXN]
    cdef int member[MAXN]
    cdef int i, x, y, s, top = 0, count = 0
    _fill_flags(_unpack(seed, n), flags, n)
    flags[rt.zero] = 1
    for i in range(n):
        if flags[i]:
            stack[top] = i
            top += 1
            member[count] = i
            count += 1
    while top > 0:
        top -= 1
        x = stack[top]
        for i in range(count):
            y = member[i]
            s = rt.add[x * n + y]
            if not flags[s]:
                flags[s] = 1
                stack[top] = s
                top += 1
                member[count] = s
                count += 1
    return _pack_flags(flags, n)


def module_orbit(ModuleTables mt, int x):
    """Mask of R*x, the cyclic submodule generated by x."""
    cdef u8 flags[MAXN]
    cdef int i, m = mt.m, n = mt.n
    for i in range(m):
        flags[i] = 0
    for i in range(n):
        flags[mt.act[i * m + x]] = 1
    return _pack_flags(flags, m)


def module_set_sums(ModuleTables mt, object amask, object bmask):
    cdef int m = mt.m
    cdef int amem[MAXN]
    cdef int bmem[MAXN]
    cdef int na = _members(_unpack(amask, m), amem, m)
    cdef int nb = _members(_unpack(bmask, m), bmem, m)
    cdef u8 out[MAXN]
    cdef int i, j, base
    for i in range(m):
        out[i] = 0
    for i in range(na):
        base = amem[i] * m
        for j in range(nb):
            out[mt.madd[base + bmem[j]]] = 1
    return _pack_flags(out, m)


def scalar_image(ModuleTables mt, int r, object smask):
    cdef int m = mt.m
    cdef int mem[MAXN]
    cdef int k = _members(_unpack(smask, m), mem, m)
    cdef u8 out[MAXN]
    cdef int i, base = r * m
    for i in range(m):
        out[i] = 0
    for i in range(k):
        out[mt.act[base + mem[i]]] = 1
    return _pack_flags(out, m)


def ann_in_ring(ModuleTables mt, object smask):
    """Mask (over the ring carrier) of {r : r*s = 0 for all s in S}."""
    cdef int m = mt.m, n = mt.n, zero = mt.zero
    cdef int mem[MAXN]
    cdef int k = _members(_unpack(smask, m), mem, m)
    cdef u8 out[MAXN]
    cdef int r, i, base
    cdef bint ok
    for r in range(n):
        base = r * m
        ok = 1
        for i in range(k):
            if mt.act[base + mem[i]] != zero:
                ok = 0
                break
        out[r] = 1 if ok else 0
    return _pack_flags(out, n)


def ann_in_module(ModuleTables mt, object imask):
    """Mask (over the module carrier) of {x : r*x = 0 for all r in I}."""
    cdef int m = mt.m, n = mt.n, zero = mt.zero
    cdef int mem[MAXN]
    cdef int k = _members(_unpack(imask, n), mem, n)
    cdef u8 out[MAXN]
    cdef int x, i
    cdef bint ok
    for x in range(m):
        ok = 1
        for i in range(k):
            if mt.act[mem[i] * m + x] != zero:
                ok = 0
                break
        out[x] = 1 if ok else 0
    return _pack_flags(out, m)


def is_second_set(ModuleTables mt, object hom_mask, object smask):
    """True iff r*S is S or {0} for every r in the given scalar set."""
    cdef int m = mt.m, n = mt.n, zero = mt.zero
    cdef u8 sflags[MAXN]
    cdef u8 image[MAXN]
    cdef int mem[MAXN]
    cdef int rmem[MAXN]
    cdef int k, nr, i, j, r, base, img_count
    cdef bint is_zero_img, same
    _fill_flags(_unpack(smask, m), sflags, m)
    k = _members(_unpack(smask, m), mem, m)
    if k == 0 or (k == 1 and mem[0] == zero):
        return False
    nr = _members(_unpack(hom_mask, n), rmem, n)
    for i in range(nr):
        r = rmem[i]
        base = r * m
        for j in range(m):
            image[j] = 0
        for j in range(k):
            image[mt.act[base + mem[j]]] = 1
        # image == {0}?
        is_zero_img = 1
        for j in range(m):
            if image[j] and j != zero:
                is_zero_img = 0
                break
        if is_zero_img:
            continue
        same = 1
        for j in range(m):
            if image[j] != sflags[j]:
                same = 0
                break
        if not same:
            return False
    return True
