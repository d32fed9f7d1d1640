"""Independent equality oracle: 2x2 matrices over Z[2cos(pi/q)] plus phi.

G_n = < a, b | b a^n b = a > maps onto the Hecke group of the q-gon
(q = n+1) via

    rho(a) = [[lam, -1], [1, 0]],    rho(b) = [[1, lam], [0, 1]],

with lam = 2cos(pi/q).  One checks rho(b a^n b) = +-rho(a) projectively
and rho(a)^q = +-identity, so rho kills exactly the central subgroup
<delta>, delta = a^q, when n >= 2.  Pairing rho with the abelianized
coordinate phi (which does see delta: phi(delta) = q * phi(a) != 0)
yields an exact identity test:

    w = 1 in G_n   <=>   rho(w) == +-I  and  phi(w) == 0     (n >= 2).

For n = 1 the matrix side degenerates: q = 2 gives lam = 0, so rho(b)
is the identity matrix, and phi(b) = 0 too — the pair is blind to b.
But G_1 is the Klein bottle group (b a b = a), whose elements normalize
uniquely to a^t b^s with multiplication twisted by (t, s) * a^e =
(t + e, (-1)^e s).  The closed form is exact, so for n = 1 the identity
test and b-power extraction use it directly; rho and phi are still
defined (and still satisfy their trace/relator invariants, degenerately).

Everything here is computed with integer arithmetic only.
"""

from __future__ import annotations

import functools

from .algebra import (
    Mat2,
    mat_canonical_sign,
    mat_identity,
    mat_mul,
    mat_pow,
    proj_is_identity,
)
from .context import GroupContext, ring_of
from .words import GEN_A, GEN_B, Word


@functools.lru_cache(maxsize=None)
def _base_matrices(ctx: GroupContext) -> dict[tuple[int, int], Mat2]:
    """Images of a, a^-1, b, b^-1, keyed by (gen, sign)."""
    ring = ring_of(ctx)
    one, zero, lam = ring.one, ring.zero, ring.lam
    neg_one, neg_lam = ring.neg(one), ring.neg(lam)
    return {
        (GEN_A, 1): (lam, neg_one, one, zero),
        (GEN_A, -1): (zero, one, neg_one, lam),
        (GEN_B, 1): (one, lam, zero, one),
        (GEN_B, -1): (one, neg_lam, zero, one),
    }


@functools.lru_cache(maxsize=8192)
def _syllable_matrix(ctx: GroupContext, gen: int, exp: int) -> Mat2:
    ring = ring_of(ctx)
    base = _base_matrices(ctx)[(gen, 1 if exp > 0 else -1)]
    return mat_pow(ring, base, abs(exp))


def rho(word: Word, ctx: GroupContext) -> Mat2:
    """The matrix image of a word (an honest SL2 product, det = 1)."""
    ring = ring_of(ctx)
    acc = mat_identity(ring)
    for gen, exp in word:
        acc = mat_mul(ring, acc, _syllable_matrix(ctx, gen, exp))
    return acc


def phi(word: Word, ctx: GroupContext) -> int:
    """The torsion-free abelianized coordinate of a word."""
    total = 0
    for gen, exp in word:
        total += exp * (ctx.phi_a if gen == GEN_A else ctx.phi_b)
    return total


def klein_pair(word: Word) -> tuple[int, int]:
    """Normal coordinates (t, s) of a word in the Klein bottle group G_1.

    Every element of < a, b | b a b = a > equals a^t b^s for unique
    integers (t, s); right multiplication acts by

        (t, s) * a^e = (t + e, (-1)^e s),      (t, s) * b^e = (t, s + e).

    >>> klein_pair(((GEN_B, 1), (GEN_A, 1), (GEN_B, 1)))   # b a b = a
    (1, 0)
    """
    t, s = 0, 0
    for gen, exp in word:
        if gen == GEN_A:
            t += exp
            if exp % 2:
                s = -s
        else:
            s += exp
    return t, s


def klein_sign(word: Word) -> int:
    """Sign of a word in G_1: +1, -1 or 0, per the one-signed cone.

    The positive cone of G_1 generated by {a, b} is
    {a^t b^s : t > 0} ∪ {b^s : s > 0}; the identity is (0, 0).
    """
    t, s = klein_pair(word)
    if t != 0:
        return 1 if t > 0 else -1
    if s != 0:
        return 1 if s > 0 else -1
    return 0


def oracle_is_identity(word: Word, ctx: GroupContext) -> bool:
    """Exact word-problem test, independent of all rewriting code.

    n >= 2: projective matrix identity plus phi = 0.
    n == 1: Klein bottle closed form (the matrix pair is blind to b there).
    """
    if ctx.n == 1:
        return klein_pair(word) == (0, 0)
    if phi(word, ctx) != 0:
        return False
    ring = ring_of(ctx)
    return proj_is_identity(ring, rho(word, ctx))


def oracle_equal(u: Word, v: Word, ctx: GroupContext) -> bool:
    """True when u and v are the same group element."""
    from .words import concat, invert

    return oracle_is_identity(concat(invert(u), v), ctx)


def b_power_of(word: Word, ctx: GroupContext) -> int | None:
    """The integer k with word = b^k in G_n, or None if there is none.

    For n >= 2: rho(b) is unipotent upper-triangular, rho(b)^k =
    I + k*N with N = [[0, lam], [0, 0]], so a candidate k is read off
    the top-right entry by exact division by lam; membership then needs
    the matrix to match AND phi(word) == k * phi(b), since elements of
    the form b^k * delta^j (j != 0) have the same projective image.

    >>> from heckeord.context import group_context
    >>> b_power_of(((GEN_B, -3),), group_context(2))
    -3
    >>> b_power_of(((GEN_A, 1),), group_context(2)) is None
    True
    """
    if ctx.n == 1:
        t, s = klein_pair(word)
        return s if t == 0 else None
    ring = ring_of(ctx)
    m = rho(word, ctx)
    if m[2] != ring.zero:
        return None
    one, neg_one = ring.one, ring.neg(ring.one)
    if m[0] == one and m[3] == one:
        off = m[1]
    elif m[0] == neg_one and m[3] == neg_one:
        off = ring.neg(m[1])
    else:
        return None
    k = _exact_multiple(ring, off, ring.lam)
    if k is None:
        return None
    # rho(word) is now pinned to +-(I + k N) = +-rho(b)^k, so word differs
    # from b^k by an element of ker rho = <delta>; the central coordinate
    # phi decides whether that central part is trivial.
    if phi(word, ctx) != k * ctx.phi_b:
        return None
    return k


def _exact_multiple(ring, u, v) -> int | None:
    """Solve u == k * v for an integer k, exactly; None if no solution."""
    for i, c in enumerate(v):
        if c != 0:
            if u[i] % c != 0:
                return None
            k = u[i] // c
            return k if u == ring.scal(k, v) else None
    return 0 if u == ring.zero else None


def element_key(word: Word, ctx: GroupContext) -> tuple:
    """A perfect invariant of the group element represented by word.

    n >= 2: sign-canonicalized projective matrix plus phi (faithful,
    since ker rho = <delta> and phi separates central powers).
    n == 1: the Klein pair.
    """
    if ctx.n == 1:
        return klein_pair(word)
    ring = ring_of(ctx)
    return (mat_canonical_sign(ring, rho(word, ctx)), phi(word, ctx))
