"""Left-invariant total orders on G_n, decided exactly.

A left order is specified by its positive cone: u < v iff u^-1 v is in
the cone.  Four cone recipes are implemented:

  DD            the one-signed cone: w > 1 iff w is a product of
                positive letters (decide_sign says POSITIVE).
  DDReversed    the mirror: w > 1 iff decide_sign says NEGATIVE.
  DehornoyLike  the <b>-flipped variant: the cyclic subgroup <b> is
                convex for DD, so flipping the order inside it yields a
                new left order.  w > 1 iff w = b^k with k <= -1, or w
                is not a b-power and is DD-positive.
  Conjugated    base order seen through conjugation by g: w > 1 iff
                g w g^-1 > 1 in the base order (the cone g^-1 P g).

b-power membership is decided by the unipotent solver b_power_of, and
equality by the matrix oracle, so ordering verdicts never depend on the
rewriting code agreeing with itself.
"""

from __future__ import annotations

import dataclasses
import enum

from .cone import Sign, decide_sign
from .context import GroupContext
from .oracle import b_power_of, oracle_equal, oracle_is_identity
from .words import (
    GEN_A,
    GEN_B,
    Word,
    concat,
    conjugate,
    enumerate_reduced,
    gen_power,
    invert,
)


class DD:
    """Positive cone = the monoid generated by {a, b}."""

    __slots__ = ()

    def __repr__(self):
        return "DD()"


class DDReversed:
    """Positive cone = the monoid generated by {a^-1, b^-1}."""

    __slots__ = ()

    def __repr__(self):
        return "DDReversed()"


class DehornoyLike:
    """DD with the order flipped on the convex subgroup <b>."""

    __slots__ = ()

    def __repr__(self):
        return "DehornoyLike()"


@dataclasses.dataclass(frozen=True)
class Conjugated:
    """The base order transported along w -> g w g^-1."""

    base: "OrderingSpec"
    g: Word


OrderingSpec = DD | DDReversed | DehornoyLike | Conjugated


class Cmp(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def is_positive(word: Word, spec: OrderingSpec, ctx: GroupContext) -> bool:
    """Is word > identity in the given order?

    >>> from heckeord.context import group_context
    >>> from heckeord.words import parse_word
    >>> ctx = group_context(2)
    >>> is_positive(parse_word("b^-1"), DehornoyLike(), ctx)
    True
    >>> is_positive(parse_word("b"), DehornoyLike(), ctx)
    False
    """
    match spec:
        case DD():
            return decide_sign(word, ctx).verdict is Sign.POSITIVE
        case DDReversed():
            return decide_sign(word, ctx).verdict is Sign.NEGATIVE
        case DehornoyLike():
            k = b_power_of(word, ctx)
            if k is not None:
                return k <= -1
            return decide_sign(word, ctx).verdict is Sign.POSITIVE
        case Conjugated(base=base, g=g):
            return is_positive(conjugate(g, word), base, ctx)
    raise TypeError(f"unknown ordering spec {spec!r}")


def compare(u: Word, v: Word, spec: OrderingSpec, ctx: GroupContext) -> Cmp:
    """Total-order comparison: the sign of u^-1 v in the order's cone."""
    d = concat(invert(u), v)
    if oracle_is_identity(d, ctx):
        return Cmp.EQUAL
    return Cmp.LESS if is_positive(d, spec, ctx) else Cmp.GREATER


def smallest_positive_in_ball(
    spec: OrderingSpec, ctx: GroupContext, max_len: int
) -> Word | None:
    """The order-minimum positive element among words of length <= max_len.

    Returns the earliest-enumerated representative (shortest, then
    lexicographic) of the minimal positive element; None when the ball
    contains no positive element (never happens for max_len >= 1).
    """
    best: Word | None = None
    for w in enumerate_reduced(max_len):
        if not is_positive(w, spec, ctx):
            continue
        if best is None or compare(w, best, spec, ctx) is Cmp.LESS:
            best = w
    return best


@dataclasses.dataclass(frozen=True)
class ConvexityReport:
    """Exhaustive check that <b> is convex for the DD order."""

    n: int
    max_len: int
    sandwich_radius: int  # c was tested against b^-R ... b^R with R = this
    checked: int
    violations: tuple[Word, ...]  # sandwiched words that are not b-powers

    @property
    def ok(self) -> bool:
        return not self.violations


def convexity_check(ctx: GroupContext, max_len: int) -> ConvexityReport:
    """Scan the ball for elements strictly between b^-R and b^R (DD order)
    that are not themselves powers of b.  Convexity of <b> says there are
    none; any hit is returned as a violation.
    """
    radius = max_len
    spec = DD()
    low = gen_power(GEN_B, -radius)
    high = gen_power(GEN_B, radius)
    violations = []
    checked = 0
    for c in enumerate_reduced(max_len):
        checked += 1
        if b_power_of(c, ctx) is not None:
            continue
        if (
            compare(low, c, spec, ctx) is Cmp.LESS
            and compare(c, high, spec, ctx) is Cmp.LESS
        ):
            violations.append(c)
    return ConvexityReport(
        n=ctx.n,
        max_len=max_len,
        sandwich_radius=radius,
        checked=checked,
        violations=tuple(violations),
    )


@dataclasses.dataclass(frozen=True)
class ConvergenceRow:
    element: Word
    verdicts: tuple[bool, ...]  # DehornoyLike-positivity of (b^k a)^-1 w (b^k a)
    stabilized_from: int | None  # least k with all verdicts true from k on


@dataclasses.dataclass(frozen=True)
class ConvergenceReport:
    """Positivity of test elements under the conjugated orders, k = 1..k_max.

    The conjugators are g_k = b^k a.  As k grows these orders converge
    to DehornoyLike; the rows record when each element's verdict locks
    in.  The minima fields compare the smallest positive ball elements
    of DehornoyLike and of the k = 1 conjugated order: the orders are
    genuinely different (b^-1 versus its conjugate a^-1 b^-1 a).
    """

    n: int
    k_max: int
    rows: tuple[ConvergenceRow, ...]
    min_dehornoy_like: Word | None
    min_conjugated: Word | None
    minima_distinct: bool
    minima_ball: int


def convergence_experiment(
    ctx: GroupContext,
    elements: tuple[Word, ...],
    k_max: int,
    minima_ball: int = 5,
) -> ConvergenceReport:
    """Track each element's positivity in the order with cone g_k P g_k^-1,
    g_k = b^k a, P the DehornoyLike cone — i.e. positivity of the moved
    element g_k^-1 w g_k in the base order.  For a flipped-subgroup-
    positive w = b^j a v (v free of negative a letters) the moved element
    is (a^(n-1) b)^(k-j) v b^k a, purely positive once k exceeds j, which
    is the stabilization the rows exhibit.  Note the direction: these
    rows probe Conjugated(DehornoyLike, g_k^-1); Conjugated(base, g)
    itself has cone g^-1 P g, whose least positive element is the moved
    copy g^-1 b^-1 g of the base minimum — the minima fields below use
    exactly that order for g = b a.
    """
    rows = []
    for w in elements:
        verdicts = []
        for k in range(1, k_max + 1):
            g = concat(gen_power(GEN_B, k), gen_power(GEN_A, 1))
            verdicts.append(is_positive(w, Conjugated(DehornoyLike(), invert(g)), ctx))
        stabilized: int | None = None
        for k in range(k_max, 0, -1):
            if not verdicts[k - 1]:
                break
            stabilized = k
        rows.append(ConvergenceRow(w, tuple(verdicts), stabilized))

    g1 = concat(gen_power(GEN_B, 1), gen_power(GEN_A, 1))
    min_dlike = smallest_positive_in_ball(DehornoyLike(), ctx, minima_ball)
    min_conj = smallest_positive_in_ball(Conjugated(DehornoyLike(), g1), ctx, minima_ball)
    distinct = (
        min_dlike is not None
        and min_conj is not None
        and not oracle_equal(min_dlike, min_conj, ctx)
    )
    return ConvergenceReport(
        n=ctx.n,
        k_max=k_max,
        rows=tuple(rows),
        min_dehornoy_like=min_dlike,
        min_conjugated=min_conj,
        minima_distinct=distinct,
        minima_ball=minima_ball,
    )
