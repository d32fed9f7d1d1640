"""Rewriting to the central normal form  w = u * delta^ell  in G_n.

delta = a^(n+1) generates the center of G_n = < a, b | b a^n b = a >.
Every word rewrites to a positive prefix u times a central power:

Phase 1 (inverse elimination, one left-to-right pass).  The relator
gives closed forms for both inverse letters in terms of positive
letters and delta^-1:

    a^-1 = a^n * delta^-1
    b^-1 = delta^-1 * a^n b a^n
    b^-t = delta^-t * a^n (b a^2n)^(t-1) b a^n

Since delta is central, the delta^-1 factors are swept into a single
trailing exponent ell (only decremented here).

Phase 2 (positive reduction, leftmost-first to a fixpoint).  Two rules,
both consequences of the relator:

    r1:  a^m  ->  a^(m mod (n+1)) * delta^(m div (n+1))   when m >= n+1
    r2:  b^s a^n b^t  ->  b^(s-1) a b^(t-1)               when s, t >= 1

(r2 is the relator b a^n b = a applied to the innermost letters.)
Rule applications can merge neighbouring blocks and re-enable rules to
the left, so the scan backs up after each rewrite.  Termination: r2
strictly decreases the b-letter count, r1 the a-letter count with
b-letters unchanged, so (b-letters, a-letters) drops lexicographically.

The resulting prefix is irreducible: alternating positive syllables,
every a-exponent in [1, n], and no b...a^n...b factor.  A purely
positive input never decrements ell, so it ends with ell >= 0.
"""

from __future__ import annotations

import dataclasses

from .context import GroupContext
from .words import GEN_A, GEN_B, RewriteLimitError, Syllable, Word, gen_power, concat


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """A word in the form prefix * delta^ell, prefix a positive word."""

    prefix: Word
    ell: int

    def __post_init__(self):
        assert all(exp > 0 for _, exp in self.prefix)


def _push(sylls: list[Syllable], gen: int, exp: int) -> None:
    """Append gen^exp, merging with the last block (exponents same sign)."""
    if exp == 0:
        return
    if sylls and sylls[-1][0] == gen:
        sylls[-1] = (gen, sylls[-1][1] + exp)
    else:
        sylls.append((gen, exp))


def _eliminate_inverses(word: Word, n: int) -> tuple[list[Syllable], int]:
    """Phase 1: positive syllable list plus the collected central power."""
    out: list[Syllable] = []
    ell = 0
    for gen, exp in word:
        if exp > 0:
            _push(out, gen, exp)
        elif gen == GEN_A:
            ell += exp  # a^-m = a^(n m) delta^-m
            _push(out, GEN_A, n * (-exp))
        else:
            t = -exp  # b^-t = delta^-t a^n (b a^2n)^(t-1) b a^n
            ell -= t
            _push(out, GEN_A, n)
            for _ in range(t - 1):
                _push(out, GEN_B, 1)
                _push(out, GEN_A, 2 * n)
            _push(out, GEN_B, 1)
            _push(out, GEN_A, n)
    return out, ell


def _drop_block(sylls: list[Syllable], i: int) -> None:
    """Remove block i and merge the two (same-generator) neighbours."""
    del sylls[i]
    if 0 < i < len(sylls):
        gen, exp = sylls[i]
        assert sylls[i - 1][0] == gen
        sylls[i - 1] = (gen, sylls[i - 1][1] + exp)
        del sylls[i]


def to_normal_form(word: Word, ctx: GroupContext) -> NormalForm:
    """Rewrite any word of G_n to NormalForm(prefix, ell).

    >>> from heckeord.context import group_context
    >>> from heckeord.words import parse_word, format_word
    >>> nf = to_normal_form(parse_word("b^-2"), group_context(2))
    >>> format_word(nf.prefix), nf.ell
    ('a^2 b a b a^2', -1)
    """
    n, q = ctx.n, ctx.q
    sylls, ell = _eliminate_inverses(word, n)

    budget = sum(abs(e) for _, e in sylls) + 16
    i = 0
    while i < len(sylls):
        gen, exp = sylls[i]
        if gen == GEN_A:
            if exp >= q:
                # r1: absorb whole delta powers into the trailing exponent.
                ell += exp // q
                exp %= q
                if exp:
                    sylls[i] = (GEN_A, exp)
                else:
                    _drop_block(sylls, i)
                i = max(0, i - 3)
                budget -= 1
                if budget < 0:
                    raise RewriteLimitError("normal-form budget exhausted")
                continue
            if exp == n and 0 < i < len(sylls) - 1:
                # r2: b a^n b -> a on the innermost letters of the flanks.
                sylls[i] = (GEN_A, 1)
                left_gen, left_exp = sylls[i - 1]
                right_gen, right_exp = sylls[i + 1]
                assert left_gen == GEN_B and right_gen == GEN_B
                if right_exp > 1:
                    sylls[i + 1] = (GEN_B, right_exp - 1)
                else:
                    _drop_block(sylls, i + 1)
                if left_exp > 1:
                    sylls[i - 1] = (GEN_B, left_exp - 1)
                else:
                    _drop_block(sylls, i - 1)
                i = max(0, i - 3)
                budget -= 1
                if budget < 0:
                    raise RewriteLimitError("normal-form budget exhausted")
                continue
        i += 1
    return NormalForm(prefix=tuple(sylls), ell=ell)


def nf_to_word(nf: NormalForm, ctx: GroupContext) -> Word:
    """The word prefix * a^((n+1) * ell), freely reduced."""
    return concat(nf.prefix, gen_power(GEN_A, ctx.q * nf.ell))


def is_normal_prefix(word: Word, ctx: GroupContext) -> bool:
    """Irreducibility test for a candidate prefix.

    Positive alternating syllables, a-exponents in [1, n], and no
    b a^n b factor (so interior a-exponents are at most n - 1).
    """
    n = ctx.n
    for i, (gen, exp) in enumerate(word):
        if exp <= 0:
            return False
        if gen == GEN_A:
            if exp > n:
                return False
            if exp == n and 0 < i < len(word) - 1:
                return False
    return True
