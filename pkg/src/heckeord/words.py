"""Freely reduced words over a two-letter alphabet, as syllable tuples.

A word is a tuple of syllables; a syllable is a pair (gen, exp) with
gen in {GEN_A, GEN_B} and exp a nonzero int.  Adjacent syllables always
carry distinct generators, so every word value is freely reduced by
construction.  The empty tuple is the identity.

Words are deliberately plain tuples rather than a wrapper class: the
decision procedures in this package churn through ~10^5 words per run,
and tuples hash/compare/slice at C speed.  All structure lives in the
functions below.

The same representation serves two concrete alphabets: (a, b) for the
one-relator groups studied here, and (s1, s2) for 3-strand braids.  The
alphabet only matters at the parse/format boundary.

>>> w = parse_word("a^2 b^-1 a")
>>> w
((0, 2), (1, -1), (0, 1))
>>> format_word(invert(w))
'a^-1 b a^-2'
>>> format_word(concat(w, invert(w)))
'1'
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

GEN_A = 0
GEN_B = 1

ALPHABET_AB = ("a", "b")
ALPHABET_SIGMA = ("s1", "s2")

Syllable = tuple[int, int]
Word = tuple[Syllable, ...]

IDENTITY_WORD: Word = ()


class WordSyntaxError(ValueError):
    """Raised on malformed word text; .offset is the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class RewriteLimitError(RuntimeError):
    """A rewriting loop exceeded its step cap.

    Every rewriting procedure in this package terminates by a proved
    measure; the caps are tripwires, so seeing this exception means a bug.
    """


def word_from_syllables(syllables: Iterable[Syllable]) -> Word:
    """Build a word, merging/cancelling adjacent same-generator syllables.

    >>> word_from_syllables([(GEN_A, 2), (GEN_A, 1), (GEN_B, -1)])
    ((0, 3), (1, -1))
    >>> word_from_syllables([(GEN_A, 2), (GEN_A, -2)])
    ()
    """
    out: list[Syllable] = []
    for gen, exp in syllables:
        if gen not in (GEN_A, GEN_B):
            raise ValueError(f"unknown generator index {gen!r}")
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
                continue
            out[-1] = (gen, merged)
        else:
            out.append((gen, exp))
    return tuple(out)


def concat(*parts: Word) -> Word:
    """Freely reduced concatenation of words.

    >>> concat(parse_word("a b"), parse_word("b^-1 a^-1"))
    ()
    """
    out: list[Syllable] = []
    for part in parts:
        for gen, exp in part:
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                if merged == 0:
                    out.pop()
                else:
                    out[-1] = (gen, merged)
            else:
                out.append((gen, exp))
    return tuple(out)


def invert(word: Word) -> Word:
    """Group inverse: reverse the syllables and flip the exponents."""
    return tuple((gen, -exp) for gen, exp in reversed(word))


def gen_power(gen: int, exp: int) -> Word:
    """The word gen^exp (empty when exp == 0)."""
    if exp == 0:
        return ()
    return ((gen, exp),)


def letter_length(word: Word) -> int:
    """Number of letters, i.e. the sum of |exponent| over syllables.

    >>> letter_length(parse_word("a^2 b^-3"))
    5
    """
    return sum(abs(exp) for _, exp in word)


def conjugate(g: Word, w: Word) -> Word:
    """g * w * g^-1, freely reduced."""
    return concat(g, w, invert(g))


def parse_word(text: str, alphabet: tuple[str, str] = ALPHABET_AB) -> Word:
    """Parse "a^2 b^-1 a" style text into a freely reduced word.

    Grammar: a word is "1" (the identity) or whitespace-separated terms,
    each term being a generator name optionally followed by ^<nonzero int>.
    The result is freely reduced, so e.g. "a a^-1" parses to the identity.

    >>> parse_word("1")
    ()
    >>> parse_word("s1 s2^-2", ALPHABET_SIGMA)
    ((0, 1), (1, -2))
    """
    stripped = text.strip()
    if stripped == "1":
        return ()
    if not stripped:
        raise WordSyntaxError("empty input (write '1' for the identity)", 0)
    gen_of = {alphabet[0]: GEN_A, alphabet[1]: GEN_B}
    syllables: list[Syllable] = []
    pos = 0
    for token in text.split():
        offset = text.index(token, pos)
        pos = offset + len(token)
        name, sep, exp_text = token.partition("^")
        if name not in gen_of:
            raise WordSyntaxError(
                f"unknown generator {name!r} (alphabet: {alphabet[0]}, {alphabet[1]})",
                offset,
            )
        if sep:
            try:
                exp = int(exp_text)
            except ValueError:
                raise WordSyntaxError(f"bad exponent {exp_text!r}", offset) from None
            if exp == 0:
                raise WordSyntaxError("zero exponent not allowed", offset)
        else:
            exp = 1
        syllables.append((gen_of[name], exp))
    return word_from_syllables(syllables)


def format_word(word: Word, alphabet: tuple[str, str] = ALPHABET_AB) -> str:
    """Inverse of parse_word; the identity prints as "1".

    >>> format_word(((GEN_A, 2), (GEN_B, -1), (GEN_A, 1)))
    'a^2 b^-1 a'
    """
    if not word:
        return "1"
    parts = []
    for gen, exp in word:
        name = alphabet[gen]
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


# Letters in enumeration order: a, a^-1, b, b^-1.
_SIGNED_LETTERS: tuple[Syllable, ...] = ((GEN_A, 1), (GEN_A, -1), (GEN_B, 1), (GEN_B, -1))
_POSITIVE_LETTERS: tuple[Syllable, ...] = ((GEN_A, 1), (GEN_B, 1))


def enumerate_reduced(max_len: int, signed: bool = True) -> Iterator[Word]:
    """Yield all freely reduced words of letter length <= max_len.

    Order: by length, then lexicographically in the letter order
    a < a^-1 < b < b^-1.  The identity comes first.  With signed=False
    only positive letters are used (the free monoid on a, b).

    There are 4 * 3^(L-1) reduced words of length L >= 1, so max_len=8
    yields 1 + 4 + 12 + ... + 8748 = 13121 words.

    >>> [format_word(w) for w in enumerate_reduced(1)]
    ['1', 'a', 'a^-1', 'b', 'b^-1']
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    yield ()
    letters = _SIGNED_LETTERS if signed else _POSITIVE_LETTERS

    def extend(prefix: list[Syllable], length: int, target: int) -> Iterator[Word]:
        for gen, exp in letters:
            if prefix and prefix[-1][0] == gen and prefix[-1][1] * exp < 0:
                continue  # would cancel: not freely reduced
            if prefix and prefix[-1][0] == gen:
                prefix[-1] = (gen, prefix[-1][1] + exp)
                popped: Syllable | None = (gen, prefix[-1][1] - exp)
            else:
                prefix.append((gen, exp))
                popped = None
            if length + 1 == target:
                yield tuple(prefix)
            else:
                yield from extend(prefix, length + 1, target)
            if popped is None:
                prefix.pop()
            else:
                prefix[-1] = popped

    for target in range(1, max_len + 1):
        yield from extend([], 0, target)


def is_one_signed(word: Word) -> bool:
    """True when every exponent has the same sign (vacuously for the identity)."""
    if not word:
        return True
    sign = 1 if word[0][1] > 0 else -1
    return all(exp * sign > 0 for _, exp in word)


def is_positive_word(word: Word) -> bool:
    """True when nonempty and every exponent is positive."""
    return bool(word) and all(exp > 0 for _, exp in word)
