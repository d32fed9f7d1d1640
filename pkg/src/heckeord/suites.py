"""Exhaustive self-check suites and small experiment drivers.

Everything here treats the rewriting machinery (normalform, cone) and
the matrix oracle as two independent computations of the same group
and demands they agree on every word of a ball.  A violation report
therefore always names a concrete word and the check it failed.
"""

from __future__ import annotations

import dataclasses
import multiprocessing

from .cone import Sign, decide_sign, expand_handle
from .context import GroupContext
from .oracle import element_key, oracle_is_identity
from .words import (
    GEN_A,
    GEN_B,
    Word,
    concat,
    enumerate_reduced,
    format_word,
    gen_power,
    invert,
    is_one_signed,
)

_MIRROR = {
    Sign.POSITIVE.value: Sign.NEGATIVE.value,
    Sign.NEGATIVE.value: Sign.POSITIVE.value,
    Sign.IDENTITY.value: Sign.IDENTITY.value,
}


@dataclasses.dataclass(frozen=True)
class SuiteReport:
    n: int
    max_len: int
    total_words: int
    counts: dict  # verdict -> how many ball words got it
    violations: tuple  # (word string, check name, detail) triples

    @property
    def ok(self) -> bool:
        return not self.violations


def _examine(ctx: GroupContext, word: Word):
    """One ball word: verdict plus any violations of the local checks."""
    violations = []
    result = decide_sign(word, ctx)
    witness = result.witness
    if result.verdict is Sign.IDENTITY:
        if witness != ():
            violations.append((format_word(word), "witness-shape", "identity verdict with nonempty witness"))
    else:
        want_positive = result.verdict is Sign.POSITIVE
        if not witness or not is_one_signed(witness) or (witness[0][1] > 0) != want_positive:
            violations.append(
                (format_word(word), "witness-shape", f"not one-signed for {result.verdict.value}: {format_word(witness)}")
            )
    if not oracle_is_identity(concat(invert(word), witness), ctx):
        violations.append(
            (format_word(word), "witness-equality", f"witness {format_word(witness)} is not the same element")
        )
    if (result.verdict is Sign.IDENTITY) != oracle_is_identity(word, ctx):
        violations.append(
            (format_word(word), "oracle-agreement", f"verdict {result.verdict.value} contradicts the oracle")
        )
    return result.verdict.value, violations


def _examine_chunk(args):
    ctx, chunk = args
    return [(word, *_examine(ctx, word)) for word in chunk]


def run_trichotomy_suite(ctx: GroupContext, max_len: int, jobs: int = 1) -> SuiteReport:
    """Check every word of the ball against the oracle, plus mirroring.

    Per word: the trichotomy verdict must match the oracle's identity
    test, the witness must be one-signed with the verdict's sign, and
    the witness must equal the word as a group element.  Across words:
    inverting a word must mirror its verdict.
    """
    words = list(enumerate_reduced(max_len))
    if jobs > 1:
        chunks = [(ctx, words[i::jobs]) for i in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            chunk_rows = pool.map(_examine_chunk, chunks)
        by_word = {row[0]: row for rows in chunk_rows for row in rows}
        rows = [by_word[w] for w in words]  # restore enumeration order
    else:
        rows = [(w, *_examine(ctx, w)) for w in words]

    counts = {s.value: 0 for s in Sign}
    violations = []
    verdict_of = {}
    for word, verdict, word_violations in rows:
        counts[verdict] += 1
        violations.extend(word_violations)
        verdict_of[word] = verdict
    for word, verdict, _ in rows:
        if verdict_of[invert(word)] != _MIRROR[verdict]:
            violations.append(
                (format_word(word), "inverse-mirror", f"{verdict} vs {verdict_of[invert(word)]} for the inverse")
            )
    return SuiteReport(
        n=ctx.n,
        max_len=max_len,
        total_words=len(words),
        counts=counts,
        violations=tuple(violations),
    )


@dataclasses.dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: str
    rhs: str
    holds: bool


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    n: int
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)


def run_identity_suite(ctx: GroupContext) -> IdentityReport:
    """Oracle-check a battery of word identities that the rewriting
    machinery relies on (centrality, the handle identity, conjugation
    formulas).  Each is stated as lhs = rhs and tested as lhs rhs^-1 = 1.
    """
    n = ctx.n
    a, b = gen_power(GEN_A, 1), gen_power(GEN_B, 1)
    delta = gen_power(GEN_A, ctx.q)
    pairs: list[tuple[str, Word, Word]] = [
        ("relator", concat(b, gen_power(GEN_A, n), b), a),
        ("center-vs-a", concat(delta, a), concat(a, delta)),
        ("center-vs-b", concat(delta, b), concat(b, delta)),
        ("b-inverse-elimination", concat(invert(a), b, gen_power(GEN_A, n)), invert(b)),
    ]
    for k in range(1, 6):
        pairs.append(
            (
                f"handle-k{k}",
                concat(a, gen_power(GEN_B, k), invert(a)),
                expand_handle(k, ctx),
            )
        )
    for r in range(1, 6):
        conj = concat(invert(a), gen_power(GEN_B, -r), a)
        rhs = concat(*([concat(gen_power(GEN_A, n - 1), b)] * r))
        pairs.append((f"flip-b-power-r{r}", conj, rhs))
    if n >= 2:
        # The crossing product (ab)^-2 (ab^2) (ab)^4 rewrites to a single
        # descending staircase; its all-but-last letters are negative, so
        # no order with a, b positive can be Conradian.
        ab = concat(a, b)
        lhs = concat(invert(ab), invert(ab), a, b, b, ab, ab, ab, ab)
        block = concat(gen_power(GEN_A, -(n - 2)), invert(b))
        rhs = concat(
            gen_power(GEN_B, -2), block, block, block, gen_power(GEN_A, -(n - 1)), b
        )
        pairs.append(("crossing-expansion", lhs, rhs))

    checks = []
    for name, lhs, rhs in pairs:
        holds = oracle_is_identity(concat(lhs, invert(rhs)), ctx)
        checks.append(IdentityCheck(name, format_word(lhs), format_word(rhs), holds))
    return IdentityReport(n=ctx.n, checks=tuple(checks))


def verify_family_identity(m: int, n: int) -> bool:
    """Oriented-rewrite check in the two-parameter group
    < a, b | b^-1 a^m b^-1 = a^n >:  the word

        W = a^(1-n) b^-1 a^(m+n-1) a^(1-n) b^-1

    must rewrite to the single letter a using only free reduction and
    the oriented rule b^-1 a^m b^-1 -> a^n (consuming one b^-1 letter
    from each flanking block; the a-exponent must match exactly).
    Returns False when the bounded search (100 steps) does not reach a.
    """
    if m < 1 or n < 1:
        raise ValueError("family parameters must be >= 1")
    w = concat(
        gen_power(GEN_A, 1 - n),
        gen_power(GEN_B, -1),
        gen_power(GEN_A, m + n - 1),
        gen_power(GEN_A, 1 - n),
        gen_power(GEN_B, -1),
    )
    sylls = list(w)
    for _ in range(100):
        hit = None
        for i in range(len(sylls) - 2):
            if (
                sylls[i][0] == GEN_B
                and sylls[i][1] <= -1
                and sylls[i + 1] == (GEN_A, m)
                and sylls[i + 2][0] == GEN_B
                and sylls[i + 2][1] <= -1
            ):
                hit = i
                break
        if hit is None:
            break
        i = hit
        replacement = [
            (GEN_B, sylls[i][1] + 1),
            (GEN_A, n),
            (GEN_B, sylls[i + 2][1] + 1),
        ]
        sylls = list(
            concat(tuple(sylls[:i]), tuple(s for s in replacement if s[1] != 0), tuple(sylls[i + 3 :]))
        )
    else:
        return False  # rewrite budget exhausted without reaching a fixpoint
    return tuple(sylls) == ((GEN_A, 1),)


@dataclasses.dataclass(frozen=True)
class CayleyBall:
    n: int
    radius: int
    nodes: tuple  # (word string, verdict string) in BFS discovery order
    edges: tuple  # (source word, target word, generator name)


_BALL_LETTERS = ((GEN_A, 1), (GEN_A, -1), (GEN_B, 1), (GEN_B, -1))


def build_cayley_ball(ctx: GroupContext, radius: int) -> CayleyBall:
    """BFS ball of the Cayley graph (right multiplication), with one
    node per group element — deduplicated by the exact element key, so
    distinct words for the same element collapse.
    """
    start: Word = ()
    node_word = {element_key(start, ctx): start}
    order = [start]
    frontier = [start]
    for _ in range(radius):
        new_frontier = []
        for w in frontier:
            for letter in _BALL_LETTERS:
                nxt = concat(w, (letter,))
                key = element_key(nxt, ctx)
                if key not in node_word:
                    node_word[key] = nxt
                    order.append(nxt)
                    new_frontier.append(nxt)
        frontier = new_frontier

    keys = set(node_word)
    nodes = tuple(
        (format_word(w), decide_sign(w, ctx).verdict.value) for w in order
    )
    edges = []
    for w in order:
        for gen, name in ((GEN_A, "a"), (GEN_B, "b")):
            nxt = concat(w, ((gen, 1),))
            key = element_key(nxt, ctx)
            if key in keys:
                edges.append((format_word(w), format_word(node_word[key]), name))
    return CayleyBall(n=ctx.n, radius=radius, nodes=nodes, edges=tuple(edges))


_VERDICT_FILL = {
    "positive": ("black", "white"),
    "negative": ("white", "black"),
    "identity": ("gray", "black"),
}


def render_cayley_dot(ball: CayleyBall) -> str:
    """Graphviz source; positive elements filled black, negative white,
    the identity gray — the sign structure is visible at a glance.
    """
    lines = [
        f"digraph cayley_n{ball.n}_r{ball.radius} {{",
        '  node [shape=circle fontname="monospace"];',
    ]
    for word, verdict in ball.nodes:
        fill, font = _VERDICT_FILL[verdict]
        lines.append(
            f'  "{word}" [style=filled fillcolor={fill} fontcolor={font}];'
        )
    for source, target, gen in ball.edges:
        color = "black" if gen == "a" else "steelblue"
        lines.append(f'  "{source}" -> "{target}" [label={gen} color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cayley_ball_dict(ball: CayleyBall) -> dict:
    return {
        "n": ball.n,
        "radius": ball.radius,
        "nodes": [{"word": w, "verdict": v} for w, v in ball.nodes],
        "edges": [
            {"from": s, "to": t, "generator": g, "direction": "right"}
            for s, t, g in ball.edges
        ],
    }


def export_cayley_ball(ctx: GroupContext, radius: int, fmt: str) -> str:
    import json

    if not 0 <= radius <= 6:
        raise ValueError("cayley export supports radius 0..6")
    ball = build_cayley_ball(ctx, radius)
    if fmt == "dot":
        return render_cayley_dot(ball)
    if fmt == "json":
        return json.dumps(cayley_ball_dict(ball), indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown Cayley export format {fmt!r}")
