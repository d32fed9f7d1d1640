"""Shared test configuration: hypothesis profile and word strategies."""

from hypothesis import HealthCheck, settings, strategies as st

from heckeord.words import GEN_A, GEN_B, word_from_syllables

# Exact-arithmetic oracle calls can exceed hypothesis's default deadline
# on cold caches; wall-clock flakiness is noise here, so disable it.
settings.register_profile(
    "heckeord",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("heckeord")


def syllable_lists(max_syllables: int = 6, max_exp: int = 4):
    """Raw (gen, exp) lists; word_from_syllables makes them reduced words."""
    syllable = st.tuples(
        st.sampled_from([GEN_A, GEN_B]),
        st.integers(min_value=-max_exp, max_value=max_exp).filter(lambda e: e != 0),
    )
    return st.lists(syllable, max_size=max_syllables)


def words(max_syllables: int = 6, max_exp: int = 4):
    """Freely reduced words built from random syllable lists."""
    return syllable_lists(max_syllables, max_exp).map(word_from_syllables)
