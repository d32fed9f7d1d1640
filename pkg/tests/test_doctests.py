"""Every usage example embedded in the library must execute as shown."""

import doctest

import pytest

import heckeord.algebra
import heckeord.braid3
import heckeord.cli
import heckeord.cone
import heckeord.context
import heckeord.normalform
import heckeord.oracle
import heckeord.orderings
import heckeord.suites
import heckeord.words

MODULES_WITH_EXAMPLES = [
    heckeord.algebra,
    heckeord.braid3,
    heckeord.cone,
    heckeord.context,
    heckeord.normalform,
    heckeord.oracle,
    heckeord.orderings,
    heckeord.words,
]


@pytest.mark.parametrize(
    "module", MODULES_WITH_EXAMPLES, ids=lambda m: m.__name__.split(".")[-1]
)
def test_module_examples(module):
    results = doctest.testmod(module, verbose=False)
    assert results.failed == 0
    assert results.attempted > 0


@pytest.mark.parametrize("module", [heckeord.cli, heckeord.suites],
                         ids=("cli", "suites"))
def test_examples_clean_if_present(module):
    results = doctest.testmod(module, verbose=False)
    assert results.failed == 0
