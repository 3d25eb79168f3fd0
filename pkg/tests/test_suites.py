import pytest

from ohl.bialgebra_lab import run_law
from ohl.errors import UnknownStructure
from ohl.suites import SUITE_BUILDERS, build_suite, suite_names


@pytest.mark.parametrize("suite", list(SUITE_BUILDERS))
def test_suite_passes_at_degree_three(suite):
    for law in build_suite(suite):
        outcome = run_law(law, 3)
        assert outcome.failure_index is None, f"{law.axiom}: {outcome.witness}"


@pytest.mark.parametrize("suite", ["mr", "associahedron", "maps", "duality"])
def test_suite_passes_at_degree_four(suite):
    for law in build_suite(suite):
        outcome = run_law(law, 4)
        assert outcome.failure_index is None, f"{law.axiom}: {outcome.witness}"


def test_sharded_runs_cover_every_case():
    law = build_suite("symmetric")[1]
    total = run_law(law, 4).cases
    assert all(run_law(law, 4, shard, 3).cases == total for shard in range(3))


def test_suite_names():
    assert suite_names("all") == list(SUITE_BUILDERS)
    assert suite_names("mr") == ["mr"]
    with pytest.raises(UnknownStructure):
        suite_names("nope")
