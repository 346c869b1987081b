from innerisotope import checks
from innerisotope.errors import NotClosed
from innerisotope.field import PrimeField
from innerisotope.perm import Permutation


def test_verify_all_through_degree_five():
    status, records = checks.verify_all(5)
    failing = [r for r in records if not r.get("pass", True)]
    assert status == 0, failing


def test_every_acceptance_check_passes():
    results = checks.run_acceptance()
    assert len(results) == 15
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


def test_violation_becomes_failure_with_witness():
    def body():
        raise NotClosed("boom", witness=[1, 2])

    r = checks._run("x", body)
    assert not r.passed and r.witness == [1, 2] and r.to_dict()["detail"] == "boom"


def test_sigma_checks_names_are_unique():
    names = [r.name for r in checks.sigma_checks(Permutation.shift(3), PrimeField(43))]
    assert len(names) == len(set(names))
    assert "category.roundtrip" in names and "automorphisms" in names
