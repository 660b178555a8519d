import pytest

from homweyl.sampling import (
    make_rng,
    monomials_of_degree,
    monomials_up_to,
    random_poly,
    random_twist,
    random_twist_pair,
    random_twist_with_nonzero_count,
)
from homweyl.selftest import SUITES, SuiteResult, run_selftest, run_suite


class TestSampling:
    """Seeded generators"""

    def test_same_seed_same_draws(self):
        """make_rng is deterministic per (seed, salt)"""
        first = [random_poly(make_rng(7, "a"), 2, 3) for _ in range(3)]
        second = [random_poly(make_rng(7, "a"), 2, 3) for _ in range(3)]
        assert first == second

    def test_salt_separates_streams(self):
        """Different salts give different generators"""
        assert make_rng(1, "a").random() != make_rng(1, "b").random()

    def test_degree_cap(self):
        """Every term respects the cap"""
        rng = make_rng(0, "cap")
        for _ in range(50):
            p = random_poly(rng, 3, 2, nonzero=True)
            assert not p.is_zero()
            assert all(mono.total_degree <= 2 for mono in p.monomials())

    @pytest.mark.parametrize("pattern, zeros", [("zero", 3), ("all", 0)])
    def test_twist_patterns(self, pattern, zeros):
        """Zero patterns are honored"""
        k = random_twist(make_rng(0, pattern), 3, pattern)
        assert len(k.zero_set()) == zeros

    def test_one_pattern(self):
        """'one' has a single nonzero entry"""
        assert len(random_twist(make_rng(4), 4, "one").nonzero_set()) == 1

    def test_unknown_pattern(self):
        """Only the four named patterns exist"""
        with pytest.raises(ValueError):
            random_twist(make_rng(0), 2, "most")

    def test_twist_pairs(self):
        """Equal or different nonzero counts on request"""
        rng = make_rng(0, "pairs")
        for _ in range(20):
            k, k2 = random_twist_pair(rng, 3, same_count=True)
            assert len(k.nonzero_set()) == len(k2.nonzero_set())
            k, k2 = random_twist_pair(rng, 3, same_count=False)
            assert len(k.nonzero_set()) != len(k2.nonzero_set())
        assert len(random_twist_with_nonzero_count(rng, 4, 2).nonzero_set()) == 2

    def test_monomial_counts(self):
        """C(2n + d - 1, d) monomials of degree d"""
        assert len(list(monomials_of_degree(2, 2))) == 10
        assert len(monomials_up_to(1, 3)) == 10


class TestSuiteResult:
    """Case bookkeeping"""

    def test_check_records_failures(self):
        """Descriptions are built only for failed cases"""
        result = SuiteResult("demo")
        result.check(True, lambda: pytest.fail("described a passing case"))
        result.check(False, lambda: "broken")
        assert result.cases == 2
        assert result.failed == 1
        assert result.failures == ["broken"]
        assert not result.passed

    def test_empty_suite_does_not_pass(self):
        """A suite that ran nothing is not a pass"""
        assert not SuiteResult("empty").passed


class TestSuites:
    """Every property suite passes in quick mode"""

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_suite_passes(self, name):
        """Quick run of one suite"""
        result = run_suite(name, seed=0, quick=True)
        assert result.cases > 0
        assert result.passed, result.failures

    def test_unknown_suite(self):
        """Unknown names raise KeyError"""
        with pytest.raises(KeyError):
            run_suite("nonexistent")
        with pytest.raises(KeyError):
            run_selftest(names=["oracle", "nonexistent"])

    def test_process_pool(self):
        """workers > 1 keeps the requested order"""
        results = run_selftest(seed=1, workers=2, names=["twist-laws", "power-assoc"], quick=True)
        assert [r.name for r in results] == ["twist-laws", "power-assoc"]
        assert all(r.passed for r in results)

    def test_derivation_notes(self):
        """Notes do not count as failures"""
        result = run_suite("derivations", seed=0, quick=True)
        assert result.failed == 0
        assert all("shift-invariant" in note for note in result.notes)
