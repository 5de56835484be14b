"""Unit tests for the self-test checks and their report"""
import pytest

from src.faces import Face, all_faces
from src.verification import FAIL, PASS, REPORTED, CheckResult, SelfTest, SelfTestReport, run_all
from src.verification.selftest import _transport_problems


@pytest.fixture
def selftest():
    return SelfTest(seed=7, random_pairs=20, post_formulas=20, compactness_trials=10, max_face_dim=2)


class TestSelfTestReport:
    """Test the report aggregation and exit codes"""

    def test_reported_checks_do_not_fail_the_run(self):
        """Test that REPORTED counts as passing"""
        report = SelfTestReport([CheckResult("a", PASS, 1), CheckResult("b", REPORTED, 9)])
        assert report.passed
        assert report.exit_code == 0

    def test_failure_sets_exit_code(self):
        """Test the invariant-violation exit code"""
        report = SelfTestReport([CheckResult("a", PASS, 1), CheckResult("b", FAIL, 1, "broken")])
        assert not report.passed
        assert report.exit_code == 3

    def test_frame_and_dict(self):
        """Test the tabular and JSON views"""
        report = SelfTestReport([CheckResult("a", PASS, 4, "ok", 0.123)])
        frame = report.to_frame()
        assert list(frame.columns) == ["check", "status", "cases", "seconds", "detail"]
        assert frame.loc[0, "seconds"] == 0.12
        assert report.to_dict()["checks"][0]["check"] == "a"


class TestChecks:
    """Test the cheap checks directly"""

    def test_table_fidelity(self, selftest):
        """Test the operation tables against the printed grids"""
        result = selftest.table_fidelity()
        assert result.status == PASS
        assert result.cases == 27

    def test_equation_suite(self, selftest):
        """Test every identity expected to hold"""
        assert selftest.equation_suite().status == PASS

    def test_join_term_discrepancy_is_reported(self, selftest):
        """Test the literal join term is reported, not failed"""
        result = selftest.join_term_discrepancy()
        assert result.status == REPORTED
        assert "(1,0)" in result.detail and "(h,0)" in result.detail

    def test_order_coincidence(self, selftest):
        """Test the face orders up to the configured dimension"""
        assert selftest.order_coincidence().status == PASS

    def test_conp_reduction(self, selftest):
        """Test the Post tautology reduction on a small sample"""
        assert selftest.conp_reduction().status == PASS

    def test_axiom_suite(self, selftest):
        """Test the catalogue models and the corrupted table"""
        assert selftest.axiom_suite().status == PASS

    def test_face_transport(self, selftest):
        """Test the face operations against the trit operations"""
        result = selftest.face_transport()
        assert result.status == PASS
        assert result.cases == 9 + 81

    def test_transport_problems_for_a_pair(self):
        """Test one clashing pair directly"""
        assert _transport_problems(Face.from_word("0h"), Face.from_word("1h"), True) == []
        for a in all_faces(1):
            for b in all_faces(1):
                assert _transport_problems(a, b, True) == []


class TestDriver:
    """Test running checks by name"""

    def test_unknown_check(self, selftest):
        """Test name validation"""
        with pytest.raises(ValueError):
            selftest.run("no_such_check")

    def test_run_records_time_and_logs_failures(self, selftest, mocker):
        """Test that a failing check is logged as an error and fails the report"""
        mocker.patch.object(
            SelfTest, "table_fidelity", return_value=CheckResult("table_fidelity", FAIL, 1, "bad cell")
        )
        logger = mocker.patch("src.verification.selftest.logger")
        report = selftest.run_all(["table_fidelity"])
        assert report.exit_code == 3
        assert report.results[0].seconds >= 0
        logger.error.assert_called_once()

    def test_module_run_all(self):
        """Test the module-level entry point with reduced sizes"""
        report = run_all(seed=1, only=["table_fidelity", "join_term_discrepancy"], post_formulas=10)
        assert [r.name for r in report.results] == ["table_fidelity", "join_term_discrepancy"]
        assert report.exit_code == 0
