"""Verification - the self-test sweeps behind the selftest command"""
from .selftest import FAIL, PASS, REPORTED, CheckResult, SelfTest, SelfTestReport, run_all

__all__ = ["FAIL", "PASS", "REPORTED", "CheckResult", "SelfTest", "SelfTestReport", "run_all"]
