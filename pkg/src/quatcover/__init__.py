"""Exact verification of quaternion covers of curves, their Prym lattices, and nine-nodal cubic threefolds."""

from .quaternion import Quaternion, OrderName
from .report import VerificationReport, emit_report
from .suites import run_suite

__all__ = ["Quaternion", "OrderName", "VerificationReport", "emit_report", "run_suite"]
__version__ = "0.1.0"
