import logging
import time
from typing import Optional

from sympy import isprime

from database import VerificationDatabase
from geometry.coh_certificates import verify_thm_2_1, verify_thm_3_1
from geometry.discrepancy_ledger import verify_torus_quotient, verify_yasuda
from geometry.report import VerificationReport
from processors.base import Processor

logger = logging.getLogger(__name__)

TARGETS = ("thm21", "thm31", "dim3", "yasuda")

DEFAULT_P = {"thm21": 3, "thm31": 5, "dim3": 2, "yasuda": 7}
DEFAULT_YASUDA_N = 5


class ConstructionVerifier(Processor):
    """Runs one construction from its primitive inputs and produces a VerificationReport."""

    def __init__(self, target: str, p: Optional[int] = None, n: Optional[int] = None, all_charts: bool = False):
        super().__init__("ConstructionVerifier")
        if target not in TARGETS:
            raise ValueError(f"Unknown target '{target}' (choose from {', '.join(TARGETS)})")
        self.target = target
        self.p = DEFAULT_P[target] if p is None else p
        self.n = n
        self.all_charts = all_charts
        self._check_inputs()

    def _check_inputs(self):
        if not isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.target == "thm21" and self.p < 3:
            raise ValueError(f"thm21 needs p >= 3, got {self.p}")
        if self.target == "dim3" and self.p != 2:
            raise ValueError(f"dim3 lives in characteristic 2, got p = {self.p}")
        if self.n is not None and self.target != "yasuda":
            raise ValueError(f"--n only applies to yasuda; {self.target} fixes n from p")
        if self.target == "yasuda" and self.n is None:
            self.n = DEFAULT_YASUDA_N

    def run(self) -> VerificationReport:
        start = time.perf_counter()
        if self.target == "thm21":
            report = verify_thm_2_1(self.p)
        elif self.target == "thm31":
            report = verify_thm_3_1(self.p)
        elif self.target == "dim3":
            report = verify_torus_quotient(all_charts=self.all_charts)
        else:
            report = verify_yasuda(self.p, self.n)
        report.timing = time.perf_counter() - start
        return report

    def process(self, database: Optional[VerificationDatabase] = None) -> VerificationReport:
        logger.info(f"Verifying {self.target} at p = {self.p}")
        report = self.run()
        for fact in report.failed_facts():
            logger.error(f"{self.target}: {fact.name} = {fact.value}, expected {fact.expected} ({fact.anchor})")
        logger.info(f"{self.target} at p = {self.p}: {report.verdict} "
                    f"({len(report.facts)} facts, {len(report.certificates)} rule firings)")
        if database is not None:
            report_id = database.insert_report(report.to_dict())
            logger.info(f"Archived report {report_id}")
        return report
