import logging
import multiprocessing
import uuid
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from sympy import primerange
from tqdm import tqdm

from database import VerificationDatabase
from geometry.coh_certificates import verify_thm_2_1, verify_thm_3_1
from processors.base import Processor

logger = logging.getLogger(__name__)

CONSTRUCTIONS = {"thm21": verify_thm_2_1, "thm31": verify_thm_3_1}


def sweep_worker(task: Tuple[str, int]) -> Dict[str, Any]:
    """One (construction, p) verification, reduced to a table row. Never raises."""
    construction, p = task
    row = {"construction": construction, "p": p, "dim_x": None, "chi": None,
           "h1_lower": None, "passed": False, "error": None}
    try:
        report = CONSTRUCTIONS[construction](p)
        row["dim_x"] = report["dim_X"]
        row["chi"] = report["chi"]
        row["h1_lower"] = report["h1_lower_bound"]
        row["passed"] = report.passed
        if not report.passed:
            row["error"] = "failed facts: " + ", ".join(f.name for f in report.failed_facts())
    except Exception as e:
        logger.error(f"{construction} at p = {p} raised: {e}")
        row["error"] = str(e)
    return row


@dataclass
class SweepResult:
    rows: List[Dict[str, Any]]
    notes: List[str] = field(default_factory=list)
    sweep_id: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.rows)


class PrimeSweeper(Processor):
    def __init__(self, max_p: int, workers: int = 1):
        super().__init__("PrimeSweeper")
        if max_p < 2:
            raise ValueError(f"max_p must be at least 2, got {max_p}")
        if workers < 1:
            raise ValueError(f"workers must be positive, got {workers}")
        self.max_p = max_p
        self.workers = workers

    def tasks(self) -> Tuple[List[Tuple[str, int]], List[str]]:
        tasks, notes = [], []
        for p in primerange(2, self.max_p + 1):
            p = int(p)
            if p >= 3:
                tasks.append(("thm21", p))
            else:
                notes.append("thm21 skipped at p = 2: the construction needs p >= 3")
            tasks.append(("thm31", p))
        return tasks, notes

    def process(self, database: Optional[VerificationDatabase] = None) -> SweepResult:
        tasks, notes = self.tasks()
        logger.info(f"Sweeping {len(tasks)} verifications up to p = {self.max_p} with {self.workers} worker(s)")

        rows = []
        if self.workers > 1:
            pool = multiprocessing.Pool(processes=self.workers)
            try:
                for row in tqdm(pool.imap_unordered(sweep_worker, tasks), total=len(tasks), desc="Sweeping"):
                    rows.append(row)
            finally:
                pool.close()
                pool.join()
        else:
            for task in tqdm(tasks, desc="Sweeping"):
                rows.append(sweep_worker(task))

        rows.sort(key=lambda r: (r["p"], r["construction"]))
        result = SweepResult(rows, notes)
        failed = [r for r in rows if not r["passed"]]
        if failed:
            logger.error(f"{len(failed)} of {len(rows)} sweep rows failed")
        else:
            logger.info(f"All {len(rows)} sweep rows passed")

        if database is not None:
            result.sweep_id = uuid.uuid4().hex
            database.insert_sweep_rows(result.sweep_id, rows)
            logger.info(f"Archived sweep {result.sweep_id}")
        return result
