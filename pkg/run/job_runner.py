import logging
import random
import string
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from hochschild.constants import Constants
from hochschild.enums.check_name import CheckName
from hochschild.enums.check_status import CheckStatus
from hochschild.errors import BudgetExceeded, HochschildError
from hochschild.jobs.checks import JobContext, route_for
from hochschild.jobs.job_spec import JobSpec
from hochschild.jobs.report import CheckResult, Report
from hochschild.utils.singleton import Singleton

LOGGER = logging.getLogger(__name__)

ROUTE_ORDER = ["closed_form", "bg", "ext_d", "invariant", "bar", "adjoint", "hopf_hochschild"]


def run_check(context: JobContext, check: CheckName) -> Tuple[CheckResult, float]:
    start = time.perf_counter()
    try:
        result = CheckResult(check, CheckStatus.PASS, route_for(check)(context))
    except BudgetExceeded as error:
        LOGGER.warning("Check %s skipped: %s", check.value, error)
        result = CheckResult(check, CheckStatus.SKIPPED, "BudgetExceeded: %s" % error)
    except HochschildError as error:
        LOGGER.error("Check %s failed: %s", check.value, error)
        result = CheckResult(check, CheckStatus.FAIL, "%s: %s" % (type(error).__name__, error))
    else:
        LOGGER.info("Check %s passed: %s", check.value, result.detail)
    return result, time.perf_counter() - start


def run_job(spec: JobSpec, workers: int = Constants.NUM_WORKERS) -> Report:
    """Run every requested check of a validated spec; checks run concurrently, the report is assembled in order."""
    data = spec.data
    report = Report(spec.to_dict(), data.describe())
    start = time.perf_counter()
    context = JobContext(spec, report)
    report.add_dims("closed_form", data.closed_form_dims(spec.max_degree))
    report.add_dims("bg", context.bg_dims)
    report.timings["bg_complex"] = time.perf_counter() - start
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [(check, executor.submit(run_check, context, check)) for check in spec.checks]
        for check, future in futures:
            result, seconds = future.result()
            report.add_check(result)
            report.timings[check.value] = seconds
    report.dims = {route: report.dims[route] for route in ROUTE_ORDER if route in report.dims}
    if context.has_maps():
        report.extras.setdefault("sign_convention", context.maps().sign_convention())
    report.extras["center_discrepancy"] = data.n_class_count != data.g_class_count
    report.extras = {key: report.extras[key] for key in sorted(report.extras)}
    report.timings["total"] = time.perf_counter() - start
    LOGGER.info("Job finished with %d checks, %s", len(report.checks),
                "failures" if report.failed else "no failures")
    return report


class JobRunner(metaclass=Singleton):

    def __init__(self):
        super().__init__()
        self.finished_jobs = {}
        self._lock = threading.Lock()

    def get_finished_jobs(self) -> List[str]:
        with self._lock:
            return list(self.finished_jobs.keys())

    def run(self, spec: JobSpec) -> Tuple[str, Report]:
        report = run_job(spec)
        job_id = self.generate_new_job_id()
        with self._lock:
            self.finished_jobs[job_id] = report
        return job_id, report

    def get_report(self, job_id: str) -> Optional[Report]:
        with self._lock:
            return self.finished_jobs.get(job_id)

    @staticmethod
    def generate_new_job_id() -> str:
        return ''.join(random.choice(string.ascii_lowercase) for _ in range(Constants.JOB_ID_LENGTH))
