import logging
import sys

from config import LOG_FORMAT, SKEWHOOK_OUTPUT_DIR
from print_output_lib import write_report
from verify_lib import SUITES, run_sweep


def dump_all_reports(output_dir: str = SKEWHOOK_OUTPUT_DIR) -> bool:
    """
    Runs every verification suite on its default sweep and writes one
    JSON report per suite into output_dir. Returns True if all passed.
    """
    print(f"Writing suite reports to {output_dir}/ ...")
    all_passed = True
    for name in SUITES:
        report = run_sweep(name)
        path = write_report(report, output_dir)
        status = "PASS" if report.passed else "FAIL"
        print(f"{name:<18} {status}  checked={report.checked:<7} skipped={report.skipped:<5} -> {path}")
        all_passed = all_passed and report.passed
    return all_passed


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    sys.exit(0 if dump_all_reports() else 1)
