"""Human-readable rendering of a :class:`Report`."""

from typing import List

from termcolor import colored

from hochschild.enums.check_status import CheckStatus
from hochschild.enums.output_format import OutputFormat
from hochschild.jobs.report import Report

STATUS_COLORS = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.SKIPPED: "yellow",
}


def dims_table(report: Report) -> List[str]:
    if not report.dims:
        return []
    width = max(len(route) for route in report.dims)
    top = max(len(dims) for dims in report.dims.values())
    lines = ["%s  %s" % ("degree".ljust(width), " ".join(str(m).rjust(3) for m in range(top)))]
    for route, dims in report.dims.items():
        lines.append("%s  %s" % (route.ljust(width), " ".join(str(d).rjust(3) for d in dims)))
    return lines


def format_table(report: Report, color: bool = True) -> str:
    algebra = report.algebra
    lines = ["p = %d, n = %d, |G| = %d, g1 = %s, p_ord = %d, dim B = %d"
             % (algebra["p"], algebra["n"], algebra["group_order"], algebra["g1"], algebra["p_ord"],
                algebra["dim_B"]), ""]
    lines.extend(dims_table(report))
    if report.ring is not None:
        ring = report.ring
        lines.extend(["", "HH*(B) = %s with deg y = %d, deg z = %d" % (ring["presentation"], ring["deg_y"],
                                                                     ring["deg_z"]),
                      "degree 0 basis: %s" % ", ".join(ring["degree0_basis"])])
        if ring["center_discrepancy"]:
            lines.append("dim Z(kN) = %d but N has %d G-classes" % (ring["dim_Z_kN"], ring["g_classes_in_N"]))
    lines.append("")
    for check in report.checks:
        status = check.status.value.ljust(7)
        if color:
            status = colored(status, STATUS_COLORS[check.status])
        lines.append("%s %s  %s" % (status, check.name.value.ljust(15), check.detail))
    return "\n".join(lines)


def format_report(report: Report, output_format: OutputFormat, color: bool = True) -> str:
    if output_format == OutputFormat.JSON:
        return report.to_json()
    return format_table(report, color)
