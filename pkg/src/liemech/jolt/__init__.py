"""SE(3)-jolt: time derivatives of the force and torque covectors along a motion."""

from liemech.jolt.analysis import (
    REPORT_CSV_HEADER,
    JoltReport,
    JoltSample,
    KinematicDerivatives,
    derivatives_from_trajectory,
    first_derivative,
    jolt_report,
    jolt_series,
    report_to_csv,
    report_to_text,
    second_derivative,
    se3_jolt,
)

__all__ = [
    "JoltReport", "JoltSample", "KinematicDerivatives", "REPORT_CSV_HEADER",
    "derivatives_from_trajectory", "first_derivative", "jolt_report", "jolt_series",
    "report_to_csv", "report_to_text", "second_derivative", "se3_jolt",
]
