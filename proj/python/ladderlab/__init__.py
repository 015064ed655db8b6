"""Python interface to the ladderlab core.

The heavy lifting lives in the compiled extension ``_ladderlab``; this
package re-exports its public names so downstream code can write
``import ladderlab`` regardless of how the extension was built (in-tree
CMake build directory on PYTHONPATH, or an installed wheel).
"""

from _ladderlab import (  # noqa: F401
    DEFAULT_C,
    AlgebraReport,
    BaseSystem,
    DeltaSet,
    EnergyRecord,
    ExponentRatio,
    GramReport,
    LabConfig,
    Ladder,
    MeanValuePoints,
    ReportRow,
    RunReport,
    SegmentHandle,
    SpectralResult,
    Window,
    closure_ok,
    cmd_build,
    cmd_verify,
    delta_set,
    energy_general,
    energy_pq,
    factorization_check,
    generator_check,
    generator_exponent,
    gram_matrix,
    hardy_z,
    hardy_zeros,
    inverse_check,
    load_or_build,
    mean_value_points,
    product_check,
    product_exponent,
    render_report,
    rs_theta,
    segment,
    segment_general,
    spectral_energy,
    unit_check,
    unit_separation_ratio,
    weighted_energy,
    weighted_eval,
    window_requirement,
    zeta_mod_sq,
)

__all__ = [name for name in dir() if not name.startswith("_")]
