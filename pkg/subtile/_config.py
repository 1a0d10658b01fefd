config = {
    # Human-friendly line width for paragraphs.
    "display.text_width": 88,
    # Largest number of tiles a generated patch may hold.
    "core.tile_cap": 1_000_000,
    # Interval precision (bits) for the first certified sign attempt, and its ceiling.
    "exact.sign_start_prec": 64,
    "exact.sign_max_prec": 8192,
    # Upper bound on subintervals examined by one Hausdorff evaluation.
    "metric.max_subdivisions": 200_000,
    # Number of rungs in the geometric radius ladders.
    "analysis.radius_ladder_steps": 8,
    # Extra substitution levels used to find predecessor patches.
    "analysis.default_horizon": 2,
    # Supertile level used to build recognition tables on demand.
    "analysis.recognition_level": 4,
    # Supertile level used by the code radius profile.
    "analysis.code_level": 4,
    # Highest root-of-unity order searched when classifying rotations.
    "groups.max_root_order": 120,
    "log.level": "WARNING",
}
