"""Pascal rhombus (mod 2): generation, stealth-configuration geometry and
machine verification of the classical conjectures, backed by the C++ core."""

from ._core import (
    BitPattern,
    IntRowGrid,
    Orientation,
    Placement,
    RowGrid,
    build_pseudo_stealth,
    build_stealth,
    contains,
    corner_cells,
    decompose,
    density_report,
    diagonal_bits,
    exceptional_cells,
    generate,
    generate_integer,
    growth_root,
    haystack,
    minimal_period,
    octagon_vertices,
    oeis_compare,
    region_cell_count,
    render_pbm,
    render_svg,
    rows_needed_conjecture1,
    rows_needed_conjecture2,
    rows_needed_conjecture3,
    rows_needed_mirror,
    sequence,
    spine_ones,
    stealth_row_extent,
    verify_conjecture1,
    verify_conjecture2,
    verify_conjecture3,
    verify_conjecture4,
    verify_lemma1,
    verify_mirror,
    verify_theorem1,
)

__all__ = [
    "BitPattern",
    "IntRowGrid",
    "Orientation",
    "Placement",
    "RowGrid",
    "build_pseudo_stealth",
    "build_stealth",
    "contains",
    "corner_cells",
    "decompose",
    "density_report",
    "diagonal_bits",
    "exceptional_cells",
    "generate",
    "generate_integer",
    "growth_root",
    "haystack",
    "minimal_period",
    "octagon_vertices",
    "oeis_compare",
    "region_cell_count",
    "render_pbm",
    "render_svg",
    "rows_needed_conjecture1",
    "rows_needed_conjecture2",
    "rows_needed_conjecture3",
    "rows_needed_mirror",
    "sequence",
    "spine_ones",
    "stealth_row_extent",
    "verify_conjecture1",
    "verify_conjecture2",
    "verify_conjecture3",
    "verify_conjecture4",
    "verify_lemma1",
    "verify_mirror",
    "verify_theorem1",
]
