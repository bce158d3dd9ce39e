"""Loaders for the frozen reference data shipped with the package.

All files live under conical/data and are plain text: comment lines
start with '#', data lines hold whitespace-separated decimal fields
printed with 25 significant digits by the generation script.
"""

from __future__ import annotations

from importlib import resources

GRID_NAME = "oracle_grid.txt"
FERRERS_NAME = "oracle_grid_ferrers.txt"
BESSEL_NAME = "bessel_grid.txt"
FIXTURE_NAME = "fixture20.txt"


def read_data_text(name: str) -> str:
    return resources.files("conical").joinpath("data", name).read_text(encoding="utf-8")


def parse_rows(text: str, width: int, int_columns=()):
    """Data rows as tuples of floats, with the named columns as ints."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != width:
            raise ValueError(f"expected {width} fields, got {len(parts)}: {line!r}")
        row = []
        for i, tok in enumerate(parts):
            row.append(int(tok) if i in int_columns else float(tok))
        rows.append(tuple(row))
    if not rows:
        raise ValueError("no data rows")
    return rows


def load_quad_grid():
    """Rows (x, m, tau, pm, pmd, rm, rmd) of the main reference grid."""
    return parse_rows(read_data_text(GRID_NAME), 7, int_columns=(1,))


def load_ferrers_grid():
    """Rows (x, m, tau, pm, pmd) of the -1 < x < 1 reference grid."""
    return parse_rows(read_data_text(FERRERS_NAME), 5, int_columns=(1,))


def load_bessel_grid():
    """Rows (z, j0, y0, j1, y1) of the Bessel reference grid."""
    return parse_rows(read_data_text(BESSEL_NAME), 5)


def load_fixture(text: str | None = None):
    """Rows (x, m, tau, pm, pmd, rm, rmd) of a fixture file.

    Raises ValueError on malformed or empty input; the caller maps that
    to its parse-failure exit code.
    """
    if text is None:
        text = read_data_text(FIXTURE_NAME)
    return parse_rows(text, 7, int_columns=(1,))
