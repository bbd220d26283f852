"""SVG plots derived from a written CSV report."""

import logging
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from bilin_tf.config.config import PACKAGE_NAME  # noqa: E402
from bilin_tf.harness.csv_writer import read_report  # noqa: E402

logger = logging.getLogger(__name__)

# fixed element ids so two runs produce identical files
plt.rcParams["svg.hashsalt"] = PACKAGE_NAME


def _as_float(text: str) -> float | None:
    try:
        value = float(text)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def plot_report(csv_path: Path, x_column: str, ratio_column: str) -> Path:
    """Scatter ``ratio_column`` against ``x_column`` for unflagged trial rows."""
    header, rows = read_report(csv_path)
    xs: list[float] = []
    ys: list[float] = []
    for row in rows:
        if row["row_kind"] != "trial" or row["flagged"] == "true":
            continue
        x, y = _as_float(row[x_column]), _as_float(row[ratio_column])
        if x is None or y is None:
            continue
        xs.append(x)
        ys.append(y)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(xs, ys, s=12)
    ax.set_xlabel(x_column)
    ax.set_ylabel(ratio_column)
    ax.set_title(header.lstrip("# "), fontsize=9)
    if x_column == "count" and xs and min(xs) > 0:
        ax.set_xscale("log", base=2)
    fig.tight_layout()

    svg_path = csv_path.with_suffix(".svg")
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"plotted {len(xs)} points to {svg_path}")
    return svg_path
