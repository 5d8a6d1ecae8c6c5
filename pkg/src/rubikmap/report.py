"""Render verification reports: delimited table, structured document, figures."""

from __future__ import annotations

import csv
import io
import json
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .verifier import REPORT_COLUMNS, ConjectureReport  # noqa: E402


def to_csv(reports: list[ConjectureReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.row()
        writer.writerow({k: ("" if row[k] is None else row[k]) for k in REPORT_COLUMNS})
    return buf.getvalue()


def to_doc(reports: list[ConjectureReport]) -> dict:
    entries = []
    for r in reports:
        row = r.row()
        row["error"] = r.error
        entries.append(row)
    return {"reports": entries}


def to_json(reports: list[ConjectureReport]) -> str:
    return json.dumps(to_doc(reports), indent=2) + "\n"


def to_table(reports: list[ConjectureReport]) -> str:
    rows = [[str(r.row()[c]) if r.row()[c] is not None else "-"
             for c in REPORT_COLUMNS] for r in reports]
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c)
              for i, c in enumerate(REPORT_COLUMNS)]
    def fmt(cells):
        return "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    lines = [fmt(REPORT_COLUMNS)]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines) + "\n"


def render_figures(reports: list[ConjectureReport], outdir: str) -> list[str]:
    """Write the order and timing charts; returns the created paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    computed = [(r.name, r.orders.group, r.predicted, r.passed)
                for r in reports if r.orders is not None]
    if computed:
        names = [c[0] for c in computed]
        logs = [math.log10(c[1]) for c in computed]
        pred_logs = [math.log10(c[2]) if c[2] else 0.0 for c in computed]
        colors = ["#2a9d4e" if c[3] else "#d1343e" for c in computed]
        fig, ax = plt.subplots(figsize=(8, 0.45 * len(names) + 1.6))
        ypos = range(len(names))
        ax.barh(ypos, logs, color=colors, alpha=0.85, label="computed")
        ax.plot(pred_logs, ypos, "k|", markersize=14, label="predicted")
        ax.set_yticks(list(ypos))
        ax.set_yticklabels(names)
        ax.invert_yaxis()
        ax.set_xlabel("log10 of group order")
        ax.set_title("Puzzle group orders: computed vs predicted")
        ax.legend(loc="lower right")
        fig.tight_layout()
        path = os.path.join(outdir, "orders.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)

    timed = [(r.name, r.seconds) for r in reports if r.orders is not None]
    if timed:
        fig, ax = plt.subplots(figsize=(8, 0.45 * len(timed) + 1.6))
        ax.barh(range(len(timed)), [t[1] for t in timed], color="#4472a8")
        ax.set_yticks(range(len(timed)))
        ax.set_yticklabels([t[0] for t in timed])
        ax.invert_yaxis()
        ax.set_xlabel("verification time (s)")
        ax.set_title("Verification wall time per map")
        fig.tight_layout()
        path = os.path.join(outdir, "timings.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)

    return paths


def write_outputs(reports: list[ConjectureReport], outdir: str,
                  figures: bool = True) -> list[str]:
    """Write suite.csv + suite.json (+ figures) into a directory."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    csv_path = os.path.join(outdir, "suite.csv")
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(to_csv(reports))
    paths.append(csv_path)
    json_path = os.path.join(outdir, "suite.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(to_json(reports))
    paths.append(json_path)
    if figures:
        paths.extend(render_figures(reports, outdir))
    return paths
