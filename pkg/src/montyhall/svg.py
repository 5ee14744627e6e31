"""Self-contained SVG rendering of convergence traces.

Output is standalone SVG 1.1: no external stylesheets, fonts, or script.
A <metadata> element carries a small JSON payload with each series' final
checkpoint and reference value so files stay machine-checkable.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Mapping, Sequence

from .core import decimal_string
from .stats import ConvergenceTrace

WIDTH = 720
HEIGHT = 480
MARGIN_LEFT = 64
MARGIN_RIGHT = 24
MARGIN_TOP = 40
MARGIN_BOTTOM = 48

SERIES_COLORS = {"stay": "#1f77b4", "switch": "#d62728"}
BAND_OPACITY = "0.15"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Scales:
    def __init__(self, max_trials: int, log_x: bool):
        self.max_trials = max_trials
        self.log_x = log_x and max_trials > 1
        self.x0 = MARGIN_LEFT
        self.x1 = WIDTH - MARGIN_RIGHT
        self.y0 = HEIGHT - MARGIN_BOTTOM
        self.y1 = MARGIN_TOP

    def x(self, trials: int) -> float:
        if self.log_x:
            frac = math.log10(trials) / math.log10(self.max_trials)
        else:
            frac = trials / self.max_trials
        return self.x0 + frac * (self.x1 - self.x0)

    def y(self, rate: float) -> float:
        return self.y0 + rate * (self.y1 - self.y0)


def _axis_elements(scales: _Scales) -> list[str]:
    parts = []
    # frame
    parts.append(
        f'<rect x="{scales.x0}" y="{scales.y1}" width="{scales.x1 - scales.x0}" '
        f'height="{scales.y0 - scales.y1}" fill="none" stroke="#333" stroke-width="1"/>'
    )
    # y ticks every 0.25
    for i in range(5):
        rate = i / 4
        y = scales.y(rate)
        parts.append(
            f'<line x1="{scales.x0}" y1="{_fmt(y)}" x2="{scales.x1}" y2="{_fmt(y)}" '
            f'stroke="#ddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{scales.x0 - 8}" y="{_fmt(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12" fill="#333">{rate:.2f}</text>'
        )
    # x ticks
    if scales.log_x:
        decades = int(math.floor(math.log10(scales.max_trials)))
        ticks = [10**d for d in range(0, decades + 1)]
        if scales.max_trials not in ticks:
            ticks.append(scales.max_trials)
        labels = [f"{t:g}" for t in ticks]
    else:
        ticks = sorted({max(1, round(scales.max_trials * i / 4)) for i in range(5)})
        labels = [str(t) for t in ticks]
    for t, label in zip(ticks, labels):
        x = scales.x(t)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{scales.y0}" x2="{_fmt(x)}" y2="{scales.y0 + 5}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{scales.y0 + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" fill="#333">{label}</text>'
        )
    parts.append(
        f'<text x="{(scales.x0 + scales.x1) / 2}" y="{HEIGHT - 8}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" fill="#333">trials'
        f'{" (log scale)" if scales.log_x else ""}</text>'
    )
    parts.append(
        f'<text x="16" y="{(scales.y0 + scales.y1) / 2}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" fill="#333" '
        f'transform="rotate(-90 16 {(scales.y0 + scales.y1) / 2})">win rate</text>'
    )
    return parts


def render_convergence_svg(
    traces: Sequence[ConvergenceTrace],
    references: Mapping[str, Fraction],
    *,
    log_x: bool = True,
    title: str | None = None,
) -> str:
    """Render traces plus exact analytic reference lines to an SVG string.

    ``references`` maps a strategy label to its exact win probability; a
    dashed horizontal line is drawn at each value.
    """
    if not traces:
        raise ValueError("need at least one trace")
    max_trials = max(trace.final.trial_count for trace in traces)
    scales = _Scales(max_trials, log_x)

    meta = {
        "schema": "montyhall.trace-svg/1",
        "log_x": scales.log_x,
        "series": [
            {
                "strategy": trace.strategy,
                "host": trace.host,
                "final_trial_count": trace.final.trial_count,
                "final_win_rate": trace.final.win_rate,
                "reference": str(references[trace.strategy])
                if trace.strategy in references
                else None,
            }
            for trace in traces
        ],
    }

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<metadata>{json.dumps(meta, sort_keys=True)}</metadata>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    parts.extend(_axis_elements(scales))

    if title:
        parts.append(
            f'<text x="{WIDTH / 2}" y="22" text-anchor="middle" font-family="sans-serif" '
            f'font-size="15" fill="#111">{title}</text>'
        )

    for label, value in references.items():
        y = scales.y(float(value))
        color = SERIES_COLORS.get(label, "#333")
        parts.append(
            f'<line x1="{scales.x0}" y1="{_fmt(y)}" x2="{scales.x1}" y2="{_fmt(y)}" '
            f'stroke="{color}" stroke-width="1" stroke-dasharray="6 4"/>'
        )
        parts.append(
            f'<text x="{scales.x1 - 4}" y="{_fmt(y - 5)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" fill="{color}">'
            f"{label} exact = {value} = {decimal_string(value, 5)}</text>"
        )

    for trace in traces:
        color = SERIES_COLORS.get(trace.strategy, "#555")
        band = " ".join(
            f"{_fmt(scales.x(cp.trial_count))},{_fmt(scales.y(cp.ci_high))}"
            for cp in trace.checkpoints
        ) + " " + " ".join(
            f"{_fmt(scales.x(cp.trial_count))},{_fmt(scales.y(cp.ci_low))}"
            for cp in reversed(trace.checkpoints)
        )
        parts.append(f'<polygon points="{band}" fill="{color}" opacity="{BAND_OPACITY}"/>')
        line = " ".join(
            f"{_fmt(scales.x(cp.trial_count))},{_fmt(scales.y(cp.win_rate))}"
            for cp in trace.checkpoints
        )
        parts.append(
            f'<polyline points="{line}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        final = trace.final
        parts.append(
            f'<circle cx="{_fmt(scales.x(final.trial_count))}" '
            f'cy="{_fmt(scales.y(final.win_rate))}" r="3" fill="{color}"/>'
        )

    # legend
    ly = MARGIN_TOP + 14
    for trace in traces:
        color = SERIES_COLORS.get(trace.strategy, "#555")
        parts.append(
            f'<line x1="{scales.x0 + 10}" y1="{ly - 4}" x2="{scales.x0 + 34}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{scales.x0 + 40}" y="{ly}" font-family="sans-serif" font-size="12" '
            f'fill="#333">{trace.strategy} ({trace.host} host)</text>'
        )
        ly += 18

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
