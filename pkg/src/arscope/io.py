"""Reading series files and writing profiles, plots and summaries.

Numbers are written as the shortest decimal string (at most 17 significant
digits) that parses back to the same double, so text round trips are exact.
"""

from __future__ import annotations

import csv
import json
import math
import re
from pathlib import Path
from typing import Optional, Union
from xml.sax.saxutils import escape

import numpy as np

from .diagnostics import PlotData, acf_stem, pac_stem
from .errors import DataError
from .model import LagProfile, PacProfile
from .simulation import TimeSeries

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")

Profile = Union[LagProfile, PacProfile, PlotData]


def fmt(x: float) -> str:
    return repr(float(x))


def _parse(token: str, where: str) -> float:
    token = token.strip()
    if not _NUMBER.fullmatch(token):
        raise DataError(f"{where}: cannot parse {token!r} as a number")
    val = float(token)
    if not math.isfinite(val):
        raise DataError(f"{where}: value {token!r} is not finite")
    return val


def _read_text(path) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror or exc}") from None


def read_series(path, format: Optional[str] = None, column: Union[str, int, None] = None) -> TimeSeries:
    """Load a series from a plain (one value per line) or CSV file.

    The format defaults to ``csv`` for ``*.csv`` paths and ``plain`` otherwise.
    Blank lines and lines starting with ``#`` are skipped in both formats.
    CSV files may start with a header row; ``column`` selects a field by
    header name or zero-based index (default: a ``value`` column if the
    header has one, else the last column).
    """
    fmt_ = format or ("csv" if str(path).lower().endswith(".csv") else "plain")
    lines = _read_text(path)
    if fmt_ == "plain":
        vals = [
            _parse(line, f"{path}:{no}")
            for no, line in enumerate(lines, start=1)
            if line.strip() and not line.lstrip().startswith("#")
        ]
    elif fmt_ == "csv":
        vals = _read_csv(path, lines, column)
    else:
        raise DataError(f"unknown series format {fmt_!r}")
    if not vals:
        raise DataError(f"{path}: no values found")
    return TimeSeries(np.array(vals, dtype=np.float64))


def _read_csv(path, lines: list[str], column) -> list[float]:
    rows = [
        (no, row)
        for no, row in zip(range(1, len(lines) + 1), csv.reader(lines))
        if row and any(f.strip() for f in row) and not row[0].lstrip().startswith("#")
    ]
    if not rows:
        return []
    first_no, first = rows[0]
    header = None
    if not all(_NUMBER.fullmatch(f.strip()) for f in first):
        header = [f.strip() for f in first]
        rows = rows[1:]

    if column is None:
        idx = header.index("value") if header and "value" in header else len(first) - 1
    elif isinstance(column, int) or str(column).lstrip("-").isdigit():
        idx = int(column)
    elif header is not None and column in header:
        idx = header.index(column)
    else:
        raise DataError(f"{path}:{first_no}: no column named {column!r}")

    out = []
    for no, row in rows:
        try:
            token = row[idx]
        except IndexError:
            raise DataError(f"{path}:{no}: row has no column {idx}") from None
        out.append(_parse(token, f"{path}:{no}"))
    return out


def write_series(series: TimeSeries, path, header: Optional[dict] = None) -> None:
    lines = [f"# {k}\t{_meta_str(v)}" for k, v in (header or {}).items()]
    lines.extend(fmt(v) for v in series.values)
    _write(path, "\n".join(lines) + "\n")


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot write {path}: {exc.strerror or exc}") from None


def _meta_str(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    return str(v)


def _as_plot(profile: Profile, z_plot: float = 1.96) -> PlotData:
    if isinstance(profile, PlotData):
        return profile
    if isinstance(profile, LagProfile):
        return acf_stem(profile, z_plot)
    if isinstance(profile, PacProfile):
        return pac_stem(profile)
    raise TypeError(f"cannot serialize {type(profile).__name__}")


def profile_header(profile: Profile) -> dict:
    if isinstance(profile, LagProfile):
        meta = {"kind": "acf", "profile": profile.kind, "n": profile.n, "gamma0": profile.gamma0}
        if profile.unreliable_from is not None:
            meta["unreliable_from"] = profile.unreliable_from
        if profile.n:
            meta["band"] = 1.96 / math.sqrt(profile.n)
        return meta
    if isinstance(profile, PacProfile):
        return {"kind": "pac", "profile": profile.kind, "n": profile.n, "band": profile.band}
    meta = {"kind": profile.kind}
    meta.update(profile.metadata)
    return meta


def to_tsv(profile: Profile) -> str:
    plot = _as_plot(profile)
    if len(plot.points) == 0:
        raise DataError("nothing to write: profile is empty")
    lines = [
        f"# {k}\t{_meta_str(v)}" for k, v in profile_header(profile).items() if v is not None
    ]
    if plot.kind == "histogram":
        cols = ("bin_left", "bin_right", "count")
    elif plot.kind in ("acf_stem", "pac_stem"):
        cols = ("lag", "value")
    else:
        cols = ("x", "y")
    lines.append("# columns\t" + "\t".join(cols))
    int_cols = {"lag", "count"}
    for row in plot.points:
        lines.append(
            "\t".join(str(int(v)) if c in int_cols else fmt(v) for c, v in zip(cols, row))
        )
    return "\n".join(lines) + "\n"


def write_profile(profile: Profile, path, format: str = "tsv", z_plot: float = 1.96) -> None:
    """Write a profile or plot as ``tsv``, ``svg`` or ``json``."""
    plot = _as_plot(profile, z_plot)
    if len(plot.points) == 0:
        raise DataError("nothing to write: profile is empty")
    if format == "tsv":
        text = to_tsv(profile)
    elif format == "svg":
        text = render_svg(plot)
    elif format == "json":
        meta = {k: v for k, v in profile_header(profile).items() if v is not None}
        meta["points"] = plot.points.tolist()
        text = dumps(meta)
    else:
        raise DataError(f"unknown output format {format!r}")
    _write(path, text)


def _meta_value(text: str):
    if text in ("true", "false"):
        return text == "true"
    if re.fullmatch(r"[+-]?\d+", text):
        return int(text)
    if _NUMBER.fullmatch(text) or text in ("nan", "inf", "-inf"):
        return float(text)
    return text


def read_profile(path) -> Profile:
    """Inverse of the TSV branch of :func:`write_profile`."""
    meta: dict = {}
    rows = []
    for no, line in enumerate(_read_text(path), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("\t")
            meta[key] = val
            continue
        rows.append([_parse(tok, f"{path}:{no}") for tok in line.split("\t")])
    if not rows:
        raise DataError(f"{path}: profile has no rows")
    meta.pop("columns", None)
    meta = {k: _meta_value(v) for k, v in meta.items()}
    pts = np.array(rows, dtype=np.float64)
    kind = meta.pop("kind", None)
    if kind == "acf":
        return LagProfile(
            pts[:, 1].copy(),
            meta["gamma0"],
            meta.get("profile", "empirical"),
            n=meta.get("n"),
            unreliable_from=meta.get("unreliable_from"),
        )
    if kind == "pac":
        return PacProfile(pts[:, 1].copy(), band=meta.get("band"), kind=meta.get("profile", "empirical"), n=meta.get("n"))
    if kind is None:
        raise DataError(f"{path}: missing kind header")
    return PlotData(kind, pts, meta)


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps(summary: dict) -> str:
    return json.dumps(_clean(summary), indent=2) + "\n"


def write_json(summary: dict, path) -> None:
    _write(path, dumps(summary))


# --- SVG ---------------------------------------------------------------------

_W, _H = 640, 400
_ML, _MR, _MT, _MB = 60, 20, 40, 40


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step) * step
    out = []
    v = first
    while v <= hi + 1e-9 * step:
        out.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return out


class _Frame:
    def __init__(self, xlo, xhi, ylo, yhi):
        if xhi <= xlo:
            xlo, xhi = xlo - 0.5, xhi + 0.5
        if yhi <= ylo:
            ylo, yhi = ylo - 0.5, yhi + 0.5
        self.xlo, self.xhi, self.ylo, self.yhi = xlo, xhi, ylo, yhi

    def x(self, v):
        return _ML + (v - self.xlo) / (self.xhi - self.xlo) * (_W - _ML - _MR)

    def y(self, v):
        return _H - _MB - (v - self.ylo) / (self.yhi - self.ylo) * (_H - _MT - _MB)


def _n(v: float) -> str:
    return f"{v:.2f}"


def _axes(fr: _Frame, title: str) -> list[str]:
    out = [
        f'<text x="{_W / 2:.0f}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>',
        f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" height="{_H - _MT - _MB}" fill="none" stroke="#444"/>',
    ]
    for t in _ticks(fr.xlo, fr.xhi):
        out.append(f'<text x="{_n(fr.x(t))}" y="{_H - _MB + 16}" text-anchor="middle" font-size="11">{t:.4g}</text>')
    for t in _ticks(fr.ylo, fr.yhi):
        out.append(f'<text x="{_ML - 6}" y="{_n(fr.y(t) + 4)}" text-anchor="end" font-size="11">{t:.4g}</text>')
    return out


def render_svg(plot: PlotData) -> str:
    """Static chart for any :class:`PlotData` kind."""
    pts = plot.points
    if len(pts) == 0:
        raise DataError("nothing to draw: plot is empty")
    body: list[str] = []
    title = str(plot.metadata.get("title", plot.kind))

    if plot.kind == "histogram":
        fr = _Frame(float(pts[0, 0]), float(pts[-1, 1]), 0.0, float(pts[:, 2].max()) * 1.05)
        for left, right, count in pts:
            x0, x1, y0 = fr.x(left), fr.x(right), fr.y(count)
            body.append(
                f'<rect x="{_n(x0)}" y="{_n(y0)}" width="{_n(x1 - x0)}" height="{_n(fr.y(0) - y0)}" '
                'fill="#8fb3d9" stroke="#234"/>'
            )
    elif plot.kind in ("acf_stem", "pac_stem"):
        band = plot.metadata.get("band")
        ys = np.append(pts[:, 1], [0.0] + ([band, -band] if band else []))
        fr = _Frame(float(pts[0, 0]) - 0.5, float(pts[-1, 0]) + 0.5, min(float(ys.min()), -0.1) * 1.05, max(float(ys.max()), 0.1) * 1.05)
        body.append(f'<line x1="{_n(fr.x(fr.xlo))}" y1="{_n(fr.y(0))}" x2="{_n(fr.x(fr.xhi))}" y2="{_n(fr.y(0))}" stroke="#444"/>')
        if band:
            for b in (band, -band):
                body.append(
                    f'<line x1="{_n(fr.x(fr.xlo))}" y1="{_n(fr.y(b))}" x2="{_n(fr.x(fr.xhi))}" y2="{_n(fr.y(b))}" '
                    'stroke="#c33" stroke-dasharray="6,4"/>'
                )
        for lag, val in pts:
            body.append(f'<line x1="{_n(fr.x(lag))}" y1="{_n(fr.y(0))}" x2="{_n(fr.x(lag))}" y2="{_n(fr.y(val))}" stroke="#234" stroke-width="2"/>')
            body.append(f'<circle cx="{_n(fr.x(lag))}" cy="{_n(fr.y(val))}" r="3" fill="#234"/>')
    else:
        x0, x1 = float(pts[:, 0].min()), float(pts[:, 0].max())
        y0, y1 = float(pts[:, 1].min()), float(pts[:, 1].max())
        px, py = 0.03 * (x1 - x0), 0.05 * (y1 - y0)
        fr = _Frame(x0 - px, x1 + px, y0 - py, y1 + py)
        if plot.kind == "time_plot":
            coords = " ".join(f"{_n(fr.x(x))},{_n(fr.y(y))}" for x, y in pts)
            body.append(f'<polyline points="{coords}" fill="none" stroke="#234" stroke-width="1"/>')
        else:
            for x, y in pts:
                body.append(f'<circle cx="{_n(fr.x(x))}" cy="{_n(fr.y(y))}" r="2" fill="#234"/>')

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        '<rect width="100%" height="100%" fill="white"/>',
        *_axes(fr, title),
        *body,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
