"""Deterministic SVG figures of the movable cone slice for rank-3 varieties.

Rays are normalized onto the affine slice sum(coords) = 1 and projected
to 2D along the fixed normal (1,1,1)/sqrt(3); chambers become triangles,
boundary cones become segments (or points, when a pair cone has a single
generator).  Output is byte-deterministic for fixed inputs: elements are
sorted, coordinates rounded to 1e-6, no timestamps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cones import ConeDescription, boundary_cones, chamber_orbit
from .coxeter import ReducedWord, ReflectionRep
from .errors import RankNotThree

_SQRT6 = math.sqrt(6.0)
_SQRT2 = math.sqrt(2.0)
_U1 = (2.0 / _SQRT6, -1.0 / _SQRT6, -1.0 / _SQRT6)
_U2 = (0.0, 1.0 / _SQRT2, -1.0 / _SQRT2)


@dataclass(frozen=True)
class RenderOptions:
    size: tuple[int, int] = (640, 640)
    margin: float = 24.0
    layers: str = "both"  # "orbit" | "boundary" | "both"
    chamber_fill: str = "#d8d8d8"
    nef_fill: str = "#9a9a9a"
    chamber_stroke: str = "#505050"
    family1_color: str = "#1f6fd0"  # codimension-one faces off J
    family2_color: str = "#d02f2f"  # pair eigenvector cones


@dataclass(frozen=True)
class ChamberPolygon:
    word: ReducedWord
    points: tuple[tuple[float, float], ...]

    @property
    def depth(self) -> int:
        return len(self.word)

    def diameter(self) -> float:
        pts = self.points
        return max(
            math.dist(a, b) for i, a in enumerate(pts) for b in pts[i + 1 :]
        )


@dataclass(frozen=True)
class BoundarySegment:
    family: int  # 1 or 2
    a: tuple[float, float]
    b: tuple[float, float]


@dataclass(frozen=True)
class BoundaryMarker:
    family: int
    at: tuple[float, float]


@dataclass(frozen=True)
class SliceScene:
    chambers: tuple[ChamberPolygon, ...]
    segments: tuple[BoundarySegment, ...]
    markers: tuple[BoundaryMarker, ...]
    options: RenderOptions = field(default_factory=RenderOptions)


def _slice_project(vec) -> tuple[float, float] | None:
    """Map a ray to the slice sum = 1 and project to the fixed 2D basis."""
    floats = [float(x) for x in vec]
    total = sum(floats)
    if abs(total) < 1e-14:
        return None
    sliced = [x / total for x in floats]
    return (
        sum(a * b for a, b in zip(sliced, _U1)),
        sum(a * b for a, b in zip(sliced, _U2)),
    )


def _triangle_area(points) -> float:
    (x1, y1), (x2, y2), (x3, y3) = points
    return abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)) / 2


def build_scene(
    rep: ReflectionRep,
    chambers: list[tuple[ReducedWord, tuple]],
    boundary: list[ConeDescription],
    options: RenderOptions | None = None,
) -> SliceScene:
    """Project chamber matrices and boundary cones onto the slice.

    `chambers` is the output of `chamber_orbit`, `boundary` of
    `boundary_cones` (either may be empty).  Zero-area chamber polygons
    are dropped.
    """
    if rep.l != 3:
        raise RankNotThree(f"slice rendering needs exactly 3 factors, got {rep.l}")
    options = options or RenderOptions()

    polygons = []
    for word, mat in chambers:
        cols = [tuple(mat[r][c] for r in range(3)) for c in range(3)]
        pts = [_slice_project(col) for col in cols]
        if any(p is None for p in pts):
            continue
        if _triangle_area(pts) < 1e-12:
            continue
        polygons.append(ChamberPolygon(word=word, points=tuple(pts)))

    segments = []
    markers = []
    for cone in boundary:
        family = 1 if cone.kind == "face-outside-J" else 2
        pts = [
            p
            for g in cone.generators
            if any(g)
            for p in [_slice_project(g)]
            if p is not None
        ]
        if len(pts) >= 2:
            for a, b in zip(pts, pts[1:]):
                segments.append(BoundarySegment(family=family, a=a, b=b))
        elif len(pts) == 1:
            markers.append(BoundaryMarker(family=family, at=pts[0]))

    return SliceScene(
        chambers=tuple(sorted(polygons, key=lambda c: (c.depth, c.word.letters))),
        segments=tuple(sorted(segments, key=lambda s: (s.family, s.a, s.b))),
        markers=tuple(sorted(markers, key=lambda m: (m.family, m.at))),
        options=options,
    )


def render_variety(
    rep: ReflectionRep, depth: int, options: RenderOptions | None = None
) -> SliceScene:
    """Scene with the chamber orbit and (unless layers="orbit") the boundary."""
    options = options or RenderOptions()
    chambers = chamber_orbit(rep, depth) if options.layers in ("orbit", "both") else []
    boundary = (
        boundary_cones(rep, depth=depth)
        if options.layers in ("boundary", "both")
        else []
    )
    return build_scene(rep, chambers, boundary, options)


def max_chamber_diameter(scene: SliceScene, depth: int) -> float:
    """Largest diameter among chamber polygons of exactly this word length."""
    diams = [c.diameter() for c in scene.chambers if c.depth == depth]
    if not diams:
        raise ValueError(f"no chambers of depth {depth} in the scene")
    return max(diams)


def _fmt(x: float) -> str:
    value = round(x, 6)
    if value == 0:
        value = 0.0  # avoid "-0.0"
    return f"{value:.6f}"


def scene_svg(scene: SliceScene) -> str:
    """Serialize the scene; same scene gives identical text."""
    width, height = scene.options.size
    margin = scene.options.margin

    points = [p for c in scene.chambers for p in c.points]
    points += [s.a for s in scene.segments] + [s.b for s in scene.segments]
    points += [m.at for m in scene.markers]
    if points:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    else:
        lo_x, hi_x, lo_y, hi_y = -1.0, 1.0, -1.0, 1.0
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    scale = (min(width, height) - 2 * margin) / span

    def to_view(p):
        # y flipped: SVG grows downward
        return (
            margin + (p[0] - lo_x) * scale,
            height - margin - (p[1] - lo_y) * scale,
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- movable-cone slice; coordinates rounded to 1e-06 -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for chamber in scene.chambers:
        fill = scene.options.nef_fill if chamber.depth == 0 else scene.options.chamber_fill
        coords = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (to_view(p) for p in chamber.points)
        )
        lines.append(
            f'<polygon points="{coords}" fill="{fill}" '
            f'stroke="{scene.options.chamber_stroke}" stroke-width="0.6"/>'
        )
    for seg in scene.segments:
        color = scene.options.family1_color if seg.family == 1 else scene.options.family2_color
        (x1, y1), (x2, y2) = to_view(seg.a), to_view(seg.b)
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="2.0"/>'
        )
    for marker in scene.markers:
        color = scene.options.family1_color if marker.family == 1 else scene.options.family2_color
        x, y = to_view(marker.at)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.0" fill="{color}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(scene: SliceScene, path) -> bytes:
    """Write the SVG file and return its bytes (byte-deterministic)."""
    data = scene_svg(scene).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(data)
    return data
