"""Parametric glyph rasterizer.

Each of the 52 Roman letters is a set of stroke polylines in a unit em box
(x right, y down, baseline at y=0.80). A font is a small bundle of style
parameters (stroke width, slant, serif/rounded/outline/shadow flags, width
ratio) applied to those skeletons through an anti-aliased distance field.
Rendering is pure numpy and bit-deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import GLYPHS

CAP_T = 0.10  # cap height
X_T = 0.44  # x-height
BASE = 0.80  # baseline
DESC = 0.99  # descender depth
_MID = (CAP_T + BASE) / 2  # 0.45

DEFAULT_SIZE = 128


class UnknownGlyphError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    """Style parameters of one synthetic font family."""

    stroke_width: float  # em units, nominal range 0.03..0.13
    slant_degrees: float
    serif: bool
    rounded: bool
    outline: bool
    shadow: bool
    width_ratio: float  # horizontal scale, nominal range 0.7..1.3

    def to_dict(self) -> dict:
        return {
            "stroke_width": self.stroke_width,
            "slant_degrees": self.slant_degrees,
            "serif": self.serif,
            "rounded": self.rounded,
            "outline": self.outline,
            "shadow": self.shadow,
            "width_ratio": self.width_ratio,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyParams":
        return cls(
            stroke_width=float(d["stroke_width"]),
            slant_degrees=float(d["slant_degrees"]),
            serif=bool(d["serif"]),
            rounded=bool(d["rounded"]),
            outline=bool(d["outline"]),
            shadow=bool(d["shadow"]),
            width_ratio=float(d["width_ratio"]),
        )


def _arc(cx, cy, rx, ry, deg0, deg1, n=18):
    """Elliptic arc polyline; angles in screen degrees (0=right, 90=down)."""
    a = np.radians(np.linspace(deg0, deg1, n))
    return np.stack([cx + rx * np.cos(a), cy + ry * np.sin(a)], axis=1)


def _line(*pts):
    return np.asarray(pts, dtype=float)


def _build_skeletons() -> dict[str, list[np.ndarray]]:
    L, R, C = 0.22, 0.78, 0.50
    T, B, M = CAP_T, BASE, _MID
    s: dict[str, list[np.ndarray]] = {}

    # uppercase
    s["A"] = [_line((L, B), (C, T)), _line((C, T), (R, B)), _line((0.33, 0.56), (0.67, 0.56))]
    s["B"] = [
        _line((L, B), (L, T)),
        np.vstack([_line((L, T), (0.58, T)), _arc(0.58, (T + M) / 2, 0.18, (M - T) / 2, -90, 90), _line((0.58, M), (L, M))]),
        np.vstack([_line((L, M), (0.60, M)), _arc(0.60, (M + B) / 2, 0.20, (B - M) / 2, -90, 90), _line((0.60, B), (L, B))]),
    ]
    s["C"] = [_arc(0.52, M, 0.30, 0.35, 45, 315)]
    s["D"] = [
        _line((L, B), (L, T)),
        np.vstack([_line((L, T), (0.48, T)), _arc(0.48, M, 0.32, 0.35, -90, 90), _line((0.48, B), (L, B))]),
    ]
    s["E"] = [_line((R, T), (L, T)), _line((L, T), (L, B)), _line((L, B), (R, B)), _line((L, M), (0.68, M))]
    s["F"] = [_line((R, T), (L, T)), _line((L, T), (L, B)), _line((L, M), (0.66, M))]
    s["G"] = [_arc(0.52, M, 0.30, 0.35, 45, 315), _line((0.82, 0.57), (0.55, 0.57)), _line((0.82, 0.57), (0.82, 0.72))]
    s["H"] = [_line((L, T), (L, B)), _line((R, T), (R, B)), _line((L, M), (R, M))]
    s["I"] = [_line((C, T), (C, B))]
    s["J"] = [_line((0.66, T), (0.66, 0.62)), _arc(0.46, 0.62, 0.20, 0.18, 0, 135)]
    s["K"] = [_line((L, T), (L, B)), _line((L, M), (R, T)), _line((0.40, 0.47), (R, B))]
    s["L"] = [_line((L, T), (L, B)), _line((L, B), (R, B))]
    s["M"] = [_line((L, B), (L, T)), _line((L, T), (C, 0.58)), _line((C, 0.58), (R, T)), _line((R, T), (R, B))]
    s["N"] = [_line((L, B), (L, T)), _line((L, T), (R, B)), _line((R, B), (R, T))]
    s["O"] = [_arc(C, M, 0.30, 0.35, 0, 360, 28)]
    s["P"] = [
        _line((L, B), (L, T)),
        np.vstack([_line((L, T), (0.58, T)), _arc(0.58, (T + M) / 2, 0.20, (M - T) / 2, -90, 90), _line((0.58, M), (L, M))]),
    ]
    s["Q"] = [_arc(C, M, 0.30, 0.35, 0, 360, 28), _line((0.60, 0.62), (0.84, 0.88))]
    s["R"] = [
        _line((L, B), (L, T)),
        np.vstack([_line((L, T), (0.58, T)), _arc(0.58, (T + M) / 2, 0.20, (M - T) / 2, -90, 90), _line((0.58, M), (L, M))]),
        _line((0.42, M), (R, B)),
    ]
    s["S"] = [
        _arc(0.50, 0.285, 0.26, 0.185, 330, 90, 24),
        _arc(0.50, 0.625, 0.27, 0.185, 270, 510, 24),
    ]
    s["T"] = [_line((0.16, T), (0.84, T)), _line((C, T), (C, B))]
    s["U"] = [
        np.vstack([_line((L, T), (L, 0.60)), _arc(C, 0.60, 0.28, 0.20, 180, 0), _line((R, 0.60), (R, T))]),
    ]
    s["V"] = [_line((L, T), (C, B)), _line((C, B), (R, T))]
    s["W"] = [
        _line((0.14, T), (0.33, B)),
        _line((0.33, B), (C, 0.38)),
        _line((C, 0.38), (0.67, B)),
        _line((0.67, B), (0.86, T)),
    ]
    s["X"] = [_line((L, T), (R, B)), _line((R, T), (L, B))]
    s["Y"] = [_line((L, T), (C, M)), _line((R, T), (C, M)), _line((C, M), (C, B))]
    s["Z"] = [_line((L, T), (R, T)), _line((R, T), (L, B)), _line((L, B), (R, B))]

    # lowercase
    bc = (X_T + BASE) / 2  # bowl center y, 0.62
    br, bry = 0.17, (BASE - X_T) / 2
    s["a"] = [_arc(0.45, bc, br, bry, 0, 360, 24), _line((0.62, X_T), (0.62, B))]
    s["b"] = [_line((0.30, T), (0.30, B)), _arc(0.47, bc, br, bry, 0, 360, 24)]
    s["c"] = [_arc(0.50, bc, br, bry, 50, 310, 20)]
    s["d"] = [_line((0.70, T), (0.70, B)), _arc(0.53, bc, br, bry, 0, 360, 24)]
    s["e"] = [_arc(0.50, bc, br, bry, 30, 330, 22), _line((0.33, bc), (0.67, bc))]
    s["f"] = [
        np.vstack([_arc(0.62, 0.26, 0.14, 0.14, 270, 180, 10), _line((0.48, 0.26), (0.48, B))]),
        _line((0.34, X_T), (0.64, X_T)),
    ]
    s["g"] = [
        _arc(0.47, bc, br, bry, 0, 360, 24),
        np.vstack([_line((0.64, X_T), (0.64, 0.88)), _arc(0.46, 0.88, 0.18, 0.11, 0, 140, 10)]),
    ]
    s["h"] = [
        _line((0.30, T), (0.30, B)),
        np.vstack([_arc(0.48, bc, 0.18, bry, 180, 360, 12), _line((0.66, bc), (0.66, B))]),
    ]
    s["i"] = [_line((0.50, X_T), (0.50, B)), _line((0.50, 0.28), (0.50, 0.305))]
    s["j"] = [
        np.vstack([_line((0.58, X_T), (0.58, 0.90)), _arc(0.44, 0.90, 0.14, 0.09, 0, 130, 8)]),
        _line((0.58, 0.28), (0.58, 0.305)),
    ]
    s["k"] = [_line((0.30, T), (0.30, B)), _line((0.30, 0.60), (0.68, X_T)), _line((0.44, 0.54), (0.70, B))]
    s["l"] = [_line((0.50, T), (0.50, B))]
    s["m"] = [
        _line((0.20, X_T), (0.20, B)),
        np.vstack([_arc(0.35, 0.54, 0.15, 0.10, 180, 360, 10), _line((0.50, 0.54), (0.50, B))]),
        np.vstack([_arc(0.65, 0.54, 0.15, 0.10, 180, 360, 10), _line((0.80, 0.54), (0.80, B))]),
    ]
    s["n"] = [
        _line((0.32, X_T), (0.32, B)),
        np.vstack([_arc(0.50, 0.56, 0.18, 0.12, 180, 360, 12), _line((0.68, 0.56), (0.68, B))]),
    ]
    s["o"] = [_arc(0.50, bc, br, bry, 0, 360, 24)]
    s["p"] = [_line((0.30, X_T), (0.30, DESC)), _arc(0.47, bc, br, bry, 0, 360, 24)]
    s["q"] = [_line((0.70, X_T), (0.70, DESC)), _arc(0.53, bc, br, bry, 0, 360, 24)]
    s["r"] = [_line((0.34, X_T), (0.34, B)), _arc(0.52, 0.57, 0.18, 0.13, 180, 300, 10)]
    s["s"] = [
        _arc(0.50, 0.525, 0.15, 0.085, 330, 90, 16),
        _arc(0.50, 0.695, 0.155, 0.085, 270, 510, 16),
    ]
    s["t"] = [
        np.vstack([_line((0.46, 0.24), (0.46, 0.70)), _arc(0.56, 0.70, 0.10, 0.10, 180, 90, 8)]),
        _line((0.32, X_T), (0.62, X_T)),
    ]
    s["u"] = [
        np.vstack([_line((0.32, X_T), (0.32, 0.68)), _arc(0.50, 0.68, 0.18, 0.12, 180, 0, 12)]),
        _line((0.68, X_T), (0.68, B)),
    ]
    s["v"] = [_line((0.28, X_T), (0.50, B)), _line((0.50, B), (0.72, X_T))]
    s["w"] = [
        _line((0.20, X_T), (0.35, B)),
        _line((0.35, B), (0.50, 0.55)),
        _line((0.50, 0.55), (0.65, B)),
        _line((0.65, B), (0.80, X_T)),
    ]
    s["x"] = [_line((0.30, X_T), (0.70, B)), _line((0.70, X_T), (0.30, B))]
    s["y"] = [_line((0.28, X_T), (0.52, B)), _line((0.74, X_T), (0.36, DESC))]
    s["z"] = [_line((0.30, X_T), (0.70, X_T)), _line((0.70, X_T), (0.30, B)), _line((0.30, B), (0.70, B))]
    return s


_SKELETONS = _build_skeletons()


def _segments_for(char: str, params: FamilyParams) -> np.ndarray:
    """Transformed (K, 2, 2) stroke segments for one glyph."""
    if char not in _SKELETONS:
        raise UnknownGlyphError(f"unsupported character: {char!r}")
    shear = math.tan(math.radians(params.slant_degrees))
    segs = []
    serif_len = max(0.045, 1.1 * params.stroke_width)
    for poly in _SKELETONS[char]:
        pts = poly.copy()
        pts[:, 0] = 0.5 + (pts[:, 0] - 0.5) * params.width_ratio
        pts[:, 0] = pts[:, 0] + shear * (BASE - pts[:, 1])
        for a, b in zip(pts[:-1], pts[1:]):
            segs.append((a, b))
        if params.serif and len(pts) >= 2:
            for end, nb in ((pts[0], pts[1]), (pts[-1], pts[-2])):
                d = end - nb
                if abs(d[1]) > 1.7 * abs(d[0]):  # near-vertical stroke end
                    segs.append(
                        (
                            np.array([end[0] - serif_len, end[1]]),
                            np.array([end[0] + serif_len, end[1]]),
                        )
                    )
    return np.asarray(segs)


def _stroke_distance(grid: np.ndarray, segs: np.ndarray, rounded: bool) -> np.ndarray:
    """Min distance from each grid point to the stroke segments.

    Round caps use euclidean capsule distance; butt caps use the max of
    perpendicular distance and longitudinal overshoot.
    """
    a = segs[:, 0][None, :, :]  # (1,K,2)
    b = segs[:, 1][None, :, :]
    p = grid[:, None, :]  # (P,1,2)
    ab = b - a
    denom = np.maximum((ab * ab).sum(-1), 1e-12)
    t = ((p - a) * ab).sum(-1) / denom
    tc = np.clip(t, 0.0, 1.0)
    closest = a + tc[..., None] * ab
    perp = np.linalg.norm(p - closest, axis=-1)
    if rounded:
        d = perp
    else:
        over = np.maximum(t - 1.0, np.maximum(-t, 0.0)) * np.sqrt(denom)
        d = np.maximum(perp, over)
    return d.min(axis=1)


def _glyph_alpha(char: str, params: FamilyParams, size: int, offset: float = 0.0) -> np.ndarray:
    """Ink alpha in [0,1] at each pixel (offset shifts the glyph, for shadows)."""
    segs = _segments_for(char, params)
    ys, xs = np.mgrid[0:size, 0:size]
    margin = 0.07
    scale = size * (1 - 2 * margin)
    grid = np.stack(
        [
            (xs.ravel() + 0.5) / size,
            (ys.ravel() + 0.5) / size,
        ],
        axis=1,
    )
    grid = (grid - margin - offset) / (1 - 2 * margin)
    d = _stroke_distance(grid, segs, params.rounded) * scale
    hw = 0.5 * params.stroke_width * scale
    aa = 1.0  # anti-alias ramp, pixels
    if params.outline:
        ring_hw = max(1.0, 0.20 * hw)
        ring = np.clip((ring_hw - np.abs(d - hw)) / aa + 0.5, 0.0, 1.0)
        fill = np.clip((hw - ring_hw - d) / aa + 0.5, 0.0, 1.0)
        alpha = np.maximum(ring, 0.35 * fill)
    else:
        alpha = np.clip((hw - d) / aa + 0.5, 0.0, 1.0)
    return alpha.reshape(size, size)


@lru_cache(maxsize=8192)
def _render_cached(params: FamilyParams, char: str, size: int) -> np.ndarray:
    alpha = _glyph_alpha(char, params, size)
    if params.shadow:
        sh = _glyph_alpha(char, params, size, offset=0.03)
        ink = alpha + 0.45 * sh * (1.0 - alpha)
    else:
        ink = alpha
    img = (1.0 - ink).astype(np.float32)
    img.setflags(write=False)
    return img


def render_glyph(params: FamilyParams, char: str, size: int = DEFAULT_SIZE) -> np.ndarray:
    """Render one glyph as a (size, size) float32 grid, white=1.0, ink=0.0."""
    if char not in GLYPHS:
        raise UnknownGlyphError(f"unsupported character: {char!r}")
    if size < 16:
        raise ValueError("size must be at least 16")
    return _render_cached(params, char, int(size))


def render_font(params: FamilyParams, size: int = DEFAULT_SIZE) -> dict[str, np.ndarray]:
    """All 52 glyphs of a font, keyed by character."""
    return {c: render_glyph(params, c, size) for c in GLYPHS}
