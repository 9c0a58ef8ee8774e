"""Synthetic license-plate rendering: HR/LR pairs with exact character boxes.

Plates are rasterized from the bundled glyph atlas onto a 128x64 canvas,
tilted by a planar rotation plus horizontal shear, and degraded to a 4x
smaller LR image. All randomness is derived from explicit seeds, so any
sample can be regenerated bit-identically in isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import glyphs
from .errors import InvalidSpecError, ShapeError

PLATE_H = 64
PLATE_W = 128
SR_FACTOR = 4

MIN_CHARS = 4
MAX_CHARS = 8
MAX_TILT_DEG = 30.0

_STYLES = ("dark-on-light", "light-on-dark")

# Layout constants, in HR pixels before tilt-fit scaling.
_INK_HEIGHT = 26
_CHAR_GAP = 2
_WIDTH_FACTOR = 0.7
_FIT_MARGIN = 3.0


@dataclass
class PlateSpec:
    """Everything needed to regenerate one plate deterministically."""

    chars: tuple[int, ...]
    tilt_deg: float = 0.0
    plate_style: str = "dark-on-light"
    noise_sigma: float = 0.0
    blur_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self):
        self.chars = tuple(int(c) for c in self.chars)
        self.validate()

    def validate(self) -> None:
        if not MIN_CHARS <= len(self.chars) <= MAX_CHARS:
            raise InvalidSpecError(
                f"char count {len(self.chars)} outside [{MIN_CHARS}, {MAX_CHARS}]")
        for c in self.chars:
            if not 0 <= c < glyphs.N_CLASSES:
                raise InvalidSpecError(f"unknown class_id {c}")
        if abs(self.tilt_deg) > MAX_TILT_DEG:
            raise InvalidSpecError(f"|tilt_deg| {self.tilt_deg} exceeds {MAX_TILT_DEG}")
        if self.plate_style not in _STYLES:
            raise InvalidSpecError(f"unknown plate_style {self.plate_style!r}")
        if self.noise_sigma < 0 or self.blur_sigma < 0:
            raise InvalidSpecError("noise_sigma and blur_sigma must be >= 0")


@dataclass
class PlateImage:
    """H x W x 3 float32 intensities in [0, 1].

    Images produced by this module lie on the 1/65535 grid, so 16-bit PNG
    round-trips are bit-exact.
    """

    pixels: np.ndarray

    def __post_init__(self):
        self.pixels = np.asarray(self.pixels, dtype=np.float32)
        if self.pixels.ndim != 3 or self.pixels.shape[2] != 3:
            raise ShapeError(f"expected HxWx3 pixels, got {self.pixels.shape}")
        if self.pixels.min() < 0.0 or self.pixels.max() > 1.0:
            raise ValueError("pixel intensities outside [0, 1]")

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


@dataclass
class CharBox:
    """One character box, normalized to the unit square."""

    class_id: int
    cx: float
    cy: float
    w: float
    h: float

    def corners(self) -> tuple[float, float, float, float]:
        return (self.cx - self.w / 2, self.cy - self.h / 2,
                self.cx + self.w / 2, self.cy + self.h / 2)


@dataclass
class Annotation:
    boxes: list[CharBox]
    count: int = field(default=-1)

    def __post_init__(self):
        if self.count == -1:
            self.count = len(self.boxes)
        self.validate()

    def validate(self) -> None:
        if self.count != len(self.boxes):
            raise ValueError(f"count {self.count} != len(boxes) {len(self.boxes)}")
        for b in self.boxes:
            if not 0 <= b.class_id < glyphs.N_CLASSES:
                raise ValueError(f"class_id {b.class_id} outside alphabet")
            x0, y0, x1, y1 = b.corners()
            if x0 < -1e-9 or y0 < -1e-9 or x1 > 1 + 1e-9 or y1 > 1 + 1e-9:
                raise ValueError(f"box {b} outside unit square")


@dataclass
class PlateSample:
    lr: PlateImage
    hr: PlateImage
    annotation: Annotation

    def __post_init__(self):
        if (self.hr.height != SR_FACTOR * self.lr.height
                or self.hr.width != SR_FACTOR * self.lr.width):
            raise ShapeError("hr dimensions must be exactly 4x lr dimensions")


def tilt_matrix(tilt_deg: float) -> np.ndarray:
    """2x2 content->canvas matrix: rotation by tilt_deg plus horizontal shear."""
    theta = math.radians(tilt_deg)
    shear = math.tan(theta / 2.0)
    rot = np.array([[math.cos(theta), -math.sin(theta)],
                    [math.sin(theta), math.cos(theta)]])
    sh = np.array([[1.0, shear], [0.0, 1.0]])
    return rot @ sh


def _resize_nearest(bitmap: np.ndarray, h: int, w: int) -> np.ndarray:
    rows, cols = bitmap.shape
    ri = (np.arange(h) * rows) // h
    ci = (np.arange(w) * cols) // w
    return bitmap[ri][:, ci]


def _layout(chars, scale: float):
    """Integer glyph placements (x0, y0, w, h) per char, centered at origin."""
    h = max(6, int(round(_INK_HEIGHT * scale)))
    gap = max(1, int(round(_CHAR_GAP * scale)))
    widths = []
    for c in chars:
        bm = glyphs.glyph_bitmap(c)
        rows, cols = bm.shape
        w = max(2, int(round(cols * (h / rows) * _WIDTH_FACTOR)))
        widths.append(w)
    total = sum(widths) + gap * (len(chars) - 1)
    x = -total / 2.0
    y0 = -h / 2.0
    cells = []
    for w in widths:
        cells.append((x, y0, w, h))
        x += w + gap
    return cells


def _fit_scale(chars, mat: np.ndarray, height: int, width: int) -> float:
    """Largest layout scale whose tilted glyph band stays inside the canvas."""
    scale = 1.0
    for _ in range(40):
        cells = _layout(chars, scale)
        x0 = cells[0][0]
        x1 = cells[-1][0] + cells[-1][2]
        y0, h = cells[0][1], cells[0][3]
        hx = max(abs(x0), abs(x1))
        hy = max(abs(y0), abs(y0 + h))
        ex = hx * abs(mat[0, 0]) + hy * abs(mat[0, 1])
        ey = hx * abs(mat[1, 0]) + hy * abs(mat[1, 1])
        if ex <= width / 2 - _FIT_MARGIN and ey <= height / 2 - _FIT_MARGIN:
            return scale
        scale *= 0.95
    return scale


def quantize16(pixels: np.ndarray) -> np.ndarray:
    """Snap intensities to the 16-bit PNG grid (k/65535) as float32."""
    return (np.round(np.asarray(pixels, dtype=np.float64) * 65535.0)
            / 65535.0).astype(np.float32)


def render_plate(spec: PlateSpec, height: int = PLATE_H,
                 width: int = PLATE_W) -> tuple[PlateImage, Annotation]:
    """Rasterize a plate spec into an HR image plus per-character boxes.

    Boxes are the axis-aligned bounds of each tilted glyph rectangle,
    normalized to [0, 1]. Deterministic given spec.seed.
    """
    spec.validate()
    rng = np.random.default_rng(np.random.SeedSequence(spec.seed))

    base = rng.uniform(0.78, 0.92)
    ink = rng.uniform(0.05, 0.18)
    if spec.plate_style == "light-on-dark":
        base, ink = 1.0 - base, 1.0 - ink
    tint = rng.uniform(-0.04, 0.04, size=3)
    bg_rgb = np.clip(base + tint, 0.0, 1.0)
    ink_rgb = np.clip(ink + tint * 0.5, 0.0, 1.0)

    mat = tilt_matrix(spec.tilt_deg)
    scale = _fit_scale(spec.chars, mat, height, width)
    cells = _layout(spec.chars, scale)

    content = np.empty((height, width, 3), dtype=np.float64)
    content[:] = bg_rgb
    cx0, cy0 = width / 2.0, height / 2.0
    rects = []
    for (x0, y0, w, h), cid in zip(cells, spec.chars):
        px = int(round(cx0 + x0))
        py = int(round(cy0 + y0))
        mask = _resize_nearest(glyphs.glyph_bitmap(cid), h, w)
        content[py:py + h, px:px + w][mask] = ink_rgb
        rects.append((px, py, px + w, py + h))

    if abs(spec.tilt_deg) > 1e-12:
        # output(y, x) samples content at inv(mat) applied about the center
        inv = np.linalg.inv(mat)
        inv_yx = np.array([[inv[1, 1], inv[1, 0]], [inv[0, 1], inv[0, 0]]])
        center = np.array([cy0, cx0])
        offset = center - inv_yx @ center
        out = np.empty_like(content)
        for ch in range(3):
            out[:, :, ch] = ndimage.affine_transform(
                content[:, :, ch], inv_yx, offset=offset, order=1,
                mode="nearest")
        content = out

    boxes = []
    for (x0, y0, x1, y1), cid in zip(rects, spec.chars):
        pts = np.array([[x0, y0], [x1, y0], [x0, y1], [x1, y1]], dtype=np.float64)
        pts -= (cx0, cy0)
        pts = pts @ mat.T
        pts += (cx0, cy0)
        bx0, by0 = pts.min(axis=0)
        bx1, by1 = pts.max(axis=0)
        bx0, bx1 = max(bx0, 0.0) / width, min(bx1, width) / width
        by0, by1 = max(by0, 0.0) / height, min(by1, height) / height
        boxes.append(CharBox(int(cid), (bx0 + bx1) / 2, (by0 + by1) / 2,
                             bx1 - bx0, by1 - by0))

    image = PlateImage(quantize16(np.clip(content, 0.0, 1.0)))
    return image, Annotation(boxes)


def degrade(hr: PlateImage, factor: int = SR_FACTOR, blur_sigma: float = 0.0,
            noise_sigma: float = 0.0, seed: int = 0) -> PlateImage:
    """Gaussian blur, area-downsample by `factor`, then clipped additive noise."""
    h, w = hr.height, hr.width
    if h % factor or w % factor:
        raise ShapeError(f"dimensions {h}x{w} not divisible by factor {factor}")
    px = hr.pixels.astype(np.float64)
    if blur_sigma > 0:
        px = ndimage.gaussian_filter(px, sigma=(blur_sigma, blur_sigma, 0))
    px = px.reshape(h // factor, factor, w // factor, factor, 3).mean(axis=(1, 3))
    if noise_sigma > 0:
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        px = px + rng.normal(0.0, noise_sigma, size=px.shape)
    return PlateImage(quantize16(np.clip(px, 0.0, 1.0)))


def upsample_bicubic(lr: PlateImage, factor: int = SR_FACTOR) -> PlateImage:
    """Bicubic upsample, the non-learned reference input for baselines."""
    import cv2

    up = cv2.resize(lr.pixels, (lr.width * factor, lr.height * factor),
                    interpolation=cv2.INTER_CUBIC)
    return PlateImage(np.clip(up, 0.0, 1.0))


@dataclass
class CorpusConfig:
    """Distribution the synthetic corpus is drawn from."""

    n: int = 100
    seed: int = 0
    tilt_max: float = MAX_TILT_DEG
    factor: int = SR_FACTOR
    min_chars: int = MIN_CHARS
    max_chars: int = MAX_CHARS
    blur_range: tuple[float, float] = (0.8, 1.3)
    noise_range: tuple[float, float] = (0.01, 0.04)
    light_on_dark_fraction: float = 0.3
    height: int = PLATE_H
    width: int = PLATE_W


def sample_spec(cfg: CorpusConfig, index: int) -> PlateSpec:
    """Spec for corpus item `index`; independent of any other index."""
    rng = np.random.default_rng(
        np.random.SeedSequence(entropy=cfg.seed, spawn_key=(index,)))
    n = int(rng.integers(cfg.min_chars, cfg.max_chars + 1))
    chars = tuple(int(c) for c in rng.integers(0, glyphs.N_CLASSES, size=n))
    style = ("light-on-dark"
             if rng.random() < cfg.light_on_dark_fraction else "dark-on-light")
    return PlateSpec(
        chars=chars,
        tilt_deg=float(rng.uniform(-cfg.tilt_max, cfg.tilt_max)),
        plate_style=style,
        noise_sigma=float(rng.uniform(*cfg.noise_range)),
        blur_sigma=float(rng.uniform(*cfg.blur_range)),
        seed=int(rng.integers(0, 2**63)),
    )


def make_sample(spec: PlateSpec, factor: int = SR_FACTOR, height: int = PLATE_H,
                width: int = PLATE_W) -> PlateSample:
    hr, ann = render_plate(spec, height=height, width=width)
    lr = degrade(hr, factor, spec.blur_sigma, spec.noise_sigma,
                 seed=spec.seed ^ 0x9E3779B97F4A7C15)
    return PlateSample(lr=lr, hr=hr, annotation=ann)


def make_corpus(cfg: CorpusConfig) -> list[PlateSample]:
    return [
        make_sample(sample_spec(cfg, i), cfg.factor, cfg.height, cfg.width)
        for i in range(cfg.n)
    ]
