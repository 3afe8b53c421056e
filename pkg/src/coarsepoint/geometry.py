"""Geometry primitives shared by every stage of the pipeline.

Coordinates are absolute pixels unless marked relative. Relative
coordinates express a point in units of its box's width and height, with
(0, 0) at the box center, so the box interior spans [-0.5, 0.5] x [-0.5, 0.5].
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

from .errors import DataError, ParameterError

# Smallest object size covered by the scale buckets; anything below is
# classified tiny but flagged with a warning.
SIZE_FLOOR = 2.0


@dataclass(frozen=True)
class Point2:
    """A 2-D point in absolute pixel coordinates."""

    x: float
    y: float


@dataclass(frozen=True)
class RelPoint:
    """A point in box-relative coordinates; (0, 0) is the box center.

    Values produced by the annotation samplers stay within [-0.5, 0.5];
    arbitrary points converted with :func:`rel_coords` may fall outside.
    """

    xr: float
    yr: float


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box given by its center (xc, yc) and extents (w, h)."""

    xc: float
    yc: float
    w: float
    h: float

    def __post_init__(self):
        if not (self.w > 0 and self.h > 0):
            raise ParameterError(
                f"box extents must be positive, got w={self.w}, h={self.h}"
            )

    @property
    def x_min(self) -> float:
        return self.xc - self.w / 2.0

    @property
    def x_max(self) -> float:
        return self.xc + self.w / 2.0

    @property
    def y_min(self) -> float:
        return self.yc - self.h / 2.0

    @property
    def y_max(self) -> float:
        return self.yc + self.h / 2.0

    @property
    def size(self) -> float:
        """Geometric-mean side length, sqrt(w * h)."""
        return math.sqrt(self.w * self.h)

    def contains(self, p: Point2) -> bool:
        """Closed-box membership test."""
        return point_box_distance(p, self) <= 1.0


@dataclass(frozen=True)
class GtObject:
    """A ground-truth object: its ordinal within the image and its box."""

    object_index: int
    bbox: BBox


@dataclass
class Scene:
    """One image's ground truth: extent plus an ordered object list."""

    image_id: str
    width: int
    height: int
    objects: list[GtObject] = field(default_factory=list)

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DataError(f"image {self.image_id}: non-positive extent")
        seen = set()
        for obj in self.objects:
            if obj.object_index in seen:
                raise DataError(
                    f"image {self.image_id}: duplicate object index {obj.object_index}"
                )
            seen.add(obj.object_index)
            b = obj.bbox
            if b.x_min < 0 or b.y_min < 0 or b.x_max > self.width or b.y_max > self.height:
                raise DataError(
                    f"image {self.image_id}: object {obj.object_index} box "
                    f"({b.xc}, {b.yc}, {b.w}, {b.h}) exceeds the image extent"
                )


class ScaleBucket(str, Enum):
    """Object-size bucket by sqrt(w*h): tiny [2,20), small [20,32),
    normal [32,inf); `all` spans [2,inf)."""

    TINY = "tiny"
    SMALL = "small"
    NORMAL = "normal"
    ALL = "all"


def point_box_distance(p: Point2, b: BBox) -> float:
    """Max-norm distance from p to the center of b, normalized per axis by
    the half-extents.

    Equals 0 at the center, exactly 1 on the box boundary, and is <= 1
    if and only if p lies inside the closed box.
    """
    return max(
        abs(p.x - b.xc) / (b.w / 2.0),
        abs(p.y - b.yc) / (b.h / 2.0),
    )


def rel_coords(p: Point2, b: BBox) -> RelPoint:
    """Express p in b's relative frame. Inverse of :func:`abs_coords`."""
    return RelPoint((p.x - b.xc) / b.w, (p.y - b.yc) / b.h)


def abs_coords(r: RelPoint, b: BBox) -> Point2:
    """Map a relative point back to absolute pixels within b."""
    return Point2(b.xc + r.xr * b.w, b.yc + r.yr * b.h)


def scale_bucket(b: BBox) -> ScaleBucket:
    """Classify a box into tiny/small/normal by its size sqrt(w*h).

    Interval endpoints are left-closed, right-open. Sizes below the
    bucket floor (2) fall outside the documented range; they are
    classified tiny and a warning is emitted.
    """
    size = b.size
    if size < SIZE_FLOOR:
        warnings.warn(
            f"object size {size:.4g} is below the bucket floor {SIZE_FLOOR}; "
            "classifying as tiny",
            stacklevel=2,
        )
        return ScaleBucket.TINY
    if size < 20.0:
        return ScaleBucket.TINY
    if size < 32.0:
        return ScaleBucket.SMALL
    return ScaleBucket.NORMAL


def in_bucket(b: BBox, bucket: ScaleBucket) -> bool:
    """Whether b belongs to the given bucket; `all` admits any size >= 2."""
    if bucket is ScaleBucket.ALL:
        return b.size >= SIZE_FLOOR
    return scale_bucket(b) is bucket
