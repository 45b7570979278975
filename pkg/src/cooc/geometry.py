"""The bitext space and interpolated bitext maps.

A bitext map is a monotonic polyline through anchor points ``(x, y)``,
where ``x`` is an offset into the first text half and ``y`` an offset into
the second, both in the same axis units (characters or tokens).
"""
from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputFormatError, NonMonotonicMap, OutOfBounds


class Units(str, enum.Enum):
    CHARACTERS = "characters"
    TOKENS = "tokens"


@dataclass(frozen=True)
class BitextSpace:
    width: float
    height: float
    units: Units = Units.CHARACTERS

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError(f"negative bitext space size {self.width}x{self.height}")
        object.__setattr__(self, "units", Units(self.units))

    def contains(self, x: float, y: float) -> bool:
        return 0 <= x <= self.width and 0 <= y <= self.height


@dataclass(frozen=True)
class AnchorPoint:
    x: float
    y: float


def point_segment_distance(px, py, ax, ay, bx, by):
    """Euclidean distance from ``(px, py)`` to the segment ``a``-``b``.

    The compiled kernel mirrors this function operation for operation, so
    keep the two in sync: both backends must agree to the last bit.
    """
    dx = bx - ax
    dy = by - ay
    l2 = dx * dx + dy * dy
    if l2 == 0.0:
        ex = px - ax
        ey = py - ay
    else:
        t = ((px - ax) * dx + (py - ay) * dy) / l2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        ex = px - (ax + t * dx)
        ey = py - (ay + t * dy)
    return math.sqrt(ex * ex + ey * ey)


class BitextMap:
    """Immutable monotonic polyline in a :class:`BitextSpace`.

    Build instances with :func:`load_map`, which validates and normalizes
    the anchors.
    """

    __slots__ = ("_xs", "_ys", "space")

    def __init__(self, anchors: Sequence[AnchorPoint], space: BitextSpace):
        self._xs = tuple(float(a.x) for a in anchors)
        self._ys = tuple(float(a.y) for a in anchors)
        self.space = space

    @property
    def anchors(self) -> tuple[AnchorPoint, ...]:
        return tuple(AnchorPoint(x, y) for x, y in zip(self._xs, self._ys))

    @property
    def xs(self) -> tuple[float, ...]:
        return self._xs

    @property
    def ys(self) -> tuple[float, ...]:
        return self._ys

    def __len__(self):
        return len(self._xs)

    def __eq__(self, other):
        if not isinstance(other, BitextMap):
            return NotImplemented
        return (self._xs, self._ys, self.space) == (other._xs, other._ys, other.space)

    def __hash__(self):
        return hash((self._xs, self._ys, self.space))

    def __repr__(self):
        pts = ", ".join(f"({x:g},{y:g})" for x, y in zip(self._xs, self._ys))
        return f"BitextMap([{pts}], {self.space})"

    def interpolate(self, x: float) -> tuple[float, float]:
        """Range of map ``y`` values at abscissa ``x``.

        Returns ``(low, high)``; the two differ only where the map has a
        vertical run at ``x``.
        """
        xs, ys = self._xs, self._ys
        if not xs[0] <= x <= xs[-1]:
            raise OutOfBounds(f"x={x} outside map domain [{xs[0]}, {xs[-1]}]")
        lo = bisect_left(xs, x)
        hi = bisect_right(xs, x)
        if lo < hi:
            return ys[lo], ys[hi - 1]
        x0, x1, y0, y1 = xs[lo - 1], xs[lo], ys[lo - 1], ys[lo]
        y = y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return y, y

    def max_gap(self) -> float:
        """Longest distance between consecutive anchors."""
        xs, ys = self._xs, self._ys
        return max(
            (math.hypot(xs[k + 1] - xs[k], ys[k + 1] - ys[k]) for k in range(len(xs) - 1)),
            default=0.0,
        )


def load_map(anchor_records: Iterable[Sequence[float]], space: BitextSpace) -> BitextMap:
    """Validate anchor records and build a :class:`BitextMap`.

    Records are stably sorted by ``x``; ties must be nondecreasing in ``y``.
    Corner anchors ``(0, 0)`` and ``(width, height)`` are added when absent
    and consecutive duplicates are collapsed. Errors carry the index of the
    offending record.
    """
    records = []
    for idx, rec in enumerate(anchor_records):
        x, y = float(rec[0]), float(rec[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise OutOfBounds(f"anchor ({x}, {y}) is not finite", index=idx)
        if not space.contains(x, y):
            raise OutOfBounds(
                f"anchor ({x:g}, {y:g}) outside bitext space {space.width:g}x{space.height:g}",
                index=idx,
            )
        records.append((x, y, idx))
    records.sort(key=lambda r: r[0])
    for prev, cur in zip(records, records[1:]):
        if cur[1] < prev[1]:
            raise NonMonotonicMap(
                f"anchor ({cur[0]:g}, {cur[1]:g}) decreases in y after ({prev[0]:g}, {prev[1]:g})",
                index=cur[2],
            )
    points = [(0.0, 0.0)] + [(x, y) for x, y, _ in records] + [(float(space.width), float(space.height))]
    anchors = []
    for x, y in points:
        if anchors and anchors[-1] == (x, y):
            continue
        anchors.append((x, y))
    return BitextMap([AnchorPoint(x, y) for x, y in anchors], space)


def map_distance(bmap: BitextMap, point: Sequence[float]) -> float:
    """Minimum Euclidean distance from ``point`` to the map polyline."""
    px, py = float(point[0]), float(point[1])
    if not bmap.space.contains(px, py):
        raise OutOfBounds(f"point ({px:g}, {py:g}) outside the bitext space")
    xs, ys = bmap.xs, bmap.ys
    if len(xs) == 1:
        return point_segment_distance(px, py, xs[0], ys[0], xs[0], ys[0])
    return min(
        point_segment_distance(px, py, xs[k], ys[k], xs[k + 1], ys[k + 1])
        for k in range(len(xs) - 1)
    )


def parse_anchor_lines(lines: Iterable[str], path="<anchors>") -> list[tuple[int, int, int]]:
    """Parse ``x<TAB>y`` lines into ``(x, y, line_number)`` triples."""
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise InputFormatError(path, lineno, f"expected 'x<TAB>y', got {line!r}")
        try:
            x, y = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputFormatError(path, lineno, f"anchor offsets must be integers: {line!r}") from None
        if x < 0 or y < 0:
            raise InputFormatError(path, lineno, f"anchor offsets must be nonnegative: {line!r}")
        out.append((x, y, lineno))
    return out


def read_map(path, space: BitextSpace) -> BitextMap:
    """Read an anchor file and validate it against ``space``."""
    with open(path, encoding="utf-8") as fh:
        records = parse_anchor_lines(fh, path)
    try:
        return load_map([(x, y) for x, y, _ in records], space)
    except (NonMonotonicMap, OutOfBounds) as exc:
        line = records[exc.index][2] if exc.index is not None else None
        raise InputFormatError(path, line, str(exc)) from exc
