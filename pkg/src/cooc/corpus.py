"""Text halves, tokens and segment alignments.

Offsets are Unicode code points into the raw text. Segments are lines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import (
    EmptyBlockSide,
    InputFormatError,
    LengthMismatch,
    NonMonotonicBlocks,
    NonMonotonicSpans,
    OverlappingBlocks,
    OverlappingSpans,
    SegmentOutOfRange,
    CoocError,
)
from .geometry import Units

_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    type_id: str
    span: tuple[int, int]
    token_index: int
    segment_index: int
    pos_tag: str | None = None
    surface: str | None = None

    @property
    def text(self) -> str:
        return self.surface if self.surface is not None else self.type_id

    def coordinate(self, units: Units | str = Units.CHARACTERS) -> float:
        """Position of the token on its axis: the midpoint of its extent."""
        if Units(units) is Units.TOKENS:
            return self.token_index + 0.5
        return (self.span[0] + self.span[1]) / 2


@dataclass(frozen=True)
class TokenizedHalf:
    tokens: tuple[Token, ...]
    segment_count: int
    length: int  # code points

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, k):
        return self.tokens[k]

    def extent(self, units: Units | str = Units.CHARACTERS) -> int:
        """Length of the half in axis units."""
        if Units(units) is Units.TOKENS:
            return len(self.tokens)
        return self.length

    def coordinates(self, units: Units | str = Units.CHARACTERS) -> list[float]:
        return [t.coordinate(units) for t in self.tokens]

    @property
    def type_ids(self) -> list[str]:
        return [t.type_id for t in self.tokens]

    @property
    def has_tags(self) -> bool:
        return all(t.pos_tag is not None for t in self.tokens)

    def segment_tokens(self) -> list[list[int]]:
        """Token indices grouped by segment."""
        groups: list[list[int]] = [[] for _ in range(self.segment_count)]
        for t in self.tokens:
            groups[t.segment_index].append(t.token_index)
        return groups

    def to_records(self) -> list[tuple[str, int, int, int]]:
        return [(t.text, t.span[0], t.span[1], t.segment_index) for t in self.tokens]


@dataclass(frozen=True)
class SegmentAlignment:
    blocks: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __len__(self):
        return len(self.blocks)

    def block_index(self, side: int, segment_count: int) -> list[int]:
        """Map each segment of ``side`` (1 or 2) to its block, or -1 if unaligned."""
        out = [-1] * segment_count
        for b, sides in enumerate(self.blocks):
            for seg in sides[side - 1]:
                out[seg] = b
        return out


@dataclass(frozen=True)
class SegmentPairStats:
    e_u: int
    f_v: int

    def __post_init__(self):
        if self.e_u < 0 or self.f_v < 0:
            raise ValueError("occurrence counts must be nonnegative")


def _segment_count(text: str) -> int:
    if not text:
        return 0
    return text.count("\n") + (0 if text.endswith("\n") else 1)


def tokenize(raw_text: str, fold_case: bool = False) -> TokenizedHalf:
    """Split text into whitespace-delimited tokens; lines are segments."""
    tokens = []
    segment = 0
    scanned = 0
    for k, m in enumerate(_TOKEN_RE.finditer(raw_text)):
        start, end = m.span()
        segment += raw_text.count("\n", scanned, start)
        scanned = start
        surface = m.group()
        tokens.append(
            Token(
                type_id=surface.lower() if fold_case else surface,
                span=(start, end),
                token_index=k,
                segment_index=segment,
                surface=surface,
            )
        )
    return TokenizedHalf(tuple(tokens), _segment_count(raw_text), len(raw_text))


def load_pretokenized(
    records: Iterable[Sequence],
    fold_case: bool = False,
    length: int | None = None,
    segment_count: int | None = None,
) -> TokenizedHalf:
    """Build a half from ``(token, start, end[, segment])`` records.

    A missing segment continues the previous token's segment. ``length``
    defaults to the end of the last span and ``segment_count`` to one past
    the last segment index.
    """
    tokens: list[Token] = []
    for idx, rec in enumerate(records):
        surface, start, end = rec[0], int(rec[1]), int(rec[2])
        seg = rec[3] if len(rec) > 3 else None
        if seg is None:
            seg = tokens[-1].segment_index if tokens else 0
        seg = int(seg)
        if start < 0 or end <= start:
            raise NonMonotonicSpans(f"span ({start}, {end}) is empty or negative", index=idx)
        if seg < 0:
            raise NonMonotonicSpans(f"negative segment index {seg}", index=idx)
        if tokens:
            prev = tokens[-1]
            if start < prev.span[0]:
                raise NonMonotonicSpans(
                    f"span ({start}, {end}) starts before previous span {prev.span}", index=idx
                )
            if start < prev.span[1]:
                raise OverlappingSpans(f"span ({start}, {end}) overlaps previous span {prev.span}", index=idx)
            if seg < prev.segment_index:
                raise NonMonotonicSpans(
                    f"segment {seg} precedes previous token's segment {prev.segment_index}", index=idx
                )
        tokens.append(
            Token(
                type_id=surface.lower() if fold_case else surface,
                span=(start, end),
                token_index=len(tokens),
                segment_index=seg,
                surface=surface,
            )
        )
    last_end = tokens[-1].span[1] if tokens else 0
    if length is None:
        length = last_end
    elif length < last_end:
        raise LengthMismatch(f"length {length} shorter than last span end {last_end}")
    needed = tokens[-1].segment_index + 1 if tokens else 0
    if segment_count is None:
        segment_count = needed
    elif segment_count < needed:
        raise LengthMismatch(f"segment_count {segment_count} too small for segment {needed - 1}")
    return TokenizedHalf(tuple(tokens), segment_count, length)


def attach_pos(half: TokenizedHalf, tags: Sequence[str]) -> TokenizedHalf:
    if len(tags) != len(half.tokens):
        raise LengthMismatch(f"{len(tags)} tags for {len(half.tokens)} tokens")
    tokens = tuple(replace(t, pos_tag=tag) for t, tag in zip(half.tokens, tags))
    return replace(half, tokens=tokens)


def load_alignment(
    records: Iterable[tuple[Iterable[int], Iterable[int]]],
    halves: tuple[TokenizedHalf, TokenizedHalf],
) -> SegmentAlignment:
    """Validate alignment blocks against the two halves.

    Each block side must be a nonempty contiguous run of segments; blocks
    may not share segments and must advance on both sides.
    """
    blocks = []
    used: tuple[set[int], set[int]] = (set(), set())
    for idx, (side1, side2) in enumerate(records):
        sides = (frozenset(int(s) for s in side1), frozenset(int(s) for s in side2))
        for k, segs in enumerate(sides):
            if not segs:
                raise EmptyBlockSide(f"block {idx} has an empty side {k + 1}", index=idx)
            count = halves[k].segment_count
            bad = [s for s in segs if not 0 <= s < count]
            if bad:
                raise SegmentOutOfRange(
                    f"segment {min(bad)} out of range for side {k + 1} ({count} segments)", index=idx
                )
            if max(segs) - min(segs) + 1 != len(segs):
                raise NonMonotonicBlocks(f"block {idx} side {k + 1} is not a contiguous run", index=idx)
            if used[k] & segs:
                raise OverlappingBlocks(
                    f"segment {min(used[k] & segs)} of side {k + 1} is in more than one block", index=idx
                )
        if blocks:
            prev = blocks[-1]
            for k in range(2):
                if min(sides[k]) <= max(prev[k]):
                    raise NonMonotonicBlocks(
                        f"block {idx} does not follow block {idx - 1} on side {k + 1}", index=idx
                    )
        used[0].update(sides[0])
        used[1].update(sides[1])
        blocks.append(sides)
    return SegmentAlignment(tuple(blocks))


# file formats

def read_text(path, fold_case: bool = False) -> TokenizedHalf:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise InputFormatError(path, line, f"invalid UTF-8 at byte {exc.start}") from None
    return tokenize(text, fold_case)


def read_pretokenized(path, fold_case: bool = False) -> TokenizedHalf:
    """Read ``token<TAB>start<TAB>end[<TAB>segment]`` lines."""
    records = []
    lines = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) not in (3, 4):
                raise InputFormatError(path, lineno, "expected 3 or 4 tab-separated fields")
            try:
                rec = [fields[0], int(fields[1]), int(fields[2])]
                if len(fields) == 4:
                    rec.append(int(fields[3]))
            except ValueError:
                raise InputFormatError(path, lineno, "offsets and segment must be integers") from None
            records.append(rec)
            lines.append(lineno)
    try:
        return load_pretokenized(records, fold_case)
    except CoocError as exc:
        line = lines[exc.index] if exc.index is not None else None
        raise InputFormatError(path, line, str(exc)) from exc


def write_pretokenized(half: TokenizedHalf, fh) -> None:
    for surface, start, end, seg in half.to_records():
        fh.write(f"{surface}\t{start}\t{end}\t{seg}\n")


def _parse_side(field: str) -> list[int]:
    field = field.strip()
    if field == "-" or not field:
        return []
    return [int(s) for s in field.split(",")]


def read_alignment(path, halves: tuple[TokenizedHalf, TokenizedHalf]) -> SegmentAlignment:
    """Read ``i,j,...<TAB>k,l,...`` block lines."""
    records = []
    lines = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise InputFormatError(path, lineno, "expected two tab-separated segment lists")
            try:
                records.append((_parse_side(fields[0]), _parse_side(fields[1])))
            except ValueError:
                raise InputFormatError(path, lineno, "segment indices must be integers") from None
            lines.append(lineno)
    try:
        return load_alignment(records, halves)
    except CoocError as exc:
        line = lines[exc.index] if exc.index is not None else None
        raise InputFormatError(path, line, str(exc)) from exc


def read_pos(path, half: TokenizedHalf) -> TokenizedHalf:
    """Attach tags from a file with one whitespace-separated line per segment."""
    per_segment = half.segment_tokens()
    tags: list[str] = []
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != half.segment_count:
        raise InputFormatError(
            path, min(len(lines), half.segment_count) + 1,
            f"{len(lines)} tag lines for {half.segment_count} segments",
        )
    for lineno, (line, seg_tokens) in enumerate(zip(lines, per_segment), 1):
        row = line.split()
        if len(row) != len(seg_tokens):
            raise InputFormatError(path, lineno, f"{len(row)} tags for {len(seg_tokens)} tokens")
        tags.extend(row)
    return attach_pos(half, tags)
