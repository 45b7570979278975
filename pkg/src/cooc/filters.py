"""Language-specific filters on the candidate edge set.

The POS filter only prunes edges. The dictionary and cognate filters grant
exclusive candidacy: a matched token pair is consumed as a link and both
tokens drop out of every other edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from . import kernels
from .corpus import TokenizedHalf
from .errors import InputFormatError, MissingTags

Edge = tuple[int, int]


@dataclass(frozen=True)
class PosCompat:
    """Compatible tag pairs; identical tags are compatible unless disabled."""

    pairs: frozenset[tuple[str, str]] = frozenset()
    identity: bool = True

    def compatible(self, tag1, tag2) -> bool:
        return (self.identity and tag1 == tag2) or (tag1, tag2) in self.pairs

    @classmethod
    def read(cls, path) -> "PosCompat":
        return cls(frozenset(_read_pairs(path)))


@dataclass(frozen=True)
class Mrbd:
    entries: frozenset[tuple[str, str]]
    fold_case: bool = False

    def __post_init__(self):
        entries = frozenset(self.entries)
        if self.fold_case:
            entries = frozenset((a.lower(), b.lower()) for a, b in entries)
        object.__setattr__(self, "entries", entries)

    def __call__(self, w1: str, w2: str) -> bool:
        return (w1, w2) in self.entries

    @classmethod
    def read(cls, path, fold_case: bool = False) -> "Mrbd":
        return cls(frozenset(_read_pairs(path)), fold_case)


@dataclass(frozen=True)
class CognateRule:
    lcsr_threshold: float = 0.58
    min_length: int = 4

    def __post_init__(self):
        if not 0.0 <= self.lcsr_threshold <= 1.0:
            raise ValueError(f"LCSR threshold must lie in [0, 1], got {self.lcsr_threshold}")
        if self.min_length < 0:
            raise ValueError("min_length must be nonnegative")

    def __call__(self, w1: str, w2: str) -> bool:
        if len(w1) < self.min_length or len(w2) < self.min_length:
            return False
        return lcsr(w1, w2) >= self.lcsr_threshold


Filter = Union[PosCompat, Mrbd, CognateRule]
_KINDS = {PosCompat: "pos", Mrbd: "mrbd", CognateRule: "cognate"}
DEFAULT_ORDER = ("pos", "mrbd", "cognate")


@dataclass(frozen=True)
class FilterSet:
    filters: tuple[Filter, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(self.filters))
        kinds = [filter_kind(f) for f in self.filters]
        if len(set(kinds)) != len(kinds):
            raise ValueError(f"each filter kind may appear once, got {kinds}")

    def __bool__(self):
        return bool(self.filters)

    def __iter__(self):
        return iter(self.filters)

    @classmethod
    def default(cls, pos=None, mrbd=None, cognate=None) -> "FilterSet":
        """Filters in the default order, skipping the ones not given."""
        given = {"pos": pos, "mrbd": mrbd, "cognate": cognate}
        return cls(tuple(given[k] for k in DEFAULT_ORDER if given[k] is not None))


def filter_kind(f) -> str:
    try:
        return _KINDS[type(f)]
    except KeyError:
        raise TypeError(f"not a filter: {f!r}") from None


def lcsr(w1: str, w2: str) -> float:
    """Longest common subsequence length over the longer word's length."""
    if not w1 or not w2:
        return 0.0
    return kernels.lcs_length(w1, w2) / max(len(w1), len(w2))


def apply_pos(edges: Sequence[Edge], half1: TokenizedHalf, half2: TokenizedHalf, compat: PosCompat) -> list[Edge]:
    if not half1.has_tags or not half2.has_tags:
        raise MissingTags("the POS filter needs tags on both halves")
    tags1 = [t.pos_tag for t in half1.tokens]
    tags2 = [t.pos_tag for t in half2.tokens]
    return [(i, j) for i, j in edges if compat.compatible(tags1[i], tags2[j])]


def apply_exclusive(edges: Sequence[Edge], half1: TokenizedHalf, half2: TokenizedHalf, predicate) -> tuple[set[Edge], list[Edge]]:
    """Consume a maximum matching of the edges whose type pair satisfies ``predicate``.

    Returns ``(consumed_links, residual_edges)`` where the residual keeps
    only edges touching no consumed token.
    """
    types1 = half1.type_ids
    types2 = half2.type_ids
    verdicts: dict[tuple[str, str], bool] = {}
    hits = []
    for i, j in edges:
        key = (types1[i], types2[j])
        ok = verdicts.get(key)
        if ok is None:
            ok = verdicts[key] = bool(predicate(*key))
        if ok:
            hits.append((i, j))
    if not hits:
        return set(), list(edges)

    hits = sorted(set(hits))
    left = sorted({i for i, _ in hits})
    right = sorted({j for _, j in hits})
    lpos = {t: k for k, t in enumerate(left)}
    rpos = {t: k for k, t in enumerate(right)}
    indptr = [0] * (len(left) + 1)
    for i, _ in hits:
        indptr[lpos[i] + 1] += 1
    for k in range(len(left)):
        indptr[k + 1] += indptr[k]
    match = kernels.hopcroft_karp(len(left), len(right), indptr, [rpos[j] for _, j in hits])
    consumed = {(left[a], right[b]) for a, b in enumerate(match.tolist()) if b >= 0}
    used1 = {i for i, _ in consumed}
    used2 = {j for _, j in consumed}
    residual = [(i, j) for i, j in edges if i not in used1 and j not in used2]
    return consumed, residual


def apply_filter_set(edges: Sequence[Edge], halves: tuple[TokenizedHalf, TokenizedHalf], filters) -> tuple[set[Edge], list[Edge]]:
    """Run filters in order; consumed links accumulate across exclusive filters."""
    half1, half2 = halves
    consumed: set[Edge] = set()
    residual = list(edges)
    for f in filters or ():
        if isinstance(f, PosCompat):
            residual = apply_pos(residual, half1, half2, f)
        else:
            filter_kind(f)
            taken, residual = apply_exclusive(residual, half1, half2, f)
            consumed |= taken
    return consumed, residual


def _read_pairs(path) -> list[tuple[str, str]]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0] or not fields[1]:
                raise InputFormatError(path, lineno, "expected 'a<TAB>b'")
            pairs.append((fields[0], fields[1]))
    return pairs
