"""Deterministic synthetic bitexts for benchmarks and scale tests."""
from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass
class SyntheticBitext:
    text1: str
    text2: str
    anchors: list[tuple[int, int]]  # line starts, in characters
    blocks: list[tuple[list[int], list[int]]]  # one-to-one line alignment

    def write(self, directory) -> dict:
        """Write the bitext files into ``directory``; returns their paths."""
        from pathlib import Path

        d = Path(directory)
        paths = {
            "text1": d / "text1.txt",
            "text2": d / "text2.txt",
            "map": d / "map.tsv",
            "alignment": d / "alignment.tsv",
        }
        paths["text1"].write_text(self.text1, encoding="utf-8")
        paths["text2"].write_text(self.text2, encoding="utf-8")
        paths["map"].write_text("".join(f"{x}\t{y}\n" for x, y in self.anchors), encoding="utf-8")
        paths["alignment"].write_text(
            "".join(f"{','.join(map(str, a))}\t{','.join(map(str, b))}\n" for a, b in self.blocks),
            encoding="utf-8",
        )
        return paths


def _vocabulary(rng, size, prefix):
    letters = "abcdefghijklmnopqrstuvwxyz"
    words = set()
    while len(words) < size:
        words.add(prefix + "".join(rng.choice(letters) for _ in range(rng.randint(1, 8))))
    return sorted(words)


def make_bitext(n_tokens: int = 10_000, seed: int = 0, vocab: int = 2_000, line_tokens=(5, 25)) -> SyntheticBitext:
    """Two halves of exactly ``n_tokens`` tokens each, line-aligned.

    Word frequencies follow a Zipf-like law; the second half translates
    each word through a fixed mapping with some noise and local reordering.
    """
    rng = random.Random(seed)
    src = _vocabulary(rng, vocab, "")
    tgt = _vocabulary(rng, vocab, "")
    rng.shuffle(tgt)
    weights = [1.0 / (k + 1) for k in range(vocab)]

    lines1: list[list[str]] = []
    remaining = n_tokens
    while remaining > 0:
        k = min(remaining, rng.randint(*line_tokens))
        lines1.append(rng.choices(src, weights, k=k))
        remaining -= k
    index = {w: k for k, w in enumerate(src)}

    lines2 = []
    for line in lines1:
        out = [tgt[index[w]] if rng.random() < 0.8 else rng.choice(tgt) for w in line]
        for _ in range(len(out) // 5):
            a = rng.randrange(len(out))
            b = min(len(out) - 1, a + 1)
            out[a], out[b] = out[b], out[a]
        lines2.append(out)

    anchors = []
    x = y = 0
    for l1, l2 in zip(lines1, lines2):
        anchors.append((x, y))
        x += len(" ".join(l1)) + 1
        y += len(" ".join(l2)) + 1
    text1 = "".join(" ".join(l) + "\n" for l in lines1)
    text2 = "".join(" ".join(l) + "\n" for l in lines2)
    blocks = [([k], [k]) for k in range(len(lines1))]
    return SyntheticBitext(text1, text2, anchors, blocks)
