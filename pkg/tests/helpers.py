"""Random instance generators shared by the test modules."""
import random

from cooc import BitextSpace, CoocGraph, load_map, tokenize
from cooc.corpus import load_alignment


def complete_graph(n_left, n_right):
    return CoocGraph(
        tuple(range(n_left)),
        tuple(range(10, 10 + n_right)),
        frozenset((a, b) for a in range(n_left) for b in range(n_right)),
    )


def random_graph(rng: random.Random, max_side=8):
    nl = rng.randint(0, max_side)
    nr = rng.randint(0, max_side)
    density = rng.random()
    edges = {(a, b) for a in range(nl) for b in range(nr) if rng.random() < density}
    return CoocGraph(tuple(range(nl)), tuple(range(nr)), frozenset(edges))


def without_isolated(graph: CoocGraph) -> CoocGraph:
    return CoocGraph.from_token_edges((graph.left[a], graph.right[b]) for a, b in graph.edges)


def random_lines(rng, n_lines, vocab, max_tokens, prefix):
    lines = []
    for _ in range(n_lines):
        k = rng.randint(0, max_tokens)
        lines.append(" ".join(f"{prefix}{rng.randrange(vocab)}" for _ in range(k)))
    return "\n".join(lines) + "\n"


def random_boundary_bitext(rng, max_blocks=20, max_seg_tokens=30, max_vocab=15):
    """Two random halves plus a valid monotone alignment over them.

    Segments between blocks may stay unaligned.
    """
    n_blocks = rng.randint(1, max_blocks)
    vocab = rng.randint(1, max_vocab)
    records = []
    seg1 = seg2 = 0
    for _ in range(n_blocks):
        seg1 += rng.choice([0, 0, 0, 1])
        seg2 += rng.choice([0, 0, 0, 1])
        w1, w2 = rng.randint(1, 3), rng.randint(1, 3)
        records.append((list(range(seg1, seg1 + w1)), list(range(seg2, seg2 + w2))))
        seg1 += w1
        seg2 += w2
    seg1 += rng.choice([0, 1])
    seg2 += rng.choice([0, 1])
    half1 = tokenize(random_lines(rng, seg1, vocab, max_seg_tokens, "u"))
    half2 = tokenize(random_lines(rng, seg2, vocab, max_seg_tokens, "v"))
    return half1, half2, load_alignment(records, (half1, half2))


def random_monotone_map(rng, width, height, n_anchors):
    xs = sorted(rng.randint(0, width) for _ in range(n_anchors))
    ys = sorted(rng.randint(0, height) for _ in range(n_anchors))
    return load_map(list(zip(xs, ys)), BitextSpace(width, height))


def random_distance_bitext(rng, n_lines=None, vocab=None, max_tokens=8):
    n_lines = n_lines or rng.randint(1, 10)
    vocab = vocab or rng.randint(1, 8)
    half1 = tokenize(random_lines(rng, n_lines, vocab, max_tokens, "a"))
    half2 = tokenize(random_lines(rng, n_lines, vocab, max_tokens, "b"))
    bmap = random_monotone_map(rng, half1.length, half2.length, rng.randint(0, 6))
    return half1, half2, bmap


def random_half(rng, n_tokens, vocab, prefix, per_line=10):
    """Exactly ``n_tokens`` tokens, broken into lines of at most ``per_line``."""
    words = [f"{prefix}{rng.randrange(vocab)}" for _ in range(n_tokens)]
    lines = [" ".join(words[k : k + per_line]) for k in range(0, n_tokens, per_line)]
    return tokenize("\n".join(lines) + ("\n" if lines else ""))
