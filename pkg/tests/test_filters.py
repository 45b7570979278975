import random
from collections import Counter
from itertools import combinations

import pytest

from cooc import (
    BoundaryModel,
    CognateRule,
    FilterSet,
    Mrbd,
    PosCompat,
    apply_exclusive,
    apply_filter_set,
    apply_pos,
    attach_pos,
    candidate_edges,
    count_all,
    lcsr,
    load_alignment,
    tokenize,
)
from cooc.errors import MissingTags
from cooc.oracle import brute_count_all


def tagged(text, tags):
    return attach_pos(tokenize(text), tags)


def brute_lcs(a, b):
    """Longest subsequence of the shorter word that is also a subsequence of the other."""
    short, long_ = sorted((a, b), key=len)

    def is_subseq(s, t):
        it = iter(t)
        return all(c in it for c in s)

    for k in range(len(short), 0, -1):
        for idx in combinations(range(len(short)), k):
            if is_subseq("".join(short[i] for i in idx), long_):
                return k
    return 0


class TestPos:
    h1 = tagged("a b", ["N", "N"])
    h2 = tagged("x y", ["N", "V"])

    def test_same_tag_kept(self):
        assert apply_pos([(0, 0)], self.h1, self.h2, PosCompat()) == [(0, 0)]

    def test_different_tag_removed(self):
        assert apply_pos([(0, 1)], self.h1, self.h2, PosCompat()) == []

    def test_augmented_compat(self):
        compat = PosCompat(frozenset({("N", "V")}))
        assert apply_pos([(0, 1)], self.h1, self.h2, compat) == [(0, 1)]

    def test_missing_tags(self):
        with pytest.raises(MissingTags):
            apply_pos([(0, 0)], tokenize("a"), self.h2, PosCompat())


class TestExclusive:
    def test_dictionary_link_consumes_token(self):
        h1, h2 = tokenize("a"), tokenize("b c")
        consumed, residual = apply_exclusive([(0, 0), (0, 1)], h1, h2, Mrbd(frozenset({("a", "b")})))
        assert consumed == {(0, 0)}
        assert residual == []

    def test_no_predicate_edges(self):
        h1, h2 = tokenize("a"), tokenize("b c")
        edges = [(0, 0), (0, 1)]
        assert apply_exclusive(edges, h1, h2, Mrbd(frozenset({("q", "r")}))) == (set(), edges)

    def test_conflict_resolved_by_matching(self, backend):
        h1, h2 = tokenize("a a"), tokenize("b c")
        edges = [(0, 0), (0, 1), (1, 0), (1, 1)]
        consumed, residual = apply_exclusive(edges, h1, h2, Mrbd(frozenset({("a", "b")})))
        assert consumed == {(0, 0)}
        assert residual == [(1, 1)]

    def test_mrbd_case_folding(self):
        mrbd = Mrbd(frozenset({("Dog", "Chien")}), fold_case=True)
        assert mrbd("dog", "chien")
        assert not Mrbd(frozenset({("Dog", "Chien")}))("dog", "chien")


class TestLcsr:
    def test_government(self, backend):
        assert brute_lcs("government", "gouvernement") == 10
        assert lcsr("government", "gouvernement") == pytest.approx(10 / 12)

    def test_identity_and_disjoint(self, backend):
        assert lcsr("abc", "abc") == 1.0
        assert lcsr("abc", "xyz") == 0.0
        assert lcsr("", "abc") == 0.0

    def test_random_against_brute(self, backend):
        rng = random.Random(8)
        for _ in range(200):
            a = "".join(rng.choice("abcé") for _ in range(rng.randint(0, 7)))
            b = "".join(rng.choice("abcé") for _ in range(rng.randint(0, 7)))
            expected = brute_lcs(a, b) / max(len(a), len(b)) if a and b else 0.0
            assert lcsr(a, b) == pytest.approx(expected)

    def test_cognate_rule(self):
        rule = CognateRule()
        assert (rule.lcsr_threshold, rule.min_length) == (0.58, 4)
        assert rule("government", "gouvernement")
        assert not rule("abc", "abc")  # too short
        with pytest.raises(ValueError):
            CognateRule(1.5)


class TestFilterSet:
    def test_empty(self):
        edges = [(0, 0)]
        assert apply_filter_set(edges, (tokenize("a"), tokenize("b")), FilterSet()) == (set(), edges)

    def test_duplicate_kind_rejected(self):
        with pytest.raises(ValueError):
            FilterSet((PosCompat(), PosCompat()))

    def test_default_order(self):
        mrbd, pos, cog = Mrbd(frozenset()), PosCompat(), CognateRule()
        assert FilterSet.default(cognate=cog, mrbd=mrbd, pos=pos).filters == (pos, mrbd, cog)
        assert FilterSet.default(cognate=cog).filters == (cog,)

    def test_order_changes_residual(self):
        h1 = tagged("a", ["N"])
        h2 = tagged("b c", ["V", "N"])
        edges = [(0, 0), (0, 1)]
        mrbd = Mrbd(frozenset({("a", "b")}))
        pos_first = apply_filter_set(edges, (h1, h2), FilterSet((PosCompat(), mrbd)))
        mrbd_first = apply_filter_set(edges, (h1, h2), FilterSet((mrbd, PosCompat())))
        assert pos_first == (set(), [(0, 1)])
        assert mrbd_first == ({(0, 0)}, [])

    def test_all_three_hand_traced(self):
        h1 = tagged("dog government runs", ["N", "N", "V"])
        h2 = tagged("chien gouvernement court", ["N", "N", "V"])
        model = BoundaryModel(load_alignment([([0], [0])], (h1, h2)))
        filters = FilterSet.default(pos=PosCompat(), mrbd=Mrbd(frozenset({("dog", "chien")})), cognate=CognateRule())
        edges = candidate_edges(model, h1, h2)
        consumed, residual = apply_filter_set(edges, (h1, h2), filters)
        assert consumed == {(0, 0), (1, 1)}
        assert residual == [(2, 2)]
        expected = {("dog", "chien"): 1, ("government", "gouvernement"): 1, ("runs", "court"): 1}
        for assumption in ("naive", "at_most_one", "at_least_one"):
            table = count_all(model, h1, h2, assumption, filters)
            assert table.entries == expected
            assert brute_count_all(model, h1, h2, assumption, filters) == table


def test_filter_laws_on_random_instances(backend):
    rng = random.Random(21)
    vocab1 = ["maison", "chat", "rouge", "nation", "table"]
    vocab2 = ["maisons", "cat", "red", "nations", "tables"]
    tags = ["N", "V", "A"]
    mrbd = Mrbd(frozenset({("chat", "cat"), ("rouge", "red")}))
    cognate = CognateRule(0.6, 4)
    for _ in range(100):
        n = rng.randint(1, 4)
        text1 = "\n".join(" ".join(rng.choice(vocab1) for _ in range(rng.randint(0, 5))) for _ in range(n))
        text2 = "\n".join(" ".join(rng.choice(vocab2) for _ in range(rng.randint(0, 5))) for _ in range(n))
        h1, h2 = tokenize(text1), tokenize(text2)
        h1 = attach_pos(h1, [rng.choice(tags) for _ in h1])
        h2 = attach_pos(h2, [rng.choice(tags) for _ in h2])
        k = min(h1.segment_count, h2.segment_count)
        model = BoundaryModel(load_alignment([([s], [s]) for s in range(k)], (h1, h2)))
        edges = candidate_edges(model, h1, h2)
        filters = [PosCompat(), mrbd, cognate]
        rng.shuffle(filters)
        filters = FilterSet(tuple(filters))
        consumed, residual = apply_filter_set(edges, (h1, h2), filters)
        assert set(residual) <= set(edges)
        assert consumed <= set(edges)
        used1 = {i for i, _ in consumed}
        used2 = {j for _, j in consumed}
        assert not any(i in used1 or j in used2 for i, j in residual)
        for i, j in consumed:
            assert mrbd(h1[i].type_id, h2[j].type_id) or cognate(h1[i].type_id, h2[j].type_id)
        table = count_all(model, h1, h2, "at_most_one", filters)
        per_pair = Counter((h1[i].type_id, h2[j].type_id) for i, j in consumed)
        for key, k in per_pair.items():
            assert table[key] >= k
