import math
import random
from collections import Counter
from datetime import date

import pytest

from multiwiki.align import (
    PassageCandidate,
    align_passages,
    grow_passages,
    seed_alignment,
    sentence_similarity,
)
from multiwiki.model import (
    SentenceRange,
    SentenceRecord,
    SimilarityConfig,
    TimeExpression,
    default_config,
)

CONFIG = default_config()


def sent(index, tokens, entities=(), times=()):
    return SentenceRecord(index, f"s{index}.", 3, Counter(tokens),
                          entities=frozenset(entities), times=tuple(times))


def oracle_range_score(s1, s2, r1, r2, config):
    """Independent recomputation of a pooled passage score."""
    tokens1, tokens2 = Counter(), Counter()
    ents1, ents2, days1, days2 = set(), set(), set(), set()
    for i in range(r1[0], r1[1] + 1):
        tokens1 += Counter(s1[i].english_tokens)
        ents1 |= set(s1[i].entities)
        for t in s1[i].times:
            days1 |= set(range(t.start_day.toordinal(), t.end_day.toordinal() + 1))
    for j in range(r2[0], r2[1] + 1):
        tokens2 += Counter(s2[j].english_tokens)
        ents2 |= set(s2[j].entities)
        for t in s2[j].times:
            days2 |= set(range(t.start_day.toordinal(), t.end_day.toordinal() + 1))

    dot = sum(tokens1[t] * tokens2[t] for t in tokens1)
    if dot:
        cosine = dot / (math.sqrt(sum(c * c for c in tokens1.values()))
                        * math.sqrt(sum(c * c for c in tokens2.values())))
    else:
        cosine = 0.0
    weights = config.sentence_feature_weights
    parts = [(weights["cosine"], cosine)]
    if ents1 or ents2:
        parts.append((weights["entities"], len(ents1 & ents2) / len(ents1 | ents2)))
    if days1 or days2:
        parts.append((weights["time"], len(days1 & days2) / len(days1 | days2)))
    total = sum(w for w, _ in parts)
    return sum(w * v for w, v in parts) / total if total else 0.0


class TestSentenceSimilarity:
    def test_identical_records(self):
        a = sent(0, {"star": 1, "africa": 1}, entities={"Africa"},
                 times=(TimeExpression(date(1957, 1, 1), date(1957, 12, 31), "1957"),))
        score = sentence_similarity(a, a, CONFIG)
        assert abs(score.combined - 1.0) < 1e-12
        assert score.cosine == 1.0 and score.entity_sim == 1.0 and score.time_sim == 1.0

    def test_fully_disjoint(self):
        a = sent(0, {"star": 1}, entities={"A"},
                 times=(TimeExpression(date(1957, 1, 1), date(1957, 1, 1), "x"),))
        b = sent(0, {"pilot": 1}, entities={"B"},
                 times=(TimeExpression(date(1960, 1, 1), date(1960, 1, 1), "y"),))
        assert sentence_similarity(a, b, CONFIG).combined == 0.0

    def test_renormalized_two_components(self):
        # cosine 3/5, entity jaccard 3/10, no time on either side:
        # combined = (1/2)(0.6) + (1/2)(0.3) = 0.45
        a = sent(0, {"x": 3, "y": 4}, entities={"e1", "e2", "e3", "e4", "e5", "e6"})
        b = sent(0, {"x": 1}, entities={"e4", "e5", "e6", "f1", "f2", "f3", "f4"})
        score = sentence_similarity(a, b, CONFIG)
        assert abs(score.cosine - 0.6) < 1e-12
        assert abs(score.entity_sim - 0.3) < 1e-12
        assert not score.time_defined
        assert abs(score.combined - 0.45) < 1e-12

    def test_matches_singleton_oracle(self):
        rng = random.Random(31)
        vocab = list("abcdefgh")
        for _ in range(300):
            s1 = sent(0, {t: rng.randint(1, 3) for t in rng.sample(vocab, rng.randint(0, 4))},
                      entities=rng.sample(vocab, rng.randint(0, 3)))
            s2 = sent(0, {t: rng.randint(1, 3) for t in rng.sample(vocab, rng.randint(0, 4))},
                      entities=rng.sample(vocab, rng.randint(0, 3)))
            got = sentence_similarity(s1, s2, CONFIG).combined
            want = oracle_range_score([s1], [s2], (0, 0), (0, 0), CONFIG)
            assert abs(got - want) <= 1e-12


class TestSeedAlignment:
    def test_empty_articles(self):
        assert seed_alignment([], [], CONFIG) == []

    def test_single_identical_sentence(self):
        s1 = [sent(0, {"codex": 1, "gold": 1})]
        s2 = [sent(0, {"codex": 1, "gold": 1})]
        seeds = seed_alignment(s1, s2, CONFIG)
        assert len(seeds) == 1
        assert seeds[0].range1 == SentenceRange(0, 0)
        assert seeds[0].range2 == SentenceRange(0, 0)
        assert abs(seeds[0].score - 1.0) < 1e-12

    def test_exactly_pairs_above_threshold(self):
        s1 = [sent(0, {"a": 1}), sent(1, {"b": 1}), sent(2, {"c": 1})]
        s2 = [sent(0, {"a": 1}), sent(1, {"z": 1}), sent(2, {"c": 1})]
        seeds = seed_alignment(s1, s2, CONFIG)
        expected = set()
        for i in range(3):
            for j in range(3):
                score = oracle_range_score(s1, s2, (i, i), (j, j), CONFIG)
                if score >= CONFIG.sentence_threshold:
                    expected.add((i, j))
        assert {(c.range1.start, c.range2.start) for c in seeds} == expected == {(0, 0), (2, 2)}

    def test_ordered_by_indices(self):
        s1 = [sent(0, {"a": 1}), sent(1, {"a": 1})]
        s2 = [sent(0, {"a": 1}), sent(1, {"a": 1})]
        seeds = seed_alignment(s1, s2, CONFIG)
        keys = [(c.range1.start, c.range2.start) for c in seeds]
        assert keys == sorted(keys)


class TestGrowPassages:
    def test_joint_match_expands(self):
        # sentences 0 and 1 of A1 jointly cover A2's sentence 0 better than alone
        s1 = [sent(0, {"codex": 1}), sent(1, {"gold": 1})]
        s2 = [sent(0, {"codex": 1, "gold": 1})]
        pairs = align_passages(s1, s2, CONFIG)
        assert len(pairs) == 1
        pair = pairs[0]
        assert (pair.range1.start, pair.range1.end) == (0, 1)
        assert (pair.range2.start, pair.range2.end) == (0, 0)
        best = max(oracle_range_score(s1, s2, (a, b), (0, 0), CONFIG)
                   for a in range(2) for b in range(a, 2))
        assert abs(pair.score - best) <= 1e-9

    def test_gap_beyond_limit_never_merges(self):
        shared = {"codex": 1, "gold": 1}
        s1 = [sent(0, shared), sent(1, {"x1": 1}), sent(2, {"x2": 1}),
              sent(3, {"x3": 1}), sent(4, shared)]
        s2 = [sent(0, shared)]
        config = SimilarityConfig(**{**CONFIG.to_json(), "merge_gap": 2})
        pairs = align_passages(s1, s2, config)
        starts = {(p.range1.start, p.range1.end) for p in pairs}
        assert (0, 4) not in starts
        assert len(pairs) == 2

    def test_close_seeds_merge(self):
        s1 = [sent(0, {"codex": 1}), sent(1, {"filler": 1}), sent(2, {"gold": 1})]
        s2 = [sent(0, {"codex": 1, "gold": 1, "filler": 1})]
        pairs = align_passages(s1, s2, CONFIG)
        assert any((p.range1.start, p.range1.end) == (0, 2) for p in pairs)

    def test_no_seeds(self):
        s1 = [sent(0, {"a": 1})]
        s2 = [sent(0, {"b": 1})]
        assert align_passages(s1, s2, CONFIG) == []

    def test_crossing_pairs_allowed(self):
        s1 = [sent(0, {"alpha": 1}), sent(1, {"beta": 1})]
        s2 = [sent(0, {"beta": 1}), sent(1, {"alpha": 1})]
        pairs = align_passages(s1, s2, CONFIG)
        keys = {((p.range1.start, p.range1.end), (p.range2.start, p.range2.end))
                for p in pairs}
        assert ((0, 0), (1, 1)) in keys and ((1, 1), (0, 0)) in keys


def random_micro_article(rng, max_sentences=8):
    vocab = ["star", "africa", "codex", "gold", "film", "war", "city",
             "church", "king", "abbey", "pilot", "berlin"]
    entities = ["Berlin", "Africa", "Codex", "Abbey"]
    sentences = []
    for i in range(rng.randint(0, max_sentences)):
        tokens = {t: rng.randint(1, 3) for t in rng.sample(vocab, rng.randint(1, 5))}
        times = ()
        if rng.random() < 0.3:
            year = rng.randint(1950, 1960)
            times = (TimeExpression(date(year, 1, 1), date(year, 12, 31), str(year)),)
        sentences.append(sent(i, tokens,
                              entities=rng.sample(entities, rng.randint(0, 2)),
                              times=times))
    return sentences


class TestAlignmentProperties:
    def test_oracle_equivalence_and_local_optimality(self):
        rng = random.Random(77)
        for _ in range(30):
            s1 = random_micro_article(rng)
            s2 = random_micro_article(rng)
            stats = {}
            pairs = align_passages(s1, s2, CONFIG, stats=stats)
            if s1 and s2:
                assert stats["iterations"] <= len(s1) * len(s2) + stats.get("bound", 0)
            for pair in pairs:
                r1 = (pair.range1.start, pair.range1.end)
                r2 = (pair.range2.start, pair.range2.end)
                want = oracle_range_score(s1, s2, r1, r2, CONFIG)
                assert abs(pair.score - want) <= 1e-9
                assert pair.score >= CONFIG.sentence_threshold
                # local optimality: no single-sentence extension improves
                for ext1, ext2 in [
                    ((r1[0] - 1, r1[1]), r2), ((r1[0], r1[1] + 1), r2),
                    (r1, (r2[0] - 1, r2[1])), (r1, (r2[0], r2[1] + 1)),
                ]:
                    if ext1[0] < 0 or ext1[1] > len(s1) - 1:
                        continue
                    if ext2[0] < 0 or ext2[1] > len(s2) - 1:
                        continue
                    extended = oracle_range_score(s1, s2, ext1, ext2, CONFIG)
                    assert extended <= pair.score + 1e-9

    def test_determinism(self):
        rng1, rng2 = random.Random(13), random.Random(13)
        s1a, s2a = random_micro_article(rng1), random_micro_article(rng1)
        s1b, s2b = random_micro_article(rng2), random_micro_article(rng2)
        assert align_passages(s1a, s2a, CONFIG) == align_passages(s1b, s2b, CONFIG)

    def test_ranges_within_bounds(self):
        rng = random.Random(3)
        for _ in range(50):
            s1 = random_micro_article(rng)
            s2 = random_micro_article(rng)
            for pair in align_passages(s1, s2, CONFIG):
                assert 0 <= pair.range1.start <= pair.range1.end < len(s1)
                assert 0 <= pair.range2.start <= pair.range2.end < len(s2)
