"""Cross-article passage alignment: threshold seeding, then bottom-up growth.

Passages are rescored on pooled annotations (summed token counts, entity and
day-set unions). Expansion applies only strict score improvements, merging
never drops below the weaker constituent or the seed threshold, so the loop
terminates and every emitted pair is locally optimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .model import PassagePair, SentenceRange, SentenceRecord, SimilarityConfig

EPSILON = 1e-9


@dataclass(frozen=True)
class SentencePairScore:
    i: int
    j: int
    cosine: float
    entity_sim: float
    entity_defined: bool
    time_sim: float
    time_defined: bool
    combined: float


@dataclass(frozen=True)
class PassageCandidate:
    range1: SentenceRange
    range2: SentenceRange
    score: float

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.range1.start, self.range2.start, self.range1.end, self.range2.end)


@dataclass(frozen=True)
class _Evidence:
    tokens: Mapping[str, int]
    entities: frozenset[str]
    days: frozenset[int]


def _pool(sentences: Sequence[SentenceRecord], rng: SentenceRange) -> _Evidence:
    tokens: dict[str, int] = {}
    entities: set[str] = set()
    days: set[int] = set()
    for index in rng.indices():
        record = sentences[index]
        for token, count in record.english_tokens.items():
            tokens[token] = tokens.get(token, 0) + count
        entities |= record.entities
        days |= record.day_set()
    return _Evidence(tokens=tokens, entities=frozenset(entities), days=frozenset(days))


def _cosine(tokens1: Mapping[str, int], tokens2: Mapping[str, int]) -> float:
    if not tokens1 or not tokens2:
        return 0.0
    dot = sum(count * tokens2.get(token, 0) for token, count in tokens1.items())
    if dot == 0:
        return 0.0
    norm1_sq = sum(c * c for c in tokens1.values())
    norm2_sq = sum(c * c for c in tokens2.values())
    return min(dot / math.sqrt(norm1_sq * norm2_sq), 1.0)


def _set_sim(set1: frozenset, set2: frozenset) -> tuple[float, bool]:
    if not set1 and not set2:
        return 0.0, False
    return len(set1 & set2) / len(set1 | set2), True


def _combine(cosine: float, entity: tuple[float, bool], time: tuple[float, bool],
             weights: Mapping[str, float]) -> float:
    parts = [(weights["cosine"], cosine)]
    if entity[1]:
        parts.append((weights["entities"], entity[0]))
    if time[1]:
        parts.append((weights["time"], time[0]))
    total = sum(weight for weight, _ in parts)
    if total <= 0.0:
        return 0.0
    return min(sum(weight * value for weight, value in parts) / total, 1.0)


def _score_evidence(ev1: _Evidence, ev2: _Evidence, config: SimilarityConfig) -> float:
    return _combine(
        _cosine(ev1.tokens, ev2.tokens),
        _set_sim(ev1.entities, ev2.entities),
        _set_sim(ev1.days, ev2.days),
        config.sentence_feature_weights,
    )


def sentence_similarity(s1: SentenceRecord, s2: SentenceRecord,
                        config: SimilarityConfig) -> SentencePairScore:
    """Cosine/entity/time similarity of one sentence pair, combined with
    defined-weight renormalization."""
    cosine = _cosine(s1.english_tokens, s2.english_tokens)
    entity = _set_sim(s1.entities, s2.entities)
    time = _set_sim(s1.day_set(), s2.day_set())
    combined = _combine(cosine, entity, time, config.sentence_feature_weights)
    return SentencePairScore(i=s1.index, j=s2.index, cosine=cosine,
                             entity_sim=entity[0], entity_defined=entity[1],
                             time_sim=time[0], time_defined=time[1],
                             combined=combined)


class _Scorer:
    """Memoized pooled-evidence scoring over contiguous range pairs."""

    def __init__(self, s1: Sequence[SentenceRecord], s2: Sequence[SentenceRecord],
                 config: SimilarityConfig):
        self.s1 = s1
        self.s2 = s2
        self.config = config
        self._evidence: dict[tuple[int, int, int], _Evidence] = {}
        self._scores: dict[tuple[int, int, int, int], float] = {}

    def _pooled(self, side: int, rng: SentenceRange) -> _Evidence:
        key = (side, rng.start, rng.end)
        if key not in self._evidence:
            sentences = self.s1 if side == 1 else self.s2
            self._evidence[key] = _pool(sentences, rng)
        return self._evidence[key]

    def score(self, range1: SentenceRange, range2: SentenceRange) -> float:
        key = (range1.start, range1.end, range2.start, range2.end)
        if key not in self._scores:
            self._scores[key] = _score_evidence(
                self._pooled(1, range1), self._pooled(2, range2), self.config)
        return self._scores[key]


def seed_alignment(s1: Sequence[SentenceRecord], s2: Sequence[SentenceRecord],
                   config: SimilarityConfig) -> list[PassageCandidate]:
    """All single-sentence pairs at or above the threshold, ordered by (i, j)."""
    scorer = _Scorer(s1, s2, config)
    seeds = []
    for i in range(len(s1)):
        for j in range(len(s2)):
            range1, range2 = SentenceRange(i, i), SentenceRange(j, j)
            score = scorer.score(range1, range2)
            if score >= config.sentence_threshold:
                seeds.append(PassageCandidate(range1, range2, score))
    return seeds


def _gap(a: SentenceRange, b: SentenceRange) -> int:
    if a.start <= b.end and b.start <= a.end:
        return 0
    return b.start - a.end - 1 if b.start > a.end else a.start - b.end - 1


def _direction(a: SentenceRange, b: SentenceRange) -> int:
    if a.start <= b.end and b.start <= a.end:
        return 0
    return 1 if b.start > a.end else -1


def _order_consistent(p: PassageCandidate, q: PassageCandidate) -> bool:
    d1 = _direction(p.range1, q.range1)
    d2 = _direction(p.range2, q.range2)
    return d1 == 0 or d2 == 0 or d1 == d2


def _hull(a: SentenceRange, b: SentenceRange) -> SentenceRange:
    return SentenceRange(min(a.start, b.start), max(a.end, b.end))


def _extensions(candidate: PassageCandidate, len1: int, len2: int) -> list[PassageCandidate]:
    r1, r2 = candidate.range1, candidate.range2
    out = []
    if r1.start > 0:
        out.append((SentenceRange(r1.start - 1, r1.end), r2))
    if r1.end < len1 - 1:
        out.append((SentenceRange(r1.start, r1.end + 1), r2))
    if r2.start > 0:
        out.append((r1, SentenceRange(r2.start - 1, r2.end)))
    if r2.end < len2 - 1:
        out.append((r1, SentenceRange(r2.start, r2.end + 1)))
    return out


def _contains(outer: SentenceRange, inner: SentenceRange) -> bool:
    return outer.start <= inner.start and outer.end >= inner.end


def grow_passages(seeds: Sequence[PassageCandidate],
                  s1: Sequence[SentenceRecord], s2: Sequence[SentenceRecord],
                  config: SimilarityConfig,
                  stats: Optional[dict] = None) -> list[PassagePair]:
    """Expand and merge seed pairs to a fixpoint, then drop dominated pairs."""
    scorer = _Scorer(s1, s2, config)
    candidates = {(c.range1, c.range2): c for c in seeds}
    bound = len(s1) * len(s2) + len(seeds) + 1
    iterations = 0
    changed = True
    while changed:
        iterations += 1
        if iterations > bound:
            raise AssertionError(f"grow loop exceeded its iteration bound {bound}")
        changed = False

        # EXPAND: each candidate applies its single best strict improvement.
        expanded: dict[tuple[SentenceRange, SentenceRange], PassageCandidate] = {}
        for candidate in sorted(candidates.values(), key=PassageCandidate.sort_key):
            options = []
            for range1, range2 in _extensions(candidate, len(s1), len(s2)):
                score = scorer.score(range1, range2)
                if score > candidate.score + EPSILON:
                    options.append(PassageCandidate(range1, range2, score))
            if options:
                options.sort(key=lambda c: (-c.score,) + c.sort_key())
                candidate = options[0]
                changed = True
            expanded.setdefault((candidate.range1, candidate.range2), candidate)
        candidates = expanded

        # MERGE: combine close, order-consistent pairs while scores hold up.
        merging = True
        while merging:
            merging = False
            ordered = sorted(candidates.values(), key=PassageCandidate.sort_key)
            for a_idx in range(len(ordered)):
                for b_idx in range(a_idx + 1, len(ordered)):
                    p, q = ordered[a_idx], ordered[b_idx]
                    if abs(_gap(p.range1, q.range1)) > config.merge_gap:
                        continue
                    if abs(_gap(p.range2, q.range2)) > config.merge_gap:
                        continue
                    if not _order_consistent(p, q):
                        continue
                    range1, range2 = _hull(p.range1, q.range1), _hull(p.range2, q.range2)
                    score = scorer.score(range1, range2)
                    if score < config.sentence_threshold or score < min(p.score, q.score):
                        continue
                    merged = PassageCandidate(range1, range2, score)
                    del candidates[(p.range1, p.range2)]
                    del candidates[(q.range1, q.range2)]
                    candidates.setdefault((range1, range2), merged)
                    changed = merging = True
                    break
                if merging:
                    break

    if stats is not None:
        stats["iterations"] = iterations
        stats["bound"] = bound

    survivors = []
    final = sorted(candidates.values(), key=PassageCandidate.sort_key)
    for candidate in final:
        dominated = any(
            other is not candidate
            and other.score > candidate.score
            and _contains(other.range1, candidate.range1)
            and _contains(other.range2, candidate.range2)
            for other in final)
        if not dominated:
            survivors.append(PassagePair(candidate.range1, candidate.range2,
                                         candidate.score))
    return survivors


def align_passages(s1: Sequence[SentenceRecord], s2: Sequence[SentenceRecord],
                   config: SimilarityConfig,
                   stats: Optional[dict] = None) -> list[PassagePair]:
    """Seed and grow in one step; the full alignment for a snapshot pair."""
    return grow_passages(seed_alignment(s1, s2, config), s1, s2, config, stats=stats)
