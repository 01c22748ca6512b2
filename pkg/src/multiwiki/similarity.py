"""Feature similarities, weighted aggregation and the host ranking.

All scores live in [0,1]. A feature whose evidence is empty on both sides is
undefined; aggregation drops undefined features and renormalizes the remaining
group weights. Editor-location similarity scales the second side by |E1|/|E2|
so distribution shape, not editor volume, is compared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import (
    ALL_FEATURES,
    EditorSet,
    FeatureScore,
    HostRankEntry,
    META_FEATURES,
    MultiwikiError,
    PassagePair,
    SimilarityConfig,
    Snapshot,
    TEXT_FEATURES,
)


class MissingFeature(MultiwikiError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing feature score: {name}")


def jaccard(set1: frozenset, set2: frozenset) -> tuple[float, bool]:
    """|∩|/|∪| with a defined flag; (0.0, False) when both sides are empty."""
    if not set1 and not set2:
        return 0.0, False
    union = len(set1 | set2)
    return len(set1 & set2) / union, True


_OVERLAP_EVIDENCE = {
    "images": lambda s: s.images,
    "annotations": lambda s: s.wiki_annotations,
    "ext_links": lambda s: s.ext_links,
    "ext_hosts": lambda s: frozenset(s.ext_hosts),
    "editors": lambda s: s.editors.ids(),
}


def sim_overlap_feature(feature: str, a1: Snapshot, a2: Snapshot) -> FeatureScore:
    """Jaccard overlap of a named set feature (multisets collapsed to sets)."""
    evidence = _OVERLAP_EVIDENCE[feature]
    value, defined = jaccard(frozenset(evidence(a1)), frozenset(evidence(a2)))
    return FeatureScore(feature, value, defined)


def sim_editor_locations(e1: EditorSet, e2: EditorSet) -> FeatureScore:
    """Country-distribution overlap of located editors, volume-matched by |E1|/|E2|."""
    counts1 = Counter(e.loc for e in e1.located())
    counts2 = Counter(e.loc for e in e2.located())
    n1, n2 = sum(counts1.values()), sum(counts2.values())
    if n1 == 0 or n2 == 0:
        return FeatureScore("editor_locations", 0.0, False)
    ratio = n1 / n2
    matched = sum(min(counts1.get(loc, 0), counts2.get(loc, 0) * ratio)
                  for loc in counts1.keys() | counts2.keys())
    return FeatureScore("editor_locations", min(matched / n1, 1.0), True)


def sim_text_length(a1: Snapshot, a2: Snapshot) -> FeatureScore:
    length1, length2 = a1.char_count, a2.char_count
    if length1 == 0 and length2 == 0:
        return FeatureScore("text_length", 0.0, False)
    return FeatureScore("text_length", min(length1, length2) / max(length1, length2), True)


def _document_tokens(snapshot: Snapshot) -> frozenset[str]:
    tokens: set[str] = set()
    for sentence in snapshot.sentences:
        tokens.update(sentence.english_tokens)
    return frozenset(tokens)


def sim_text_overlap(a1: Snapshot, a2: Snapshot) -> FeatureScore:
    value, defined = jaccard(_document_tokens(a1), _document_tokens(a2))
    return FeatureScore("text_overlap", value, defined)


def sim_passage_coverage(a1: Snapshot, a2: Snapshot,
                         pairs: Sequence[PassagePair]) -> FeatureScore:
    """Pooled fraction of sentence characters covered by any aligned passage."""
    aligned1: set[int] = set()
    aligned2: set[int] = set()
    for pair in pairs:
        aligned1.update(pair.range1.indices())
        aligned2.update(pair.range2.indices())
    total = sum(s.char_len for s in a1.sentences) + sum(s.char_len for s in a2.sentences)
    if total == 0:
        return FeatureScore("passage_coverage", 0.0, False)
    covered = sum(s.char_len for s in a1.sentences if s.index in aligned1) + \
        sum(s.char_len for s in a2.sentences if s.index in aligned2)
    return FeatureScore("passage_coverage", covered / total, True)


@dataclass(frozen=True)
class AggregateResult:
    sim_text: float
    sim_meta: float
    sim: float
    text_defined: bool
    meta_defined: bool


def _group_score(scores: Mapping[str, FeatureScore], features: Sequence[str],
                 weights: Mapping[str, float]) -> tuple[float, bool]:
    defined = [f for f in features if scores[f].defined]
    total_weight = sum(weights[f] for f in defined)
    if not defined or total_weight <= 0.0:
        return 0.0, False
    value = sum(weights[f] / total_weight * scores[f].value for f in defined)
    return min(value, 1.0), True


def aggregate_similarity(scores: Iterable[FeatureScore],
                         config: SimilarityConfig) -> AggregateResult:
    """Weighted group sums with undefined-feature renormalization, then the
    alpha combination of the two groups."""
    by_name = {score.feature: score for score in scores}
    for name in ALL_FEATURES:
        if name not in by_name:
            raise MissingFeature(name)
    sim_text, text_defined = _group_score(by_name, TEXT_FEATURES, config.text_weights)
    sim_meta, meta_defined = _group_score(by_name, META_FEATURES, config.meta_weights)
    sim = config.alpha * sim_text + (1.0 - config.alpha) * sim_meta
    return AggregateResult(sim_text=sim_text, sim_meta=sim_meta, sim=sim,
                           text_defined=text_defined, meta_defined=meta_defined)


def rank_hosts(a1: Snapshot, a2: Snapshot) -> tuple[HostRankEntry, ...]:
    """Two-sided hosts first (descending min count, then name), one-sided after."""
    hosts1, hosts2 = a1.ext_hosts, a2.ext_hosts
    shared = sorted(
        (HostRankEntry(host, min(hosts1[host], hosts2[host]), True)
         for host in hosts1.keys() & hosts2.keys()),
        key=lambda e: (-e.count, e.host))
    single = sorted(
        (HostRankEntry(host, hosts1.get(host) or hosts2.get(host) or 0, False)
         for host in hosts1.keys() ^ hosts2.keys()),
        key=lambda e: (-e.count, e.host))
    return tuple(shared + single)


def feature_scores(a1: Snapshot, a2: Snapshot,
                   pairs: Sequence[PassagePair]) -> tuple[FeatureScore, ...]:
    """All nine feature scores in canonical order."""
    scores = [
        sim_text_length(a1, a2),
        sim_text_overlap(a1, a2),
        sim_passage_coverage(a1, a2, pairs),
    ]
    scores.extend(sim_overlap_feature(name, a1, a2)
                  for name in ("images", "annotations", "ext_links", "ext_hosts", "editors"))
    scores.append(sim_editor_locations(a1.editors, a2.editors))
    return tuple(scores)
