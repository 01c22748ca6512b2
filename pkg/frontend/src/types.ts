/** Payload types mirroring the service's published JSON schemas. */

export interface PairInfo {
  pair_id: string;
  canonical_id: string;
  titles: Record<string, string>;
  langs: [string, string];
  snapshot_count: number;
}

export interface FeatureScore {
  feature: string;
  value: number;
  defined: boolean;
}

export interface TimelinePoint {
  time: string;
  sim: number;
  sim_text: number;
  sim_meta: number;
  feature_scores: FeatureScore[];
}

export interface TimelineSeries {
  schema_version: number;
  pair_id: string;
  points: TimelinePoint[];
  edits1: Record<string, number>;
  edits2: Record<string, number>;
}

export interface SentenceRange {
  start: number;
  end: number;
}

export interface PassagePair {
  range1: SentenceRange;
  range2: SentenceRange;
  score: number;
}

export interface HostRankEntry {
  host: string;
  count: number;
  two_sided: boolean;
}

export interface SnapshotSummary {
  lang: string;
  title: string;
  revision_id: number;
  timestamp: string;
  char_count: number;
  sentence_count: number;
}

export interface SentenceRow {
  index: number;
  text: string;
  char_len: number;
}

export interface ImageRow {
  image: string;
  in1: boolean;
  in2: boolean;
}

export interface ComparisonDocument {
  schema_version: number;
  pair_id: string;
  target_time: string;
  snapshots: [SnapshotSummary, SnapshotSummary];
  sentences1: SentenceRow[];
  sentences2: SentenceRow[];
  passage_pairs: PassagePair[];
  images: ImageRow[];
  host_ranking: HostRankEntry[];
  editor_locations1: Record<string, number>;
  editor_locations2: Record<string, number>;
  feature_scores: FeatureScore[];
  sim_text: number;
  sim_meta: number;
  sim: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
