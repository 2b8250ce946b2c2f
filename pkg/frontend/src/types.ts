/** Payload shapes of the analysis service (bundle document and recompute responses). */

export interface VariableSummary {
  name: string;
  kind: "continuous" | "categorical";
  min: number;
  max: number;
}

export interface ClassSummary {
  name: string;
  levels: string[];
  counts: number[];
}

export interface SiSection {
  labels: string[];
  matrix: number[][];
}

export interface VidNode {
  name: string;
  angle: number;
}

export interface VidEdge {
  a: string;
  b: string;
  si: number;
  band: "strong" | "medium" | "weak";
}

export interface VidSection {
  nodes: VidNode[];
  center: string | null;
  edges: VidEdge[];
  thresholds: { strong: number; weak_low: number; weak_high: number };
  notes: { medium_band: string };
}

export interface RankingEntry {
  variables: string[];
  arity: number;
  si: number | null;
  cdi_12: number;
  cdi_21: number;
  cdr: number;
  bound: number;
}

export interface RankingSection {
  strategy: string;
  max_size: number;
  directions: { cdi_12: string; cdi_21: string };
  entries: RankingEntry[];
}

/** The recomputable statistics shared by the bundle and recompute responses. */
export interface Stats {
  si: SiSection;
  ranking: RankingSection;
  vid: VidSection;
}

export interface Bundle extends Stats {
  format: string;
  version: string;
  m: number;
  dataset: {
    n_rows: number;
    n_dropped: number;
    variables: VariableSummary[];
    class: ClassSummary | null;
  };
  rows: {
    columns: string[];
    kinds: string[];
    data: number[][];
    class: string | null;
    class_codes: number[] | null;
    class_levels: string[] | null;
  };
}

export interface RecomputeResponse extends Stats {
  subset_hash: string;
  n_rows: number;
}

export interface ServiceError {
  error: string;
  status: number;
  subset_hash?: string;
}
