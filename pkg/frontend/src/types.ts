/** Types mirroring the service's JSON contracts. */

export type Metric = "frequency" | "mean" | "median" | "min" | "max";
export const METRICS: Metric[] = ["frequency", "mean", "median", "min", "max"];

export type ElementClass = "common" | "unique";

export interface LogStatistics {
  case_count: number;
  variant_count: number;
  event_count: number;
  avg_case_duration_s: number;
}

export interface LogEntry {
  log_id: string;
  file_name: string;
  format: string;
  size_bytes: number;
  ingested_at: string;
  statistics: LogStatistics;
}

export interface DfgNode {
  frequency: number;
  case_coverage: number;
}

export interface DfgEdge {
  source: string;
  target: string;
  frequency: number;
  mean_s: number;
  median_s: number;
  min_s: number;
  max_s: number;
}

export interface DfgJson {
  nodes: Record<string, DfgNode>;
  edges: DfgEdge[];
  start_activities: Record<string, number>;
  end_activities: Record<string, number>;
  source_case_count: number;
}

export type Scalar = string | number | boolean;

export interface AttributeClauseJson {
  key: string;
  level: "case" | "event";
  allowed_values: Scalar[];
}

export interface TimeWindowJson {
  start: string;
  end: string;
  mode: "contained" | "intersecting";
}

export interface FilterSpecJson {
  attribute_clauses: AttributeClauseJson[];
  time_window: TimeWindowJson | null;
}

export interface SliceJson {
  label: string;
  filter: FilterSpecJson;
  dfg: DfgJson;
  statistics: LogStatistics;
}

export interface HighlightJson {
  nodes: Record<string, ElementClass>;
  edges: { source: string; target: string; class: ElementClass }[];
}

export interface EdgeRef {
  source: string;
  target: string;
}

export interface ComparisonJson {
  created_at: string;
  metric: Metric;
  left: SliceJson;
  right: SliceJson;
  common_activities: string[];
  unique_activities_left: string[];
  unique_activities_right: string[];
  common_edges: EdgeRef[];
  unique_edges_left: EdgeRef[];
  unique_edges_right: EdgeRef[];
  highlight: { left: HighlightJson; right: HighlightJson };
  performance: {
    left: { source: string; target: string; value: number }[];
    right: { source: string; target: string; value: number }[];
  };
  statistics_delta: LogStatistics;
  unique_color: string;
}

export interface SchemaValue {
  value: Scalar;
  count: number;
}

export interface SchemaAttribute {
  key: string;
  level: "case" | "event";
  type: string;
  values: SchemaValue[];
  truncated: boolean;
  min?: Scalar;
  max?: Scalar;
}

export interface SchemaJson {
  attributes: SchemaAttribute[];
  time_range: { min: string; max: string } | null;
}

export interface SessionSliceJson {
  index: number;
  label: string;
  filter: FilterSpecJson;
}

export interface SessionJson {
  session_id: string;
  log_id: string;
  slices: SessionSliceJson[];
  active_pair: [number, number] | null;
}
