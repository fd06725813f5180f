/** A hand-built ComparisonResult payload matching the service contract. */
import type { ComparisonJson, SchemaJson } from "../src/types.js";

const STATS_LEFT = { case_count: 4, variant_count: 2, event_count: 10, avg_case_duration_s: 120.0 };
const STATS_RIGHT = { case_count: 3, variant_count: 2, event_count: 8, avg_case_duration_s: 90.5 };

export const UNIQUE_COLOR = "#d62728";

export const comparisonFixture: ComparisonJson = {
  created_at: "2021-06-01T12:00:00+00:00",
  metric: "frequency",
  left: {
    label: "first era",
    filter: { attribute_clauses: [], time_window: null },
    dfg: {
      nodes: {
        "A": { frequency: 4, case_coverage: 4 },
        "B": { frequency: 4, case_coverage: 4 },
        "X": { frequency: 2, case_coverage: 2 },
      },
      edges: [
        { source: "A", target: "B", frequency: 4, mean_s: 30.0, median_s: 30.0, min_s: 10.0, max_s: 50.0 },
        { source: "B", target: "X", frequency: 2, mean_s: 61.5, median_s: 61.5, min_s: 60.0, max_s: 63.0 },
      ],
      start_activities: { "A": 4 },
      end_activities: { "B": 2, "X": 2 },
      source_case_count: 4,
    },
    statistics: STATS_LEFT,
  },
  right: {
    label: "second era",
    filter: { attribute_clauses: [], time_window: null },
    dfg: {
      nodes: {
        "A": { frequency: 3, case_coverage: 3 },
        "B": { frequency: 3, case_coverage: 3 },
        "Y": { frequency: 2, case_coverage: 2 },
      },
      edges: [
        { source: "A", target: "B", frequency: 3, mean_s: 40.0, median_s: 40.0, min_s: 20.0, max_s: 60.0 },
        { source: "B", target: "Y", frequency: 2, mean_s: 75.0, median_s: 75.0, min_s: 70.0, max_s: 80.0 },
      ],
      start_activities: { "A": 3 },
      end_activities: { "B": 1, "Y": 2 },
      source_case_count: 3,
    },
    statistics: STATS_RIGHT,
  },
  common_activities: ["A", "B"],
  unique_activities_left: ["X"],
  unique_activities_right: ["Y"],
  common_edges: [{ source: "A", target: "B" }],
  unique_edges_left: [{ source: "B", target: "X" }],
  unique_edges_right: [{ source: "B", target: "Y" }],
  highlight: {
    left: {
      nodes: { "A": "common", "B": "common", "X": "unique" },
      edges: [
        { source: "A", target: "B", class: "common" },
        { source: "B", target: "X", class: "unique" },
      ],
    },
    right: {
      nodes: { "A": "common", "B": "common", "Y": "unique" },
      edges: [
        { source: "A", target: "B", class: "common" },
        { source: "B", target: "Y", class: "unique" },
      ],
    },
  },
  performance: {
    left: [
      { source: "A", target: "B", value: 4 },
      { source: "B", target: "X", value: 2 },
    ],
    right: [
      { source: "A", target: "B", value: 3 },
      { source: "B", target: "Y", value: 2 },
    ],
  },
  statistics_delta: { case_count: 1, variant_count: 0, event_count: 2, avg_case_duration_s: 29.5 },
  unique_color: UNIQUE_COLOR,
};

export const schemaFixture: SchemaJson = {
  attributes: [
    {
      key: "ward", level: "case", type: "string",
      values: [{ value: "ICU", count: 5 }, { value: "GENERAL", count: 9 }],
      truncated: false,
    },
    {
      key: "org:resource", level: "event", type: "string",
      values: [{ value: "staff-01", count: 7 }, { value: "staff-02", count: 3 }],
      truncated: false,
    },
  ],
  time_range: { min: "2020-03-01T00:00:00.000+00:00", max: "2021-02-20T10:30:00.000+00:00" },
};
