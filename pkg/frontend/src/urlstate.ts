/**
 * Everything needed to reproduce a view lives in the URL query string
 * (log, session, metric), so views are shareable.
 */
import { METRICS, type Metric } from "./types.js";

export interface ViewState {
  log: string | null;
  session: string | null;
  metric: Metric;
}

export function readViewState(search: string = window.location.search): ViewState {
  const params = new URLSearchParams(search);
  const metric = params.get("metric");
  return {
    log: params.get("log"),
    session: params.get("session"),
    metric: METRICS.includes(metric as Metric) ? (metric as Metric) : "frequency",
  };
}

export function writeViewState(state: ViewState): void {
  const params = new URLSearchParams();
  if (state.log) params.set("log", state.log);
  if (state.session) params.set("session", state.session);
  params.set("metric", state.metric);
  window.history.replaceState(null, "", `?${params.toString()}`);
}
