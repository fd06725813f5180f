/**
 * Workbench wiring: pick a log, build two filter slices, compare them
 * side by side, toggle points of view, export.
 *
 * The UI computes nothing itself: every number and class on screen is a
 * field of a service response. View state (log, session, metric) lives
 * in the URL.
 */
import { ApiClient, ApiError } from "./api.js";
import { ExportControls } from "./exports.js";
import { FilterBuilder } from "./filterform.js";
import { GraphPane } from "./graphview.js";
import { renderStatsPanel } from "./statspanel.js";
import { readViewState, writeViewState, type ViewState } from "./urlstate.js";
import { METRICS, type ComparisonJson, type Metric } from "./types.js";
import type { UrlOpener } from "./exports.js";

interface Elements {
  logSelect: HTMLSelectElement;
  metricSelect: HTMLSelectElement;
  compareButton: HTMLButtonElement;
  statusLine: HTMLElement;
  leftForm: HTMLElement;
  rightForm: HTMLElement;
  leftPane: HTMLElement;
  rightPane: HTMLElement;
  statsPanel: HTMLElement;
  exportBar: HTMLElement;
}

export class App {
  private api: ApiClient;
  private elements: Elements;
  private state: ViewState;
  private leftBuilder: FilterBuilder;
  private rightBuilder: FilterBuilder;
  private leftPane: GraphPane;
  private rightPane: GraphPane;
  private exports: ExportControls;
  private comparison: ComparisonJson | null = null;
  private inflight: AbortController | null = null;

  constructor(elements: Elements, api = new ApiClient(), opener?: UrlOpener) {
    this.elements = elements;
    this.api = api;
    this.state = readViewState();

    this.leftBuilder = new FilterBuilder(elements.leftForm, "Slice A");
    this.rightBuilder = new FilterBuilder(elements.rightForm, "Slice B");
    this.leftPane = new GraphPane(elements.leftPane);
    this.rightPane = new GraphPane(elements.rightPane);
    this.exports = new ExportControls(elements.exportBar, opener);

    for (const metric of METRICS) {
      const option = document.createElement("option");
      option.value = metric;
      option.textContent = metric;
      elements.metricSelect.appendChild(option);
    }
    elements.metricSelect.value = this.state.metric;

    elements.logSelect.addEventListener("change", () => {
      void this.selectLog(elements.logSelect.value, null);
    });
    elements.metricSelect.addEventListener("change", () => {
      this.setMetric(elements.metricSelect.value as Metric);
    });
    elements.compareButton.addEventListener("click", () => {
      void this.compare();
    });
    const refreshCompareEnabled = () => {
      this.cancelInflight(); // filters changed: drop any stale in-flight work
      elements.compareButton.disabled =
        !(this.leftBuilder.isValid() && this.rightBuilder.isValid() && this.state.log);
    };
    this.leftBuilder.onChange(refreshCompareEnabled);
    this.rightBuilder.onChange(refreshCompareEnabled);
  }

  async start(): Promise<void> {
    const logs = await this.api.listLogs();
    this.elements.logSelect.innerHTML = "";
    for (const entry of logs) {
      const option = document.createElement("option");
      option.value = entry.log_id;
      option.textContent = `${entry.file_name} (${entry.statistics.case_count} cases)`;
      this.elements.logSelect.appendChild(option);
    }
    if (logs.length === 0) {
      this.status("no logs in the repository — upload one or start the service with --demo");
      return;
    }

    if (this.state.session) {
      try {
        await this.restoreSession(this.state.session);
        return;
      } catch (error) {
        this.status(`stored session unavailable (${(error as Error).message}); starting fresh`);
      }
    }
    const logId = this.state.log && logs.some((l) => l.log_id === this.state.log)
      ? this.state.log
      : logs[0].log_id;
    await this.selectLog(logId, null);
  }

  private async restoreSession(sessionId: string): Promise<void> {
    const session = await this.api.getSession(sessionId);
    await this.selectLog(session.log_id, sessionId);
    if (session.active_pair !== null) {
      const comparison = await this.api.getComparison(sessionId, this.state.metric);
      this.renderComparison(comparison);
    }
  }

  private async selectLog(logId: string, sessionId: string | null): Promise<void> {
    this.cancelInflight();
    this.state = { log: logId, session: sessionId, metric: this.state.metric };
    this.elements.logSelect.value = logId;
    writeViewState(this.state);

    const schema = await this.api.getSchema(logId);
    this.leftBuilder.setSchema(schema);
    this.rightBuilder.setSchema(schema);
    this.elements.compareButton.disabled = false;
    if (sessionId === null) {
      this.comparison = null;
      this.exports.setState(null);
      this.status("pick filters for both slices, then Compare");
    }
  }

  private setMetric(metric: Metric): void {
    this.state = { ...this.state, metric };
    writeViewState(this.state);
    // re-label in place; the graph structure is untouched and nothing is re-fetched
    this.leftPane.setMetric(metric);
    this.rightPane.setMetric(metric);
    if (this.state.session && this.comparison) {
      this.exports.setState({ sessionId: this.state.session, metric });
    }
  }

  private async compare(): Promise<void> {
    if (!this.state.log) return;
    this.cancelInflight();
    const controller = new AbortController();
    this.inflight = controller;
    this.status("comparing…");
    try {
      let sessionId = this.state.session;
      if (!sessionId) {
        sessionId = (await this.api.createSession(this.state.log)).session_id;
      }
      const left = await this.api.addSlice(
        sessionId, "Slice A", this.leftBuilder.getSpec(), controller.signal);
      const right = await this.api.addSlice(
        sessionId, "Slice B", this.rightBuilder.getSpec(), controller.signal);
      await this.api.setActivePair(sessionId, left.index, right.index);
      const comparison = await this.api.getComparison(
        sessionId, this.state.metric, controller.signal);

      this.state = { ...this.state, session: sessionId };
      writeViewState(this.state);
      this.renderComparison(comparison);
    } catch (error) {
      if ((error as Error).name === "AbortError") return;
      const message = error instanceof ApiError
        ? `${error.code}: ${error.message}` : (error as Error).message;
      this.status(`comparison failed — ${message}`);
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  renderComparison(comparison: ComparisonJson): void {
    this.comparison = comparison;
    this.leftPane.render(comparison.left.dfg, comparison.highlight.left,
                         this.state.metric, comparison.unique_color);
    this.rightPane.render(comparison.right.dfg, comparison.highlight.right,
                          this.state.metric, comparison.unique_color);
    renderStatsPanel(this.elements.statsPanel, comparison);
    if (this.state.session) {
      this.exports.setState({ sessionId: this.state.session, metric: this.state.metric });
    }
    const uniques = comparison.unique_activities_left.length
      + comparison.unique_activities_right.length;
    this.status(`${comparison.left.label} vs ${comparison.right.label} — `
      + `${uniques} unique activities highlighted`);
  }

  private cancelInflight(): void {
    this.inflight?.abort();
    this.inflight = null;
  }

  private status(text: string): void {
    this.elements.statusLine.textContent = text;
  }
}

export function initApp(): App {
  const byId = <T extends HTMLElement>(id: string): T =>
    document.getElementById(id) as T;
  const app = new App({
    logSelect: byId("log-select"),
    metricSelect: byId("metric-select"),
    compareButton: byId("compare-button"),
    statusLine: byId("status-line"),
    leftForm: byId("filter-left"),
    rightForm: byId("filter-right"),
    leftPane: byId("pane-left"),
    rightPane: byId("pane-right"),
    statsPanel: byId("stats-panel"),
    exportBar: byId("export-bar"),
  });
  void app.start();
  return app;
}
