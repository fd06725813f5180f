/**
 * Download buttons for the comparison exports, wired to the service
 * export endpoint. Disabled until a comparison exists.
 */
import type { Metric } from "./types.js";

export const EXPORT_KINDS: { kind: string; label: string }[] = [
  { kind: "report", label: "Report (HTML)" },
  { kind: "dot_left", label: "DOT (left)" },
  { kind: "dot_right", label: "DOT (right)" },
  { kind: "variants_left", label: "Variants CSV (left)" },
  { kind: "variants_right", label: "Variants CSV (right)" },
  { kind: "log_left", label: "Log XES (left)" },
  { kind: "log_right", label: "Log XES (right)" },
];

export interface ExportState {
  sessionId: string;
  metric: Metric;
}

export type UrlOpener = (url: string) => void;

export function defaultOpener(url: string): void {
  // the service answers with Content-Disposition, so a plain navigation downloads
  const anchor = document.createElement("a");
  anchor.href = url;
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
}

export class ExportControls {
  private buttons = new Map<string, HTMLButtonElement>();
  private state: ExportState | null = null;

  constructor(container: HTMLElement, private opener: UrlOpener = defaultOpener) {
    for (const { kind, label } of EXPORT_KINDS) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = label;
      button.disabled = true;
      button.dataset.kind = kind;
      button.addEventListener("click", () => {
        if (this.state === null) return;
        this.opener(
          `/api/sessions/${encodeURIComponent(this.state.sessionId)}/export`
          + `?kind=${encodeURIComponent(kind)}&metric=${this.state.metric}`);
      });
      this.buttons.set(kind, button);
      container.appendChild(button);
    }
  }

  /** Enable the buttons once a comparison exists; null disables them all. */
  setState(state: ExportState | null): void {
    this.state = state;
    for (const button of this.buttons.values()) {
      button.disabled = state === null;
    }
  }
}
