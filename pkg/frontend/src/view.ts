/** DOM binding for the studio. */

import type { ArtworkConfig } from "./api.js";
import type { StudioView } from "./controller.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

export class DomView implements StudioView {
  private readonly canvas = byId<HTMLDivElement>("canvas");
  private readonly inspector = byId<HTMLPreElement>("inspector");
  private readonly history = byId<HTMLDivElement>("history");
  private readonly status = byId<HTMLDivElement>("status");
  private readonly dropped = byId<HTMLSpanElement>("dropped");

  constructor(private readonly onHistoryClick: (index: number) => void) {}

  showArtwork(svg: string, dropped: number): void {
    this.canvas.innerHTML = svg;
    this.dropped.textContent = String(dropped);
    this.status.textContent = "";
  }

  showConfig(config: ArtworkConfig): void {
    this.inspector.textContent = JSON.stringify(config, null, 2);
  }

  showHistory(thumbnails: string[]): void {
    this.history.replaceChildren();
    thumbnails.forEach((svg, index) => {
      const cell = document.createElement("button");
      cell.className = "thumb";
      cell.innerHTML = svg;
      cell.title = `artwork ${index + 1}`;
      cell.addEventListener("click", () => this.onHistoryClick(index));
      this.history.appendChild(cell);
    });
    this.history.scrollLeft = this.history.scrollWidth;
  }

  showPending(pending: boolean): void {
    document.body.classList.toggle("pending", pending);
  }

  showError(message: string): void {
    this.status.textContent = message;
    // non-blocking: the toast fades on the next successful render
  }

  deliverDownload(name: string, payload: Blob): void {
    const url = URL.createObjectURL(payload);
    const link = document.createElement("a");
    link.href = url;
    link.download = name;
    link.click();
    setTimeout(() => URL.revokeObjectURL(url), 5_000);
  }
}
