/** App wiring: one session per tab, every state comes from the server. */

import { ApiError, GameClient, StateView } from "./api";
import {
  renderBoard,
  renderHint,
  renderLog,
  renderPalette,
  renderStatus,
} from "./board";

export class App {
  private view: StateView | null = null;
  private hintsOn = false;
  private busy = false;

  constructor(
    private client: GameClient,
    private els: {
      board: HTMLElement;
      palette: HTMLElement;
      status: HTMLElement;
      log: HTMLElement;
      hint: HTMLElement;
      toast: HTMLElement;
      download: HTMLAnchorElement;
      restart: HTMLButtonElement;
      hintToggle: HTMLInputElement;
    },
  ) {
    els.restart.addEventListener("click", () => void this.start());
    els.hintToggle.addEventListener("change", () => {
      this.hintsOn = els.hintToggle.checked;
      this.redraw();
    });
    els.download.addEventListener("click", (ev) => {
      ev.preventDefault();
      void this.downloadTrace();
    });
  }

  async start(): Promise<void> {
    this.view = await this.client.createSession();
    this.redraw();
  }

  async pick(color: string): Promise<void> {
    if (!this.view || this.busy) return;
    this.busy = true;
    try {
      this.view = await this.client.postColor(this.view.session_id, color);
    } catch (err) {
      if (err instanceof ApiError) this.toast(`rejected: ${err.message}`);
      else throw err;
    } finally {
      this.busy = false;
    }
    this.redraw();
  }

  async downloadTrace(): Promise<void> {
    if (!this.view) return;
    const trace = await this.client.getTrace(this.view.session_id);
    const blob = new Blob([JSON.stringify(trace, null, 1)], {
      type: "application/json",
    });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = `game-${this.view.session_id.slice(0, 8)}.json`;
    a.click();
    URL.revokeObjectURL(url);
  }

  private toast(message: string): void {
    this.els.toast.textContent = message;
    this.els.toast.classList.add("visible");
    setTimeout(() => this.els.toast.classList.remove("visible"), 2500);
  }

  redraw(): void {
    if (!this.view) return;
    renderBoard(this.els.board, this.view);
    renderPalette(this.els.palette, this.view, (c) => void this.pick(c));
    renderStatus(this.els.status, this.view);
    renderLog(this.els.log, this.view);
    if (this.hintsOn) renderHint(this.els.hint, this.view);
    else this.els.hint.textContent = "";
  }

  get state(): StateView | null {
    return this.view;
  }
}

export function mount(doc: Document, base = ""): App {
  const el = <T extends HTMLElement>(id: string) =>
    doc.getElementById(id) as T;
  const app = new App(new GameClient(base), {
    board: el("board"),
    palette: el("palette"),
    status: el("status"),
    log: el("log"),
    hint: el("hint"),
    toast: el("toast"),
    download: el<HTMLAnchorElement>("download"),
    restart: el<HTMLButtonElement>("restart"),
    hintToggle: el<HTMLInputElement>("hint-toggle"),
  });
  return app;
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  const app = mount(document);
  void app.start();
}
