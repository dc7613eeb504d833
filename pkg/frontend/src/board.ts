/**
 * DOM rendering for the game board.
 *
 * Letters are the authoritative color identity; hues are a
 * colorblind-safe palette (Okabe–Ito) used only as a visual aid.
 * Interval boxes are positioned proportionally from the exact
 * coordinate strings, so relative order and overlap survive any width.
 */

import { parseCoord, StateView } from "./api";

export const PALETTE: Record<string, string> = {
  a: "#E69F00", // orange
  b: "#56B4E9", // sky blue
  c: "#009E73", // bluish green
  d: "#F0E442", // yellow
  e: "#0072B2", // blue
  f: "#D55E00", // vermillion
  g: "#CC79A7", // reddish purple
};

export const ALL_COLORS = ["a", "b", "c", "d", "e", "f", "g"];

function pct(x: number): string {
  return `${(x * 100).toFixed(3)}%`;
}

/** Assign each interval a lane so overlapping boxes stack vertically. */
export function assignLanes(
  spans: { lo: number; hi: number }[],
): number[] {
  const laneEnds: number[] = [];
  return spans.map(({ lo, hi }) => {
    for (let lane = 0; lane < laneEnds.length; lane++) {
      if (laneEnds[lane]! < lo) {
        laneEnds[lane] = hi;
        return lane;
      }
    }
    laneEnds.push(hi);
    return laneEnds.length - 1;
  });
}

export function renderBoard(root: HTMLElement, view: StateView): void {
  root.textContent = "";
  const spans = view.intervals.map((iv) => ({
    lo: parseCoord(iv.lo),
    hi: parseCoord(iv.hi),
  }));
  const pendingSpan = view.pending
    ? { lo: parseCoord(view.pending.lo), hi: parseCoord(view.pending.hi) }
    : null;
  const lanes = assignLanes(
    pendingSpan ? [...spans, pendingSpan] : spans,
  );
  const laneCount = Math.max(1, ...lanes.map((l) => l + 1));
  root.style.position = "relative";
  root.style.height = `${laneCount * 34 + 8}px`;

  for (const [wallIndex, wall] of view.walls.entries()) {
    const w = document.createElement("div");
    w.className = "wall";
    w.dataset.side = wallIndex === 0 ? "left" : "right";
    w.style.position = "absolute";
    w.style.left = pct(parseCoord(wall));
    w.style.top = "0";
    w.style.bottom = "0";
    root.appendChild(w);
  }

  view.intervals.forEach((iv, idx) => {
    const box = document.createElement("div");
    box.className = "interval";
    box.dataset.color = iv.color;
    box.dataset.moveIndex = String(iv.move_index);
    box.style.position = "absolute";
    box.style.left = pct(spans[idx]!.lo);
    box.style.width = pct(spans[idx]!.hi - spans[idx]!.lo);
    box.style.top = `${lanes[idx]! * 34 + 4}px`;
    box.style.background = PALETTE[iv.color] ?? "#888";
    box.textContent = iv.color;
    root.appendChild(box);
  });

  if (pendingSpan) {
    const box = document.createElement("div");
    box.className = "interval pending";
    box.style.position = "absolute";
    box.style.left = pct(pendingSpan.lo);
    box.style.width = pct(pendingSpan.hi - pendingSpan.lo);
    box.style.top = `${lanes[lanes.length - 1]! * 34 + 4}px`;
    box.textContent = "?";
    root.appendChild(box);
  }
}

export function renderPalette(
  root: HTMLElement,
  view: StateView,
  onPick: (color: string) => void,
): void {
  root.textContent = "";
  const legal = new Set(view.legal_colors);
  for (const color of ALL_COLORS) {
    const btn = document.createElement("button");
    btn.className = "swatch";
    btn.dataset.color = color;
    btn.textContent = color;
    btn.style.background = PALETTE[color]!;
    btn.disabled = view.status !== "awaiting-color" || !legal.has(color);
    if (!btn.disabled) btn.addEventListener("click", () => onPick(color));
    root.appendChild(btn);
  }
}

export function renderStatus(root: HTMLElement, view: StateView): void {
  root.textContent = "";
  const banner = document.createElement("div");
  banner.className = "banner";
  if (view.status === "finished") {
    banner.classList.add("loss");
    banner.textContent =
      `All ${view.used_colors.length} colors forced ` +
      `(${view.used_colors.join(", ")}) — no online algorithm escapes this.`;
  } else {
    banner.textContent =
      `Colors used: ${view.used_colors.join(", ") || "none"} · ` +
      `pick a color for the highlighted interval`;
  }
  root.appendChild(banner);
}

export function renderLog(root: HTMLElement, view: StateView): void {
  root.textContent = "";
  const list = document.createElement("ol");
  list.className = "movelog";
  for (const iv of view.intervals) {
    const item = document.createElement("li");
    item.textContent = `[${iv.lo}, ${iv.hi}] → ${iv.color}`;
    list.appendChild(item);
  }
  root.appendChild(list);
}

export function renderHint(root: HTMLElement, view: StateView): void {
  root.textContent = "";
  const names = view.matched_patterns;
  root.textContent = names.length
    ? `matched patterns: ${names.join(", ")}`
    : "matched patterns: none";
}
