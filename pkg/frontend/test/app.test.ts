import { beforeEach, describe, expect, it } from "vitest";

import { ApiError, GameClient, StateView } from "../src/api";
import { App, mount } from "../src/main";

function dom(): void {
  document.body.innerHTML = `
    <div id="status"></div><div id="board"></div><div id="palette"></div>
    <input type="checkbox" id="hint-toggle" />
    <a href="#" id="download"></a>
    <button id="restart"></button>
    <div id="hint"></div><div id="log"></div><div id="toast"></div>`;
}

function fakeViews(): StateView[] {
  const base = {
    session_id: "s1",
    omega: 4,
    target_colors: 7,
    walls: ["0/2^0", "1/2^0"] as [string, string],
    matrix: { sides: [], colors: [] },
    matched_patterns: ["bd"],
  };
  return [
    {
      ...base,
      status: "awaiting-color",
      used_colors: [],
      intervals: [],
      pending: { lo: "1/2^2", hi: "3/2^2" },
      legal_colors: ["a", "b", "c", "d", "e", "f", "g"],
    },
    {
      ...base,
      status: "finished",
      used_colors: ["a", "b", "c", "d", "e", "f", "g"],
      intervals: [{ lo: "1/2^2", hi: "3/2^2", color: "a", move_index: 0 }],
      pending: null,
      legal_colors: [],
    },
  ];
}

class FakeClient extends GameClient {
  views = fakeViews();
  calls: string[] = [];
  rejectNext = false;

  override async createSession(): Promise<StateView> {
    this.calls.push("create");
    return this.views[0]!;
  }

  override async postColor(id: string, color: string): Promise<StateView> {
    this.calls.push(`color:${color}`);
    if (this.rejectNext) {
      this.rejectNext = false;
      throw new ApiError(409, { error: "illegal color" });
    }
    return this.views[1]!;
  }
}

describe("App", () => {
  beforeEach(dom);

  function build(): { app: App; client: FakeClient } {
    const client = new FakeClient();
    const app = mount(document);
    (app as unknown as { client: GameClient }).client = client;
    return { app, client };
  }

  it("plays to the loss screen through server responses only", async () => {
    const { app, client } = build();
    await app.start();
    expect(document.querySelectorAll("#palette button:not(:disabled)")).toHaveLength(7);
    await app.pick("a");
    expect(client.calls).toEqual(["create", "color:a"]);
    expect(app.state?.status).toBe("finished");
    expect(document.querySelector(".banner.loss")?.textContent).toContain(
      "7 colors",
    );
    expect(
      document.querySelectorAll("#palette button:not(:disabled)"),
    ).toHaveLength(0);
  });

  it("keeps state unchanged and toasts when the server rejects a color", async () => {
    const { app, client } = build();
    await app.start();
    client.rejectNext = true;
    await app.pick("a");
    expect(app.state?.status).toBe("awaiting-color");
    expect(document.getElementById("toast")?.textContent).toContain("rejected");
  });

  it("hint toggle shows server-reported patterns", async () => {
    const { app } = build();
    await app.start();
    const toggle = document.getElementById("hint-toggle") as HTMLInputElement;
    toggle.checked = true;
    toggle.dispatchEvent(new Event("change"));
    expect(document.getElementById("hint")?.textContent).toContain("bd");
  });
});
