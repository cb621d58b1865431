import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { GameController } from "../src/controller.js";
import { expectedCalls, Fixture, ReplayFetch } from "./fakefetch.js";

const BASE = "http://test";

function loadFixture(name: string): Fixture {
  const path = join(__dirname, "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as Fixture;
}

function controllerFor(fixture: Fixture) {
  const replay = new ReplayFetch(fixture, BASE);
  const controller = new GameController(new ApiClient(BASE, replay.fetch));
  return { controller, replay };
}

const K3 = "3 3\n0 1\n0 2\n1 2";

describe("golden session replay", () => {
  it("path answers: scripted K3 game ends at total 2", async () => {
    const fixture = loadFixture("golden_k3_path.json");
    const { controller, replay } = controllerFor(fixture);

    await controller.start(K3, "algy", "order:0,1,2");
    await controller.clickEdge([0, 1]);
    await controller.clickEdge([1, 2]);

    // byte-identical API call sequence
    expect(replay.calls).toEqual(expectedCalls(fixture));
    expect(replay.remaining).toBe(0);

    // terminal render state matches the server transcript
    expect(controller.terminal).toBe(true);
    expect(controller.total).toBe(2);
    expect(controller.total).toBe(fixture.server_total);
    const third = controller.edgeView([0, 2])!;
    expect(third.status).toBe("forced");
    expect(third.dir).toEqual([0, 2]);
  });

  it("adversary answers: scripted K3 game ends at total 3", async () => {
    const fixture = loadFixture("golden_k3_adversary.json");
    const { controller, replay } = controllerFor(fixture);

    await controller.start(K3, "algy", "greedy");
    await controller.clickEdge([0, 1]);
    await controller.clickEdge([1, 2]);
    await controller.clickEdge([0, 2]);

    expect(replay.calls).toEqual(expectedCalls(fixture));
    expect(controller.terminal).toBe(true);
    expect(controller.total).toBe(3);
    expect(controller.total).toBe(fixture.server_total);
    for (const ev of controller.view!.edges) {
      expect(ev.status).toBe("queried");
    }
  });

  it("client-side no-ops never reach the server", async () => {
    const fixture = loadFixture("golden_k3_path.json");
    const { controller, replay } = controllerFor(fixture);

    await controller.start(K3, "algy", "order:0,1,2");
    await controller.clickEdge([0, 1]);
    // re-click: the view says queried, so the click is a toast, not a call
    const result = await controller.clickEdge([1, 0]);
    expect(result).toBeNull();
    expect(controller.toasts.length).toBe(1);
    await controller.clickEdge([1, 2]);
    // terminal board click is a silent no-op
    await controller.clickEdge([0, 2]);
    expect(replay.calls).toEqual(expectedCalls(fixture));
  });
});
