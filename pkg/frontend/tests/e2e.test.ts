/** End-to-end flows against the real HTTP service.
 *
 * Spawns the Python CLI's serve command over a freshly built fixture
 * (sample corpus + sample menu store) and drives the API client and the
 * view-state module through search -> kbest -> dish -> flags -> dialog.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ServiceError } from "../src/api.js";
import * as S from "../src/state.js";

const PORT = 8765 + (process.pid % 100);
const BASE = `http://127.0.0.1:${PORT}`;

let fixtureDir: string;
let server: ChildProcess;
const api = new ApiClient(BASE);

async function waitForService(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      const response = await fetch(`${BASE}/translate`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ text: "pan" }),
      });
      if (response.ok) return;
    } catch {
      /* not up yet */
    }
    if (Date.now() > deadline) throw new Error("service did not come up");
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
}

beforeAll(async () => {
  fixtureDir = mkdtempSync(join(tmpdir(), "menumt-e2e-"));
  const built = spawnSync(
    "python3",
    [join(__dirname, "make_fixture.py"), fixtureDir],
    { encoding: "utf-8" },
  );
  if (built.status !== 0) {
    throw new Error(`fixture build failed: ${built.stderr}`);
  }
  server = spawn("python3", [
    "-m",
    "menumt.cli",
    "serve",
    "--build",
    join(fixtureDir, "build"),
    "--store",
    join(fixtureDir, "menu.db"),
    "--port",
    String(PORT),
  ]);
  await waitForService();
}, 60000);

afterAll(() => {
  server?.kill();
  if (fixtureDir) rmSync(fixtureDir, { recursive: true, force: true });
});

describe("search flow", () => {
  it("returns a k-best list headed by the one-to-one translation", async () => {
    let state = S.setQuery(S.initialState, "café cortado");
    state = S.submitSearch(state);
    const response = await api.translate(state.query);
    state = S.receiveKbest(state, state.seq, response);
    expect(state.screen).toBe("kbest");
    expect(state.kbest[0]?.text).toBe("espresso with milk");
    expect(state.kbest.map((i) => i.rank)).toEqual(
      state.kbest.map((_, i) => i + 1),
    );
    expect(state.showCosts).toBe(false);
  });

  it("keeps submit disabled for empty input and never calls the service", () => {
    expect(S.canSubmit(S.initialState)).toBe(false);
    expect(S.submitSearch(S.initialState)).toBe(S.initialState);
  });

  it("surfaces a 400 from the service as an error state", async () => {
    let state = S.setQuery(S.initialState, "x");
    state = S.submitSearch(state);
    const err = await api.translate("   ").catch((e) => e as ServiceError);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).status).toBe(400);
    state = S.serviceError(state, state.seq, (err as ServiceError).message);
    expect(state.error).toBeTruthy();
    expect(state.pending).toBe(false);
  });
});

describe("dish flow", () => {
  it("shows required and optional groups for a fixture dish", async () => {
    let state = S.requestDetail(S.initialState);
    const dish = await api.getDish("bread with tomato");
    state = S.receiveDish(state, state.seq, dish);
    expect(state.screen).toBe("dish");
    expect(S.requiredIngredients(state)).toEqual([
      "bread",
      "tomato",
      "olive oil",
      "salt",
    ]);
    expect(S.optionalIngredients(state)).toEqual(["garlic"]);
    expect(dish.ingredients[0]?.substitutes).toEqual(["toasted bread"]);
  });

  it("serves the dish image referenced by the response", async () => {
    const dish = await api.getDish("bread with tomato");
    expect(dish.image_id).not.toBeNull();
    const image = await fetch(api.imageUrl(dish.image_id!));
    expect(image.status).toBe(200);
  });

  it("navigates to an ingredient and lists the dishes containing it", async () => {
    let state = S.requestDetail(S.initialState);
    state = S.receiveDish(state, state.seq, await api.getDish("tomato salad"));
    state = S.requestDetail(state);
    const ingredient = await api.getIngredient("tomato");
    state = S.receiveIngredient(state, state.seq, ingredient);
    expect(state.screen).toBe("ingredient");
    expect(state.ingredient?.dishes).toEqual([
      "bread with tomato",
      "tomato salad",
    ]);
    state = S.back(state);
    expect(state.screen).toBe("dish");
  });

  it("404s on unknown dishes", async () => {
    const err = await api.getDish("nope").catch((e) => e as ServiceError);
    expect((err as ServiceError).status).toBe(404);
  });
});

describe("flags and dialog flow", () => {
  it("flags a dish through a condition-based profile and opens the dialog", async () => {
    const { id } = await api.createProfile(["allium-free"], ["tuna"]);
    let state = S.receiveProfile(S.initialState, id);

    state = S.requestDetail(state);
    state = S.receiveDish(
      state,
      state.seq,
      await api.getDish("bread with tomato"),
    );
    const { flags } = await api.getFlags("bread with tomato", id);
    state = S.receiveFlags(state, state.seq, flags);
    expect(S.flagBadges(state).get("garlic")).toMatchObject({
      optional: true,
      via_substitute: false,
    });
    expect(S.showDialogEntry(state)).toBe(true);

    state = S.requestDetail(state);
    const { dialogs } = await api.getDialog("bread with tomato", id);
    state = S.receiveDialogs(state, state.seq, dialogs);
    expect(state.screen).toBe("dialog");
    expect(dialogs.length).toBeGreaterThan(0);
    for (const dialog of dialogs) {
      expect(dialog.ingredient).toBe("garlic");
      expect(dialog.question_source).toBeTruthy();
      expect(dialog.question_target).toBeTruthy();
      expect(dialog.answers.length).toBeGreaterThanOrEqual(3);
    }
  });

  it("shows no flags for a clean dish and hides the dialog entry", async () => {
    const { id } = await api.createProfile(["allium-free"], []);
    let state = S.receiveProfile(S.initialState, id);
    state = S.requestDetail(state);
    state = S.receiveDish(state, state.seq, await api.getDish("tomato salad"));
    const { flags } = await api.getFlags("tomato salad", id);
    state = S.receiveFlags(state, state.seq, flags);
    expect(flags).toEqual([]);
    expect(S.showDialogEntry(state)).toBe(false);
  });

  it("rejects an unknown profile with a 400", async () => {
    const err = await api
      .getFlags("tomato salad", 999999)
      .catch((e) => e as ServiceError);
    expect((err as ServiceError).status).toBe(400);
  });
});
