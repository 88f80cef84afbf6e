import { describe, expect, it } from "vitest";

import type { KBestResponse, TranslationItem } from "../src/api.js";
import * as S from "../src/state.js";

const item = (rank: number, text: string): TranslationItem => ({
  rank,
  text,
  cost: rank * 1.5,
  components: {},
});

const kbest: KBestResponse = {
  kbest: [item(1, "espresso with milk"), item(2, "cut coffee")],
  oov: [],
};

function searched(): { state: S.ViewState; seq: number } {
  let state = S.setQuery(S.initialState, "café cortado");
  state = S.submitSearch(state);
  return { state, seq: state.seq };
}

describe("search flow", () => {
  it("disables submit on empty or whitespace input", () => {
    expect(S.canSubmit(S.initialState)).toBe(false);
    expect(S.canSubmit(S.setQuery(S.initialState, "   "))).toBe(false);
    expect(S.canSubmit(S.setQuery(S.initialState, "pan"))).toBe(true);
  });

  it("ignores submit when disabled", () => {
    expect(S.submitSearch(S.initialState)).toBe(S.initialState);
  });

  it("renders k-best in rank order with costs hidden by default", () => {
    const { state, seq } = searched();
    const after = S.receiveKbest(state, seq, kbest);
    expect(after.screen).toBe("kbest");
    expect(after.kbest.map((i) => i.rank)).toEqual([1, 2]);
    expect(after.showCosts).toBe(false);
    expect(S.toggleCosts(after).showCosts).toBe(true);
  });

  it("discards stale responses by sequence number", () => {
    const { state, seq: staleSeq } = searched();
    // first answer lands, then the user searches again
    let s = S.receiveKbest(state, staleSeq, kbest);
    s = S.submitSearch(S.setQuery(s, "pan"));
    // a late duplicate of the first answer must be ignored
    const after = S.receiveKbest(s, staleSeq, kbest);
    expect(after).toBe(s);
    expect(after.pending).toBe(true);
  });

  it("surfaces service errors as a visible banner", () => {
    const { state, seq } = searched();
    const after = S.serviceError(state, seq, "service unreachable");
    expect(after.error).toBe("service unreachable");
    expect(after.pending).toBe(false);
    expect(S.dismissError(after).error).toBeNull();
  });
});

describe("navigation history", () => {
  it("back always returns to the prior screen", () => {
    const { state, seq } = searched();
    let s = S.receiveKbest(state, seq, kbest);
    s = S.requestDetail(s);
    s = S.receiveDish(s, s.seq, {
      name: "bread with tomato",
      image_id: 1,
      ingredients: [],
    });
    expect(s.screen).toBe("dish");
    s = S.back(s);
    expect(s.screen).toBe("kbest");
    s = S.back(s);
    expect(s.screen).toBe("search");
    expect(S.back(s)).toBe(s); // history exhausted
  });
});

describe("dish screen", () => {
  const dish = {
    name: "bread with tomato",
    image_id: 1,
    ingredients: [
      { name: "bread", optional: false, substitutes: [], image_id: 2 },
      { name: "garlic", optional: true, substitutes: [], image_id: 3 },
    ],
  };

  function onDish(): S.ViewState {
    let s = S.requestDetail(S.initialState);
    return S.receiveDish(s, s.seq, dish);
  }

  it("separates required and optional ingredients", () => {
    const s = onDish();
    expect(S.requiredIngredients(s)).toEqual(["bread"]);
    expect(S.optionalIngredients(s)).toEqual(["garlic"]);
  });

  it("shows no badges without a profile", () => {
    let s = onDish();
    s = S.receiveFlags(s, s.seq, [
      { ingredient: "garlic", optional: true, via_substitute: false },
    ]);
    expect(S.flagBadges(s).size).toBe(0);
    expect(S.showDialogEntry(s)).toBe(false);
  });

  it("shows badges and the dialog entry with a flagged profile", () => {
    let s = S.receiveProfile(onDish(), 7);
    s = S.receiveFlags(s, s.seq, [
      { ingredient: "garlic", optional: true, via_substitute: false },
    ]);
    expect(S.flagBadges(s).get("garlic")?.optional).toBe(true);
    expect(S.showDialogEntry(s)).toBe(true);
  });

  it("hides the dialog entry when nothing is flagged", () => {
    const s = S.receiveProfile(onDish(), 7);
    expect(S.showDialogEntry(s)).toBe(false);
  });
});

describe("purity", () => {
  it("never mutates the input state", () => {
    const frozen = Object.freeze({ ...S.initialState, query: "pan" });
    expect(() => S.submitSearch(frozen as S.ViewState)).not.toThrow();
    expect(frozen.seq).toBe(0);
  });
});
