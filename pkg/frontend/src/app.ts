/** Browser entry point: wires the pure state module to the DOM.
 *
 * Rendering is a single function of the current ViewState, mirroring a
 * small three-pane mobile flow: search box, result list, detail pane.
 */

import { ApiClient, ServiceError } from "./api.js";
import * as S from "./state.js";

const baseUrl =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8000";
const api = new ApiClient(baseUrl);

let state = S.initialState;

function update(next: S.ViewState): void {
  state = next;
  render();
}

async function guarded(seq: number, work: () => Promise<S.ViewState>) {
  try {
    update(await work());
  } catch (err) {
    const message =
      err instanceof ServiceError ? err.message : "service unreachable";
    update(S.serviceError(state, seq, message));
  }
}

function doSearch(): void {
  const next = S.submitSearch(state);
  if (next === state) return;
  update(next);
  const seq = next.seq;
  void guarded(seq, async () => {
    const response = await api.translate(state.query);
    return S.receiveKbest(state, seq, response);
  });
}

function openDish(name: string): void {
  const next = S.requestDetail(state);
  update(next);
  const seq = next.seq;
  void guarded(seq, async () => {
    const dish = await api.getDish(name);
    let after = S.receiveDish(state, seq, dish);
    if (after.profileId !== null) {
      const { flags } = await api.getFlags(name, after.profileId);
      after = S.receiveFlags(after, seq, flags);
    }
    return after;
  });
}

function openIngredient(name: string): void {
  const next = S.requestDetail(state);
  update(next);
  const seq = next.seq;
  void guarded(seq, async () => {
    const ingredient = await api.getIngredient(name);
    return S.receiveIngredient(state, seq, ingredient);
  });
}

function openDialog(): void {
  const dish = state.dish;
  if (!dish || state.profileId === null) return;
  const next = S.requestDetail(state);
  update(next);
  const seq = next.seq;
  void guarded(seq, async () => {
    const { dialogs } = await api.getDialog(dish.name, state.profileId!);
    return S.receiveDialogs(state, seq, dialogs);
  });
}

function createProfile(ingredients: string[]): void {
  void guarded(state.seq, async () => {
    const { id } = await api.createProfile([], ingredients);
    return S.receiveProfile(state, id);
  });
}

function el(tag: string, text?: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (className) node.className = className;
  return node;
}

function render(): void {
  const root = document.getElementById("app");
  if (!root) return;
  root.replaceChildren();

  if (state.error !== null) {
    const banner = el("div", state.error, "error-banner");
    const retry = el("button", "Retry");
    retry.onclick = () => {
      update(S.dismissError(state));
      doSearch();
    };
    banner.appendChild(retry);
    root.appendChild(banner);
  }

  if (state.history.length > 0) {
    const backButton = el("button", "Back", "back");
    backButton.onclick = () => update(S.back(state));
    root.appendChild(backButton);
  }

  switch (state.screen) {
    case "search":
      renderSearch(root);
      break;
    case "kbest":
      renderKbest(root);
      break;
    case "dish":
      renderDish(root);
      break;
    case "ingredient":
      renderIngredient(root);
      break;
    case "profile":
      renderProfile(root);
      break;
    case "dialog":
      renderDialog(root);
      break;
  }
}

function renderSearch(root: HTMLElement): void {
  const input = document.createElement("input");
  input.value = state.query;
  input.placeholder = "Menu phrase…";
  input.oninput = () => update(S.setQuery(state, input.value));
  const submit = el("button", "Translate") as HTMLButtonElement;
  submit.disabled = !S.canSubmit(state);
  submit.onclick = doSearch;
  const profileLink = el("button", "Diet profile");
  profileLink.onclick = () => update(S.openProfile(state));
  root.append(input, submit, profileLink);
}

function renderKbest(root: HTMLElement): void {
  const list = el("ol", undefined, "kbest");
  for (const item of state.kbest) {
    const entry = el("li", item.text);
    if (state.showCosts) {
      entry.appendChild(el("span", item.cost.toFixed(3), "cost"));
    }
    entry.onclick = () => {
      update(S.selectTranslation(state, item));
      openDish(item.text);
    };
    list.appendChild(entry);
  }
  const costs = el("button", state.showCosts ? "Hide costs" : "Show costs");
  costs.onclick = () => update(S.toggleCosts(state));
  root.append(list, costs);
  if (state.oov.length > 0) {
    root.appendChild(el("p", `Untranslated: ${state.oov.join(", ")}`, "oov"));
  }
}

function renderDish(root: HTMLElement): void {
  const dish = state.dish;
  if (!dish) return;
  root.appendChild(el("h2", dish.name));
  if (dish.image_id !== null) {
    const img = document.createElement("img");
    img.src = api.imageUrl(dish.image_id);
    img.alt = dish.name;
    root.appendChild(img);
  }
  const badges = S.flagBadges(state);
  for (const [title, names] of [
    ["Required", S.requiredIngredients(state)],
    ["Optional", S.optionalIngredients(state)],
  ] as const) {
    if (names.length === 0) continue;
    root.appendChild(el("h3", title));
    const list = el("ul");
    for (const name of names) {
      const entry = el("li", name);
      const badge = badges.get(name);
      if (badge) {
        entry.appendChild(
          el("span", "⚑", badge.optional ? "badge-blue" : "badge-red"),
        );
      }
      entry.onclick = () => openIngredient(name);
      list.appendChild(entry);
    }
    root.appendChild(list);
  }
  if (S.showDialogEntry(state)) {
    const dialog = el("button", "Ask the waiter");
    dialog.onclick = openDialog;
    root.appendChild(dialog);
  }
}

function renderIngredient(root: HTMLElement): void {
  const ingredient = state.ingredient;
  if (!ingredient) return;
  root.appendChild(el("h2", ingredient.name));
  root.appendChild(el("h3", "Found in"));
  const list = el("ul");
  for (const name of ingredient.dishes) {
    const entry = el("li", name);
    entry.onclick = () => openDish(name);
    list.appendChild(entry);
  }
  root.appendChild(list);
}

function renderProfile(root: HTMLElement): void {
  root.appendChild(el("h2", "Diet profile"));
  const input = document.createElement("input");
  input.placeholder = "Ingredients to avoid, comma separated";
  const save = el("button", "Save");
  save.onclick = () =>
    createProfile(
      input.value
        .split(",")
        .map((part) => part.trim())
        .filter((part) => part.length > 0),
    );
  root.append(input, save);
  if (state.profileId !== null) {
    root.appendChild(el("p", `Active profile #${state.profileId}`));
  }
}

function renderDialog(root: HTMLElement): void {
  root.appendChild(el("h2", "Ask the waiter"));
  for (const dialog of state.dialogs) {
    const block = el("div", undefined, "dialog");
    block.appendChild(el("p", dialog.question_target, "question-target"));
    block.appendChild(el("p", dialog.question_source, "question-source"));
    const answers = el("ul");
    for (const answer of dialog.answers) {
      const entry = el("li", `${answer.target} (shown as: ${answer.source})`);
      answers.appendChild(entry);
    }
    block.appendChild(answers);
    root.appendChild(block);
  }
}

render();
