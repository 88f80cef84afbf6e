/** View-state logic as pure functions.
 *
 * The rendered UI is a function of service responses plus this state.
 * Every transition returns a new state; navigation pushes the previous
 * screen onto a history stack so "back" always returns to it. Each
 * in-flight request carries a sequence number and a response is only
 * applied when its sequence matches the latest one issued for that
 * screen, so stale responses are discarded.
 */

import type {
  DialogItem,
  DishResponse,
  FlagItem,
  IngredientResponse,
  KBestResponse,
  TranslationItem,
} from "./api.js";

export type Screen =
  | "search"
  | "kbest"
  | "dish"
  | "ingredient"
  | "profile"
  | "dialog";

export interface ViewState {
  screen: Screen;
  query: string;
  kbest: TranslationItem[];
  oov: string[];
  selected: TranslationItem | null;
  showCosts: boolean;
  dish: DishResponse | null;
  ingredient: IngredientResponse | null;
  profileId: number | null;
  flags: FlagItem[];
  dialogs: DialogItem[];
  error: string | null;
  pending: boolean;
  seq: number;
  history: Screen[];
}

export const initialState: ViewState = {
  screen: "search",
  query: "",
  kbest: [],
  oov: [],
  selected: null,
  showCosts: false,
  dish: null,
  ingredient: null,
  profileId: null,
  flags: [],
  dialogs: [],
  error: null,
  pending: false,
  seq: 0,
  history: [],
};

function navigate(state: ViewState, screen: Screen): ViewState {
  if (screen === state.screen) return state;
  return { ...state, history: [...state.history, state.screen], screen };
}

/** Empty or whitespace-only input keeps submit disabled. */
export function canSubmit(state: ViewState): boolean {
  return state.query.trim().length > 0 && !state.pending;
}

export function setQuery(state: ViewState, query: string): ViewState {
  return { ...state, query };
}

/** Issue a search; the returned seq must accompany the response. */
export function submitSearch(state: ViewState): ViewState {
  if (!canSubmit(state)) return state;
  return { ...state, pending: true, error: null, seq: state.seq + 1 };
}

export function receiveKbest(
  state: ViewState,
  seq: number,
  response: KBestResponse,
): ViewState {
  if (seq !== state.seq) return state; // stale response
  return {
    ...navigate(state, "kbest"),
    pending: false,
    kbest: response.kbest,
    oov: response.oov,
    selected: null,
  };
}

export function toggleCosts(state: ViewState): ViewState {
  return { ...state, showCosts: !state.showCosts };
}

export function selectTranslation(
  state: ViewState,
  item: TranslationItem,
): ViewState {
  return { ...state, selected: item };
}

export function requestDetail(state: ViewState): ViewState {
  return { ...state, pending: true, error: null, seq: state.seq + 1 };
}

export function receiveDish(
  state: ViewState,
  seq: number,
  dish: DishResponse,
): ViewState {
  if (seq !== state.seq) return state;
  return { ...navigate(state, "dish"), pending: false, dish, flags: [], dialogs: [] };
}

export function receiveIngredient(
  state: ViewState,
  seq: number,
  ingredient: IngredientResponse,
): ViewState {
  if (seq !== state.seq) return state;
  return { ...navigate(state, "ingredient"), pending: false, ingredient };
}

export function openProfile(state: ViewState): ViewState {
  return navigate(state, "profile");
}

export function receiveProfile(state: ViewState, profileId: number): ViewState {
  return { ...state, profileId, flags: [], dialogs: [] };
}

export function receiveFlags(
  state: ViewState,
  seq: number,
  flags: FlagItem[],
): ViewState {
  if (seq !== state.seq) return state;
  return { ...state, pending: false, flags };
}

export function receiveDialogs(
  state: ViewState,
  seq: number,
  dialogs: DialogItem[],
): ViewState {
  if (seq !== state.seq) return state;
  return { ...navigate(state, "dialog"), pending: false, dialogs };
}

/** Any service failure becomes a visible banner with a retry. */
export function serviceError(
  state: ViewState,
  seq: number,
  message: string,
): ViewState {
  if (seq !== state.seq) return state;
  return { ...state, pending: false, error: message };
}

export function dismissError(state: ViewState): ViewState {
  return { ...state, error: null };
}

export function back(state: ViewState): ViewState {
  const history = [...state.history];
  const previous = history.pop();
  if (previous === undefined) return state;
  return { ...state, screen: previous, history, error: null, pending: false };
}

/** Badge names for the dish screen; no profile means no badges. */
export function flagBadges(state: ViewState): Map<string, FlagItem> {
  const badges = new Map<string, FlagItem>();
  if (state.profileId === null) return badges;
  for (const flag of state.flags) badges.set(flag.ingredient, flag);
  return badges;
}

/** The dialog entry point only shows when something is flagged. */
export function showDialogEntry(state: ViewState): boolean {
  return state.profileId !== null && state.flags.length > 0;
}

export function requiredIngredients(state: ViewState): string[] {
  return (state.dish?.ingredients ?? [])
    .filter((i) => !i.optional)
    .map((i) => i.name);
}

export function optionalIngredients(state: ViewState): string[] {
  return (state.dish?.ingredients ?? [])
    .filter((i) => i.optional)
    .map((i) => i.name);
}
