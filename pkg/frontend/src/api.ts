/** Typed client for the translation service's JSON API.
 *
 * All business logic (flagging, dialogs) lives server-side; this module
 * only shapes requests and responses. The fetch implementation is
 * injectable so tests can run without a server.
 */

export interface TranslationItem {
  rank: number;
  text: string;
  cost: number;
  components: Record<string, number>;
}

export interface KBestResponse {
  kbest: TranslationItem[];
  oov: string[];
}

export interface IngredientUse {
  name: string;
  optional: boolean;
  substitutes: string[];
  image_id: number | null;
}

export interface DishResponse {
  name: string;
  image_id: number | null;
  ingredients: IngredientUse[];
}

export interface IngredientResponse {
  name: string;
  image_id: number | null;
  dishes: string[];
}

export interface FlagItem {
  ingredient: string;
  optional: boolean;
  via_substitute: boolean;
}

export interface DialogItem {
  id: string;
  ingredient: string;
  question_source: string;
  question_target: string;
  answers: { source: string; target: string }[];
}

export class ServiceError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, init);
    } catch (err) {
      throw new ServiceError(0, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ServiceError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  translate(text: string, k?: number): Promise<KBestResponse> {
    return this.request<KBestResponse>("/translate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(k === undefined ? { text } : { text, k }),
    });
  }

  getDish(name: string): Promise<DishResponse> {
    return this.request<DishResponse>(`/dishes/${encodeURIComponent(name)}`);
  }

  getIngredient(name: string): Promise<IngredientResponse> {
    return this.request<IngredientResponse>(
      `/ingredients/${encodeURIComponent(name)}`,
    );
  }

  createProfile(
    conditions: string[],
    ingredients: string[],
  ): Promise<{ id: number }> {
    return this.request<{ id: number }>("/profiles", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ conditions, ingredients }),
    });
  }

  getFlags(dish: string, profile: number): Promise<{ flags: FlagItem[] }> {
    return this.request<{ flags: FlagItem[] }>(
      `/dishes/${encodeURIComponent(dish)}/flags?profile=${profile}`,
    );
  }

  getDialog(dish: string, profile: number): Promise<{ dialogs: DialogItem[] }> {
    return this.request<{ dialogs: DialogItem[] }>(
      `/dishes/${encodeURIComponent(dish)}/dialog?profile=${profile}`,
    );
  }

  imageUrl(imageId: number): string {
    return `${this.baseUrl}/images/${imageId}`;
  }
}
