import type {
  AnswerResponse,
  ApiErrorBody,
  ConstructInfo,
  CreateSessionResponse,
  ViewPayload,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the exercise service; a fetch implementation can
 * be injected for tests. */
export class ExerciseApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async constructs(): Promise<ConstructInfo[]> {
    const payload = await this.request<{ constructs: ConstructInfo[] }>(
      "GET",
      "/constructs",
    );
    return payload.constructs;
  }

  createSession(
    text: string,
    priority: readonly string[] | null,
  ): Promise<CreateSessionResponse> {
    const body: Record<string, unknown> = { text };
    if (priority !== null) {
      body.construct_priority = [...priority];
    }
    return this.request<CreateSessionResponse>("POST", "/passages", body);
  }

  async fetchView(sessionId: string): Promise<ViewPayload> {
    const payload = await this.request<{ view: ViewPayload }>(
      "GET",
      `/sessions/${encodeURIComponent(sessionId)}`,
    );
    return payload.view;
  }

  submitAnswer(
    sessionId: string,
    itemId: string,
    choice: string,
  ): Promise<AnswerResponse> {
    const path =
      `/sessions/${encodeURIComponent(sessionId)}` +
      `/items/${encodeURIComponent(itemId)}/answer`;
    return this.request<AnswerResponse>("POST", path, { choice });
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    const payload: unknown = await response.json();
    if (!response.ok) {
      const error = (payload as ApiErrorBody).error ?? {
        code: "Unknown",
        message: `server returned status ${response.status}`,
      };
      throw new ApiError(response.status, error.code, error.message);
    }
    return payload as T;
  }
}
