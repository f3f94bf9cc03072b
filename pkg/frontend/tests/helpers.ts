import constructsJson from "./fixtures/constructs.json";
import errorTooLongJson from "./fixtures/error_too_long.json";
import passageCreatedJson from "./fixtures/passage_created.json";
import answerWrongJson from "./fixtures/answer_wrong.json";
import answerRightJson from "./fixtures/answer_right.json";
import viewAfterWrongJson from "./fixtures/view_after_wrong.json";
import viewAfterRightJson from "./fixtures/view_after_right.json";
import flowMetaJson from "./fixtures/flow_meta.json";

/** A captured service exchange: HTTP status plus the JSON body. */
export interface Fixture {
  status: number;
  body: Record<string, unknown>;
}

export interface FlowMeta {
  passage: string;
  priority: string[];
  itemId: string;
  sessionId: string;
  wrongChoice: string;
  rightChoice: string;
  firstConstruct: string;
  firstSentenceIndex: number;
}

const asFixture = (value: unknown): Fixture => value as Fixture;

export const fixtures = {
  constructs: asFixture(constructsJson),
  errorTooLong: asFixture(errorTooLongJson),
  passageCreated: asFixture(passageCreatedJson),
  answerWrong: asFixture(answerWrongJson),
  answerRight: asFixture(answerRightJson),
  viewAfterWrong: asFixture(viewAfterWrongJson),
  viewAfterRight: asFixture(viewAfterRightJson),
};

export const meta = flowMetaJson as unknown as FlowMeta;

export interface TrafficRecord {
  method: string;
  url: string;
  requestBody: unknown;
  status: number;
  responseBody: unknown;
}

/**
 * Replays responses captured from a live service run, keyed by method and
 * path (the answer route by submitted choice), while recording every
 * exchange so tests can audit exactly what went over the wire.
 */
export class FixtureServer {
  readonly traffic: TrafficRecord[] = [];
  failNextAnswer = false;
  forcePassageError = false;
  private answered: "none" | "wrong" | "right" = "none";

  readonly fetch = async (
    url: string,
    init?: RequestInit,
  ): Promise<Response> => {
    const method = init?.method ?? "GET";
    const requestBody =
      typeof init?.body === "string" ? JSON.parse(init.body) : undefined;
    const reply = this.route(method, url, requestBody);
    this.traffic.push({
      method,
      url,
      requestBody,
      status: reply.status,
      responseBody: reply.body,
    });
    return {
      ok: reply.status < 400,
      status: reply.status,
      json: async () => reply.body,
    } as unknown as Response;
  };

  private route(method: string, url: string, body: unknown): Fixture {
    if (method === "GET" && url === "/constructs") {
      return fixtures.constructs;
    }
    if (method === "POST" && url === "/passages") {
      if (this.forcePassageError) {
        return fixtures.errorTooLong;
      }
      const text = (body as { text?: string }).text ?? "";
      return [...text].length > 1000
        ? fixtures.errorTooLong
        : fixtures.passageCreated;
    }
    if (method === "POST" && url.endsWith("/answer")) {
      if (this.failNextAnswer) {
        this.failNextAnswer = false;
        return {
          status: 503,
          body: {
            error: {
              code: "ScoringUnavailable",
              message: "the scoring backend is temporarily offline",
            },
          },
        };
      }
      const choice = (body as { choice?: string }).choice;
      if (choice === meta.wrongChoice) {
        this.answered = "wrong";
        return fixtures.answerWrong;
      }
      this.answered = "right";
      return fixtures.answerRight;
    }
    if (method === "GET" && url.startsWith("/sessions/")) {
      if (this.answered === "right") {
        return fixtures.viewAfterRight;
      }
      if (this.answered === "wrong") {
        return fixtures.viewAfterWrong;
      }
      return {
        status: 200,
        body: { view: fixtures.passageCreated.body.view } as Record<
          string,
          unknown
        >,
      };
    }
    return {
      status: 404,
      body: {
        error: { code: "Unknown", message: `no fixture for ${method} ${url}` },
      },
    };
  }
}

/** Let queued promise reactions and re-renders settle. */
export async function flush(rounds = 6): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

/** Recursively collect every object key in a JSON-like payload. */
export function collectKeys(value: unknown, into: string[] = []): string[] {
  if (Array.isArray(value)) {
    for (const element of value) {
      collectKeys(element, into);
    }
  } else if (value !== null && typeof value === "object") {
    for (const [key, nested] of Object.entries(value)) {
      into.push(key);
      collectKeys(nested, into);
    }
  }
  return into;
}

interface SentenceLike {
  masked?: unknown;
  [key: string]: unknown;
}

/** Pull every still-masked sentence entry out of recorded response bodies. */
export function lockedEntries(traffic: TrafficRecord[]): SentenceLike[] {
  const found: SentenceLike[] = [];
  const walk = (value: unknown): void => {
    if (Array.isArray(value)) {
      value.forEach(walk);
      return;
    }
    if (value === null || typeof value !== "object") {
      return;
    }
    const record = value as SentenceLike;
    if (record.masked === true && typeof record.sentence_index === "number") {
      found.push(record);
    }
    Object.values(record).forEach(walk);
  };
  for (const exchange of traffic) {
    walk(exchange.responseBody);
  }
  return found;
}
