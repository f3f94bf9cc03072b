import type { AnswerResponse, SentenceEntry, ViewPayload } from "./types";

export interface ItemFeedback {
  kind: "retry" | "success";
  message: string;
  attempts: number;
}

/** Client-side session state. It mirrors the server's masked view after
 * every response and holds only presentation extras (which choice panel is
 * open, per-item feedback, in-flight guards). Correctness is decided solely
 * by the server: nothing answer-identifying is ever stored or inferred. */
export class SessionState {
  entries: SentenceEntry[] = [];
  activeItemId: string | null = null;
  readonly feedback = new Map<string, ItemFeedback>();
  private readonly pending = new Set<string>();

  constructor(readonly sessionId: string) {}

  /** Replace the mirrored view wholesale with what the server sent. */
  applyView(view: ViewPayload): void {
    this.entries = view.sentences.map((entry) => ({ ...entry }));
    if (
      this.activeItemId !== null &&
      !this.entries.some(
        (entry) => entry.masked && entry.item_id === this.activeItemId,
      )
    ) {
      this.activeItemId = null;
    }
  }

  applyAnswer(itemId: string, response: AnswerResponse): void {
    this.feedback.set(itemId, {
      kind: response.correct ? "success" : "retry",
      message: response.feedback,
      attempts: response.attempts,
    });
  }

  /** Returns false when an answer for this item is already in flight. */
  beginAnswer(itemId: string): boolean {
    if (this.pending.has(itemId)) {
      return false;
    }
    this.pending.add(itemId);
    return true;
  }

  endAnswer(itemId: string): void {
    this.pending.delete(itemId);
  }

  entryForItem(itemId: string): SentenceEntry | undefined {
    return this.entries.find((entry) => entry.item_id === itemId);
  }
}
