/** Payload shapes of the exercise service HTTP API. */

export interface ConstructInfo {
  code: string;
  name: string;
  family: string;
  color: string;
}

/** One sentence of the masked view. Locked sentences carry the blanked
 * text and the choice list; the server never sends answer data. */
export interface SentenceEntry {
  sentence_index: number;
  masked: boolean;
  hidden: boolean;
  text: string;
  construct_code?: string;
  item_id?: string;
  choices?: string[];
  attempts?: number;
  solved?: boolean;
}

export interface ViewPayload {
  session_id: string;
  sentences: SentenceEntry[];
}

export interface CreateSessionResponse {
  session_id: string;
  view: ViewPayload;
}

export interface AnswerResponse {
  correct: boolean;
  attempts: number;
  feedback: string;
  unmasked_text?: string;
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}
