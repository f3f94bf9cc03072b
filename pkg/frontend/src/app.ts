import { ApiError, ExerciseApi } from "./api";
import { moveItem } from "./reorder";
import { SessionState } from "./state";
import type { ConstructInfo, SentenceEntry } from "./types";

export const PASSAGE_CHAR_LIMIT = 1000;
const BLANK_MARKER = "___";
const TOAST_LIFETIME_MS = 4000;

/** Client-side mirror of the server's intake rules; returns an error
 * message to show inline, or null when the passage may be submitted. */
export function validatePassage(text: string): string | null {
  if (text.trim().length === 0) {
    return "Paste a passage to practice with.";
  }
  if ([...text].length > PASSAGE_CHAR_LIMIT) {
    return `Passages are limited to ${PASSAGE_CHAR_LIMIT} characters.`;
  }
  return null;
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    return `${error.code}: ${error.message}`;
  }
  return "The exercise service could not be reached.";
}

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  testId?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (testId) {
    node.dataset.testid = testId;
  }
  return node;
}

/** Single-page practice client: a submit screen with drag-to-reorder
 * construct priority boxes, and a reading screen with color-coded masked
 * sentences, click-to-reveal choices, and answer feedback. */
export class PracticeApp {
  private readonly constructs = new Map<string, ConstructInfo>();
  private readonly screenHost: HTMLElement;
  private readonly toastHost: HTMLElement;
  private boxOrder: string[] = [];
  private dragFrom: number | null = null;
  private state: SessionState | null = null;
  private lastSolvedItemId: string | null = null;
  private passageText = "";

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ExerciseApi,
  ) {
    // toasts live outside the screen area so re-renders don't clear them
    this.screenHost = element("div", "screen-host");
    this.toastHost = element("div", "toasts", "toasts");
    this.root.textContent = "";
    this.root.append(this.screenHost, this.toastHost);
  }

  async start(): Promise<void> {
    try {
      const catalog = await this.api.constructs();
      for (const info of catalog) {
        this.constructs.set(info.code, info);
      }
      this.boxOrder = catalog.map((info) => info.code);
      this.renderSubmitScreen();
    } catch (error) {
      this.screenHost.textContent = "";
      const failure = element("p", "load-error", "load-error");
      failure.textContent = describeError(error);
      this.screenHost.append(failure);
    }
  }

  get priorityOrder(): readonly string[] {
    return this.boxOrder;
  }

  // -- submit screen -------------------------------------------------------

  private renderSubmitScreen(): void {
    this.screenHost.textContent = "";
    const screen = element("section", "submit-screen", "submit-screen");

    const heading = element("h1");
    heading.textContent = "Grammar practice";
    const intro = element("p", "intro");
    intro.textContent =
      "Paste a passage, order the constructs you want to practice, " +
      "and solve the blanks.";

    const textarea = element("textarea", "passage-input", "passage-input");
    textarea.placeholder = "Paste a reading passage (up to 1000 characters)…";
    textarea.value = this.passageText;
    const counter = element("div", "char-counter", "char-counter");
    const updateCounter = () => {
      counter.textContent =
        `${[...textarea.value].length} / ${PASSAGE_CHAR_LIMIT}`;
    };
    updateCounter();
    textarea.addEventListener("input", () => {
      this.passageText = textarea.value;
      updateCounter();
    });

    const inlineError = element("div", "inline-error", "inline-error");

    const boxesLabel = element("p", "boxes-label");
    boxesLabel.textContent =
      "Construct priority — drag the numbered boxes to reorder:";
    const boxes = element("ol", "construct-boxes", "construct-boxes");
    this.renderBoxes(boxes);

    const submit = element("button", "submit-button", "submit-button");
    submit.textContent = "Create exercise";
    submit.addEventListener("click", () => {
      void this.onSubmit(textarea.value, inlineError);
    });

    screen.append(
      heading, intro, textarea, counter, inlineError,
      boxesLabel, boxes, submit,
    );
    this.screenHost.append(screen);
  }

  private renderBoxes(container: HTMLOListElement): void {
    container.textContent = "";
    this.boxOrder.forEach((code, index) => {
      const info = this.constructs.get(code);
      const box = element("li", "construct-box", `box-${code}`);
      box.draggable = true;
      box.title = info?.name ?? code;
      box.style.setProperty("--construct-color", info?.color ?? "#888");
      const position = element("span", "box-position");
      position.textContent = `${index + 1}.`;
      const label = element("span", "box-code");
      label.textContent = code;
      box.append(position, label);

      box.addEventListener("dragstart", () => {
        this.dragFrom = index;
      });
      box.addEventListener("dragover", (event) => {
        event.preventDefault();
      });
      box.addEventListener("drop", (event) => {
        event.preventDefault();
        if (this.dragFrom !== null) {
          this.boxOrder = moveItem(this.boxOrder, this.dragFrom, index);
          this.dragFrom = null;
          this.renderBoxes(container);
        }
      });
      box.addEventListener("dragend", () => {
        this.dragFrom = null;
      });
      container.append(box);
    });
  }

  private async onSubmit(
    text: string,
    inlineError: HTMLElement,
  ): Promise<void> {
    const problem = validatePassage(text);
    if (problem !== null) {
      inlineError.textContent = problem; // rejected before any network call
      return;
    }
    inlineError.textContent = "";
    try {
      const created = await this.api.createSession(text, this.boxOrder);
      this.state = new SessionState(created.session_id);
      this.state.applyView(created.view);
      this.lastSolvedItemId = null;
      this.renderReadingScreen();
    } catch (error) {
      if (
        error instanceof ApiError &&
        (error.code === "PassageTooLong" || error.code === "EmptyPassage")
      ) {
        inlineError.textContent = error.message;
      } else {
        this.showToast(describeError(error));
      }
    }
  }

  // -- reading screen ------------------------------------------------------

  private renderReadingScreen(): void {
    const state = this.state;
    if (state === null) {
      return;
    }
    this.screenHost.textContent = "";
    const screen = element("section", "reading-screen", "reading-screen");

    const bar = element("header", "top-bar");
    const legend = element("div", "legend", "legend");
    for (const info of this.constructs.values()) {
      const chip = element("span", "legend-chip", `legend-${info.code}`);
      chip.textContent = info.code;
      chip.title = info.name; // full name on hover
      chip.style.setProperty("--construct-color", info.color);
      legend.append(chip);
    }
    const restart = element("button", "new-passage", "new-passage");
    restart.textContent = "New passage";
    restart.addEventListener("click", () => {
      this.state = null;
      this.renderSubmitScreen();
    });
    bar.append(legend, restart);

    const sentences = element("ol", "sentences", "sentences");
    for (const entry of state.entries) {
      sentences.append(this.renderSentence(entry, state));
    }

    screen.append(bar, sentences);
    this.screenHost.append(screen);
  }

  private renderSentence(
    entry: SentenceEntry,
    state: SessionState,
  ): HTMLElement {
    const node = element(
      "li", "sentence", `sentence-${entry.sentence_index}`,
    );

    if (entry.hidden) {
      node.classList.add("hidden-sentence");
      node.textContent = "· · ·";
      node.setAttribute("aria-label", "hidden until earlier blanks are solved");
      return node;
    }

    if (!entry.masked) {
      node.classList.add(entry.solved ? "solved" : "plain");
      if (entry.solved && entry.item_id === this.lastSolvedItemId) {
        node.classList.add("just-solved");
      }
      node.append(document.createTextNode(entry.text));
      const note = entry.item_id !== undefined
        ? state.feedback.get(entry.item_id)
        : undefined;
      if (entry.solved && note?.kind === "success") {
        const praise = element("span", "praise", "praise");
        praise.textContent = ` ${note.message}`;
        node.append(praise);
      }
      return node;
    }

    node.classList.add("masked");
    const info = entry.construct_code
      ? this.constructs.get(entry.construct_code)
      : undefined;
    const color = info?.color ?? "#888";
    node.style.setProperty("--construct-color", color);
    if (entry.construct_code) {
      node.dataset.construct = entry.construct_code;
    }

    const textLine = element("span", "masked-text");
    const pieces = entry.text.split(BLANK_MARKER);
    pieces.forEach((piece, index) => {
      textLine.append(document.createTextNode(piece));
      if (index < pieces.length - 1) {
        const blank = element("span", "blank");
        blank.textContent = BLANK_MARKER;
        blank.title = info?.name ?? "";
        textLine.append(blank);
      }
    });
    node.append(textLine);
    node.addEventListener("click", () => {
      if (entry.item_id === undefined) {
        return;
      }
      state.activeItemId =
        state.activeItemId === entry.item_id ? null : entry.item_id;
      this.renderReadingScreen();
    });

    if (entry.item_id !== undefined && state.activeItemId === entry.item_id) {
      node.append(this.renderChoicesPanel(entry, state));
    }
    return node;
  }

  private renderChoicesPanel(
    entry: SentenceEntry,
    state: SessionState,
  ): HTMLElement {
    const panel = element("div", "choices-panel", "choices-panel");
    panel.addEventListener("click", (event) => {
      event.stopPropagation(); // keep the sentence toggle closed over clicks
    });

    const list = element("div", "choices");
    // choices render exactly in the order the server presented them
    (entry.choices ?? []).forEach((choice, index) => {
      const button = element("button", "choice", `choice-${index}`);
      button.textContent = choice;
      button.addEventListener("click", () => {
        void this.onChoiceClicked(entry.item_id as string, choice);
      });
      list.append(button);
    });
    panel.append(list);

    const note = state.feedback.get(entry.item_id ?? "");
    if (note !== undefined) {
      const feedback = element(
        "div", `item-feedback ${note.kind}`, "item-feedback",
      );
      feedback.textContent = note.message;
      panel.append(feedback);
    }
    if (entry.attempts !== undefined && entry.attempts > 0) {
      const attempts = element("div", "attempts", "attempts");
      attempts.textContent = `Attempts: ${entry.attempts}`;
      panel.append(attempts);
    }
    return panel;
  }

  private async onChoiceClicked(itemId: string, choice: string): Promise<void> {
    const state = this.state;
    if (state === null || !state.beginAnswer(itemId)) {
      return; // at most one in-flight answer per item
    }
    try {
      const outcome = await this.api.submitAnswer(
        state.sessionId, itemId, choice,
      );
      state.applyAnswer(itemId, outcome);
      if (outcome.correct) {
        this.lastSolvedItemId = itemId;
        state.activeItemId = null;
      }
      // re-mirror the authoritative view after every answer
      state.applyView(await this.api.fetchView(state.sessionId));
    } catch (error) {
      this.showToast(describeError(error));
    } finally {
      state.endAnswer(itemId);
      this.renderReadingScreen();
    }
  }

  // -- toasts ---------------------------------------------------------------

  private showToast(message: string): void {
    const toast = element("div", "toast", "toast");
    toast.textContent = message;
    this.toastHost.append(toast);
    setTimeout(() => toast.remove(), TOAST_LIFETIME_MS);
  }
}
