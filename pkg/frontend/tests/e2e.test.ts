import { beforeEach, describe, expect, it } from "vitest";

import { ExerciseApi } from "../src/api";
import { PracticeApp } from "../src/app";
import type { ViewPayload } from "../src/types";
import {
  collectKeys,
  fixtures,
  FixtureServer,
  flush,
  lockedEntries,
  meta,
} from "./helpers";

const createdView = () =>
  (fixtures.passageCreated.body as { view: ViewPayload }).view;
const solvedView = () =>
  (fixtures.viewAfterRight.body as { view: ViewPayload }).view;
const catalogEntries = () =>
  (fixtures.constructs.body as {
    constructs: Array<{ code: string; name: string; color: string }>;
  }).constructs;

const wrongFeedback = fixtures.answerWrong.body.feedback as string;
const rightFeedback = fixtures.answerRight.body.feedback as string;

function q<T extends HTMLElement = HTMLElement>(testId: string): T {
  const node = document.querySelector<T>(`[data-testid='${testId}']`);
  expect(node, `expected element [data-testid=${testId}]`).not.toBeNull();
  return node as T;
}

function absent(testId: string): void {
  expect(document.querySelector(`[data-testid='${testId}']`)).toBeNull();
}

async function mountApp(server: FixtureServer): Promise<PracticeApp> {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.querySelector<HTMLElement>("#app")!;
  const app = new PracticeApp(root, new ExerciseApi("", server.fetch));
  await app.start();
  await flush();
  return app;
}

function setPassage(text: string): void {
  const input = q<HTMLTextAreaElement>("passage-input");
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

function boxCodes(): string[] {
  return [...document.querySelectorAll(".construct-box .box-code")].map(
    (node) => node.textContent ?? "",
  );
}

function dragBox(fromCode: string, toCode: string): void {
  q(`box-${fromCode}`).dispatchEvent(
    new Event("dragstart", { bubbles: true }),
  );
  q(`box-${toCode}`).dispatchEvent(
    new Event("dragover", { bubbles: true, cancelable: true }),
  );
  q(`box-${toCode}`).dispatchEvent(
    new Event("drop", { bubbles: true, cancelable: true }),
  );
}

function choiceButtons(): HTMLButtonElement[] {
  return [...document.querySelectorAll<HTMLButtonElement>("button.choice")];
}

function clickChoice(label: string): void {
  const button = choiceButtons().find((node) => node.textContent === label);
  expect(button, `expected a choice button labelled "${label}"`).toBeDefined();
  button!.click();
}

function answerPosts(server: FixtureServer) {
  return server.traffic.filter(
    (exchange) =>
      exchange.method === "POST" && exchange.url.endsWith("/answer"),
  );
}

/** Drive the full happy path: submit, reprioritise, miss once, then solve. */
async function runFullFlow(server: FixtureServer): Promise<void> {
  await mountApp(server);
  setPassage(meta.passage);
  dragBox("PRP", "ART");
  q("submit-button").click();
  await flush();
  q(`sentence-${meta.firstSentenceIndex}`).click();
  clickChoice(meta.wrongChoice);
  await flush();
  clickChoice(meta.rightChoice);
  await flush();
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("practice flow end to end", () => {
  it("walks submit → reorder → wrong answer → correct answer", async () => {
    const server = new FixtureServer();
    await mountApp(server);

    // -- submit screen ----------------------------------------------------
    q("submit-screen");
    expect(boxCodes()).toEqual(catalogEntries().map((entry) => entry.code));
    expect(server.traffic.map((t) => `${t.method} ${t.url}`)).toEqual([
      "GET /constructs",
    ]);

    // an oversized passage is rejected inline before any network call
    const oversized = "x".repeat(1001);
    setPassage(oversized);
    expect(q("char-counter").textContent).toBe("1001 / 1000");
    q("submit-button").click();
    await flush();
    expect(q("inline-error").textContent).toContain("1000");
    expect(server.traffic.length).toBe(1);

    // an empty passage is likewise rejected without network traffic
    setPassage("   ");
    q("submit-button").click();
    await flush();
    expect(q("inline-error").textContent).not.toBe("");
    expect(server.traffic.length).toBe(1);

    // -- drag PRP ahead of ART (pure UI state, no network) -----------------
    setPassage(meta.passage);
    const before = boxCodes();
    expect(before.indexOf("PRP")).toBeGreaterThan(before.indexOf("ART"));
    dragBox("PRP", "ART");
    const after = boxCodes();
    expect(after.slice(0, 3)).toEqual(["CMA", "PRP", "ART"]);
    expect(after.indexOf("PRP")).toBeLessThan(after.indexOf("ART"));
    expect([...after].sort()).toEqual([...before].sort());
    expect(server.traffic.length).toBe(1); // dragging never talks to the server

    // -- submit: the request body reflects the dragged order ---------------
    q("submit-button").click();
    await flush();
    const createReq = server.traffic.find(
      (t) => t.method === "POST" && t.url === "/passages",
    );
    expect(createReq).toBeDefined();
    const body = createReq!.requestBody as {
      text: string;
      construct_priority: string[];
    };
    expect(body.text).toBe(meta.passage);
    expect(body.construct_priority).toEqual(meta.priority);
    expect(body.construct_priority.indexOf("PRP")).toBeLessThan(
      body.construct_priority.indexOf("ART"),
    );

    // -- reading screen mirrors the masked view ----------------------------
    q("reading-screen");
    const maskedEntry = createdView().sentences[meta.firstSentenceIndex]!;
    const sentence = q(`sentence-${meta.firstSentenceIndex}`);
    expect(sentence.classList.contains("masked")).toBe(true);
    expect(sentence.dataset.construct).toBe(meta.firstConstruct);
    expect(sentence.textContent).toContain("___");
    expect(sentence.textContent).toContain(
      maskedEntry.text.split("___")[0] ?? "",
    );

    // the sentence border colour comes from the construct catalog
    const catalogColor = catalogEntries().find(
      (entry) => entry.code === meta.firstConstruct,
    )!.color;
    expect(sentence.style.getPropertyValue("--construct-color")).toBe(
      catalogColor,
    );
    q(`legend-${meta.firstConstruct}`);

    // unmasked sentences render as plain text without choices
    const plain = q("sentence-1");
    expect(plain.classList.contains("plain")).toBe(true);
    expect(plain.textContent).toBe(createdView().sentences[1]!.text);
    absent("choices-panel");

    // -- click to reveal: choices appear in the server's order -------------
    sentence.click();
    q("choices-panel");
    expect(choiceButtons().map((node) => node.textContent)).toEqual(
      maskedEntry.choices,
    );

    // -- wrong answer: retry feedback, still masked -------------------------
    clickChoice(meta.wrongChoice);
    clickChoice(meta.wrongChoice); // second click while in flight is ignored
    await flush();
    expect(answerPosts(server).length).toBe(1);
    expect(q("item-feedback").textContent).toBe(wrongFeedback);
    expect(q("item-feedback").classList.contains("retry")).toBe(true);
    expect(q("attempts").textContent).toBe("Attempts: 1");
    const stillMasked = q(`sentence-${meta.firstSentenceIndex}`);
    expect(stillMasked.classList.contains("masked")).toBe(true);
    expect(stillMasked.textContent).toContain("___");
    // the panel stays open for another try, same order as before
    expect(choiceButtons().map((node) => node.textContent)).toEqual(
      maskedEntry.choices,
    );

    // -- correct answer: sentence unmasks with encouragement ----------------
    clickChoice(meta.rightChoice);
    await flush();
    expect(answerPosts(server).length).toBe(2);
    const solved = q(`sentence-${meta.firstSentenceIndex}`);
    expect(solved.classList.contains("solved")).toBe(true);
    expect(solved.classList.contains("just-solved")).toBe(true);
    expect(solved.textContent).toContain(
      solvedView().sentences[meta.firstSentenceIndex]!.text,
    );
    expect(solved.textContent).not.toContain("___");
    expect(q("praise").textContent).toContain(rightFeedback);
    absent("choices-panel");

    // clicking a solved sentence never reopens a panel
    solved.click();
    await flush();
    absent("choices-panel");

    // returning to the submit screen keeps the dragged priority
    q("new-passage").click();
    expect(boxCodes().slice(0, 3)).toEqual(["CMA", "PRP", "ART"]);
  });

  it("shows a server-rejected passage inline rather than as a toast", async () => {
    const server = new FixtureServer();
    server.forcePassageError = true;
    await mountApp(server);
    setPassage(meta.passage);
    q("submit-button").click();
    await flush();
    const expected = (
      fixtures.errorTooLong.body as {
        error: { message: string };
      }
    ).error.message;
    expect(q("inline-error").textContent).toBe(expected);
    expect(document.querySelectorAll(".toast").length).toBe(0);
    q("submit-screen"); // still on the submit screen
  });

  it("surfaces unexpected answer failures as a toast and allows retrying", async () => {
    const server = new FixtureServer();
    await mountApp(server);
    setPassage(meta.passage);
    q("submit-button").click();
    await flush();
    q(`sentence-${meta.firstSentenceIndex}`).click();

    server.failNextAnswer = true;
    clickChoice(meta.rightChoice);
    await flush();
    const toast = q("toast");
    expect(toast.textContent).toContain("ScoringUnavailable");
    // the item is untouched: still masked, panel open, no feedback recorded
    expect(
      q(`sentence-${meta.firstSentenceIndex}`).classList.contains("masked"),
    ).toBe(true);
    absent("item-feedback");

    // the in-flight guard was released, so the learner can try again
    clickChoice(meta.rightChoice);
    await flush();
    expect(
      q(`sentence-${meta.firstSentenceIndex}`).classList.contains("solved"),
    ).toBe(true);
  });

  it("shows a load error when the construct catalog cannot be fetched", async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const root = document.querySelector<HTMLElement>("#app")!;
    const api = new ExerciseApi("", async () => {
      throw new Error("connection refused");
    });
    await new PracticeApp(root, api).start();
    expect(q("load-error").textContent).not.toBe("");
  });
});

describe("network traffic audit", () => {
  it("never exposes answer material on locked items", async () => {
    const server = new FixtureServer();
    await runFullFlow(server);

    // the flow exercised every route
    expect(server.traffic.length).toBeGreaterThanOrEqual(6);

    // 1. no field name anywhere in any exchange hints at scoring internals
    const forbidden = /target|log_?prob|score|gap|distractor|lemma/i;
    for (const exchange of server.traffic) {
      const keys = [
        ...collectKeys(exchange.requestBody),
        ...collectKeys(exchange.responseBody),
      ];
      for (const key of keys) {
        expect(key).not.toMatch(forbidden);
      }
    }

    // 2. locked entries carry only presentation fields
    const allowed = new Set([
      "sentence_index",
      "masked",
      "hidden",
      "text",
      "construct_code",
      "item_id",
      "choices",
      "attempts",
    ]);
    const locked = lockedEntries(server.traffic);
    expect(locked.length).toBeGreaterThan(0);
    for (const entry of locked) {
      for (const key of Object.keys(entry)) {
        expect(allowed.has(key), `unexpected key "${key}" on a locked item`)
          .toBe(true);
      }
    }

    // 3. no locked field outside `choices` carries the eventual answer
    const wholeWord = new RegExp(`\\b${meta.rightChoice}\\b`);
    for (const entry of locked) {
      if (entry.item_id !== meta.itemId) {
        continue;
      }
      expect(String(entry.text)).not.toMatch(wholeWord);
      expect(String(entry.text)).toContain("___");
      for (const [key, value] of Object.entries(entry)) {
        if (key === "choices") {
          continue;
        }
        expect(value).not.toBe(meta.rightChoice);
      }
      // the answer sits among the choices exactly once, indistinguishable
      const choices = entry.choices as string[];
      expect(
        choices.filter((choice) => choice === meta.rightChoice).length,
      ).toBe(1);
    }
  });
});
