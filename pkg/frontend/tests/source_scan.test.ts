// @vitest-environment node
import { readdirSync, readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

const srcDir = join(dirname(fileURLToPath(import.meta.url)), "..", "src");

const sourceFiles = readdirSync(srcDir).filter(
  (name) => name.endsWith(".ts") || name.endsWith(".css"),
);

describe("client source audit", () => {
  it("ships at least the expected modules", () => {
    for (const expected of [
      "api.ts",
      "app.ts",
      "main.ts",
      "reorder.ts",
      "state.ts",
      "types.ts",
    ]) {
      expect(sourceFiles).toContain(expected);
    }
  });

  it("never names answers, scores, or distractors", () => {
    // The server is the only correctness oracle. The client cannot leak or
    // even reason about answer material, so its vocabulary must not contain
    // any of it — not in identifiers, strings, or comments.
    const forbidden = /target|distractor|log_?prob|correct_answer|answer_key/i;
    for (const name of sourceFiles) {
      const content = readFileSync(join(srcDir, name), "utf8");
      const match = content.match(forbidden);
      expect(
        match,
        `${name} mentions "${match?.[0] ?? ""}"`,
      ).toBeNull();
    }
  });

  it("never shuffles or sorts the choices it receives", () => {
    const appSource = readFileSync(join(srcDir, "app.ts"), "utf8");
    expect(appSource).not.toMatch(/shuffle|Math\.random/);
    expect(appSource).not.toMatch(/choices[^\n]*\.sort\(/);
  });
});
