import { spawnSync } from "node:child_process";
import { readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import type { TextSpan } from "../src/index.js";

export const REPO_ROOT = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)),
  "..",
  "..",
  "..",
);

export const CLI = ["python3", "-m", "segtext"];

/** Direct CLI invocation, independent of the binding's internals. */
export function cliDirect(args: string[], input: string): string {
  const result = spawnSync(CLI[0], [...CLI.slice(1), ...args], {
    input,
    encoding: "utf8",
    maxBuffer: 256 * 1024 * 1024,
    env: { ...process.env, PYTHONPATH: path.join(REPO_ROOT, "src") },
  });
  if (result.status !== 0) {
    throw new Error(`direct CLI failed (${result.status}): ${result.stderr}`);
  }
  return result.stdout;
}

export function cliBatchSentences(language: string, inputs: string[]): string[][] {
  const stdin = inputs.map((t) => JSON.stringify(t)).join("\n") + "\n";
  const stdout = cliDirect(["segment", "--lang", language, "--batch"], stdin);
  return stdout
    .split("\n")
    .filter((l) => l.length > 0)
    .map((l) => (JSON.parse(l) as { sentences: string[] }).sentences);
}

export function cliBatchSpans(language: string, inputs: string[]): TextSpan[][] {
  const stdin = inputs.map((t) => JSON.stringify(t)).join("\n") + "\n";
  const stdout = cliDirect(["segment", "--lang", language, "--char-span", "--batch"], stdin);
  return stdout
    .split("\n")
    .filter((l) => l.length > 0)
    .map((l) => (JSON.parse(l) as { spans: TextSpan[] }).spans);
}

export function fixtureInputs(code: string): string[] {
  const file = path.join(REPO_ROOT, "fixtures", "grs", `${code}.jsonl`);
  return readFileSync(file, "utf8")
    .split("\n")
    .filter((l) => l.length > 0)
    .map((l) => (JSON.parse(l) as { input: string }).input);
}

/** Deterministic PRNG so the generated differential corpus is reproducible. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const TOKENS = [
  "alpha",
  "beta",
  "Gamma",
  "delta",
  "Mr.",
  "Dr.",
  "U.S.A.",
  "etc.",
  "No. 7",
  "p. 55",
  "3.14",
  "$100.00",
  "a.m.",
  "P.M.",
  "file.txt",
  "www.example.com/a.html",
  "Jane.Doe@example.com",
  "Yahoo!",
  "Hello!!",
  "What?!",
  "(see inside.)",
  '"quoted text."',
  "'single bit.'",
  "«guillemets?»",
  "[bracketed.]",
  "…",
  "...",
  ". . .",
  "wait....",
  "1.",
  "2.",
  "•",
  "e.g.",
  "Fig. 2",
  "JFK Jr.'s",
  "हिंदी।",
  "中文。",
  "emoji \u{1F600} token",
];

const TERMINALS = [".", "!", "?", ""];

export function generateInputs(count: number, seed: number): string[] {
  const rand = mulberry32(seed);
  const pick = <T>(items: T[]): T => items[Math.floor(rand() * items.length)];
  const inputs: string[] = [];
  for (let i = 0; i < count; i += 1) {
    const sentences: string[] = [];
    const sentenceCount = 1 + Math.floor(rand() * 4);
    for (let s = 0; s < sentenceCount; s += 1) {
      const words: string[] = [];
      const wordCount = 2 + Math.floor(rand() * 7);
      for (let w = 0; w < wordCount; w += 1) {
        words.push(pick(TOKENS));
      }
      sentences.push(words.join(" ") + pick(TERMINALS));
    }
    inputs.push(sentences.join(" "));
  }
  return inputs;
}
