/**
 * Node bindings for the segtext sentence boundary disambiguation engine.
 *
 * The core engine runs out of process: each call drives the `segtext` CLI
 * (`python3 -m segtext`) and parses its JSONL output, so results are
 * byte-identical to the CLI by construction. For servers that keep a
 * segtext HTTP service running, {@link Segmenter.segmentRemote} talks to it
 * instead and avoids per-call process startup.
 *
 * Offsets in {@link TextSpan} are Unicode **code point** offsets into the
 * original text, exactly as the core reports them. JavaScript strings index
 * by UTF-16 code units, so positions differ whenever the text contains
 * astral characters (emoji, some CJK): use {@link utf16Range} before
 * slicing a JS string.
 */

import { spawnSync } from "node:child_process";

export type DocType = "plain" | "pdf";

export interface SegmenterOptions {
  /** Two-letter ISO 639-1 language code. Default "en". */
  language?: string;
  /** Run the destructive cleaner first. Incompatible with charSpan. */
  clean?: boolean;
  /** Return TextSpan records instead of plain sentences. */
  charSpan?: boolean;
  /** Newline-repair policy used by the cleaner. Default "plain". */
  docType?: DocType;
  /**
   * Command that launches the core CLI. Defaults to the SEGTEXT_CLI
   * environment variable (split on spaces) or ["python3", "-m", "segtext"].
   */
  cliCommand?: string[];
  /** Base URL of a running segtext service, e.g. "http://127.0.0.1:8000". */
  serviceUrl?: string;
}

export interface TextSpan {
  text: string;
  /** Code-point offset, inclusive. */
  start: number;
  /** Code-point offset, exclusive. */
  end: number;
}

/** Error raised by the core engine, carrying its error kind. */
export class SegtextError extends Error {
  readonly kind: string;

  constructor(kind: string, detail: string) {
    super(`${kind}: ${detail}`);
    this.name = "SegtextError";
    this.kind = kind;
  }
}

const ERROR_LINE = /error\[(\w+)\]: ([\s\S]*)/;
const MAX_BUFFER = 256 * 1024 * 1024;

function defaultCliCommand(): string[] {
  const fromEnv = process.env.SEGTEXT_CLI;
  if (fromEnv && fromEnv.trim().length > 0) {
    return fromEnv.trim().split(/\s+/);
  }
  return ["python3", "-m", "segtext"];
}

function throwFromCli(status: number | null, stderr: string): never {
  const match = ERROR_LINE.exec(stderr);
  if (match) {
    throw new SegtextError(match[1], match[2].trim());
  }
  throw new SegtextError("io", `core CLI failed with status ${status}: ${stderr.trim()}`);
}

/**
 * Convert a core span (code-point offsets) to UTF-16 offsets usable with
 * `String.prototype.slice` on the original text.
 */
export function utf16Range(original: string, span: TextSpan): { start: number; end: number } {
  let codePoints = 0;
  let units = 0;
  let start = -1;
  for (const ch of original) {
    if (codePoints === span.start) {
      start = units;
    }
    if (codePoints === span.end) {
      return { start, end: units };
    }
    codePoints += 1;
    units += ch.length;
  }
  if (codePoints === span.start && start === -1) {
    start = units;
  }
  if (codePoints === span.end && start !== -1) {
    return { start, end: units };
  }
  throw new RangeError(`span [${span.start}, ${span.end}) lies outside the text`);
}

export class Segmenter {
  readonly language: string;
  readonly clean: boolean;
  readonly charSpan: boolean;
  readonly docType: DocType;
  private readonly cliCommand: string[];
  private readonly serviceUrl?: string;

  constructor(options: SegmenterOptions = {}) {
    this.language = options.language ?? "en";
    this.clean = options.clean ?? false;
    this.charSpan = options.charSpan ?? false;
    this.docType = options.docType ?? "plain";
    this.cliCommand = options.cliCommand ?? defaultCliCommand();
    this.serviceUrl = options.serviceUrl;
    if (this.clean && this.charSpan) {
      // Same rule the core enforces; failing here keeps construction cheap.
      throw new SegtextError(
        "IncompatibleOptions",
        "clean rewrites the input, so char spans into the original text cannot be produced",
      );
    }
  }

  private cliArgs(extra: string[]): string[] {
    const args = [...this.cliCommand.slice(1), "segment", "--lang", this.language];
    if (this.clean) args.push("--clean");
    if (this.charSpan) args.push("--char-span");
    args.push("--doc-type", this.docType, ...extra);
    return args;
  }

  private runCli(extra: string[], input: string): string {
    const result = spawnSync(this.cliCommand[0], this.cliArgs(extra), {
      input,
      encoding: "utf8",
      maxBuffer: MAX_BUFFER,
    });
    if (result.error) {
      throw result.error;
    }
    if (result.status !== 0) {
      throwFromCli(result.status, result.stderr ?? "");
    }
    return result.stdout ?? "";
  }

  /** Segment one document. Returns sentences, or spans when charSpan is set. */
  segment(text: string): string[] | TextSpan[] {
    const stdout = this.runCli(["--format", "jsonl"], text);
    const records = stdout
      .split("\n")
      .filter((line) => line.length > 0)
      .map((line) => JSON.parse(line) as { text: string; start?: number; end?: number });
    if (this.charSpan) {
      return records.map((r) => ({ text: r.text, start: r.start!, end: r.end! }));
    }
    return records.map((r) => r.text);
  }

  /** Segment many documents with a single CLI invocation. */
  segmentMany(texts: string[]): (string[] | TextSpan[])[] {
    if (texts.length === 0) {
      return [];
    }
    const input = texts.map((t) => JSON.stringify(t)).join("\n") + "\n";
    const stdout = this.runCli(["--batch"], input);
    const lines = stdout.split("\n").filter((line) => line.length > 0);
    if (lines.length !== texts.length) {
      throw new SegtextError(
        "io",
        `batch returned ${lines.length} records for ${texts.length} documents`,
      );
    }
    return lines.map((line) => {
      const record = JSON.parse(line) as { sentences?: string[]; spans?: TextSpan[] };
      return this.charSpan ? (record.spans ?? []) : (record.sentences ?? []);
    });
  }

  /** Segment via a running segtext HTTP service (requires serviceUrl). */
  async segmentRemote(text: string): Promise<string[] | TextSpan[]> {
    if (!this.serviceUrl) {
      throw new SegtextError("io", "serviceUrl was not configured");
    }
    const response = await fetch(new URL("/segment", this.serviceUrl), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({
        text,
        language: this.language,
        char_span: this.charSpan,
        clean: this.clean,
        doc_type: this.docType,
      }),
    });
    const body = (await response.json()) as {
      sentences?: string[];
      spans?: TextSpan[];
      error?: { kind: string; detail: string };
    };
    if (!response.ok) {
      throw new SegtextError(body.error?.kind ?? "io", body.error?.detail ?? response.statusText);
    }
    return this.charSpan ? (body.spans ?? []) : (body.sentences ?? []);
  }
}
