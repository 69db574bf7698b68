/**
 * JSON parser that keeps the raw text of every number token.
 *
 * The service formats numbers with Python semantics ("4.0", "0.016666666666666666")
 * and the dashboard must display those bytes unchanged. Going through JSON.parse
 * and back would reformat them, so values are parsed into a tree where each
 * number node carries both the numeric value and the original token.
 */

export type RawValue =
  | { kind: "object"; entries: Map<string, RawValue> }
  | { kind: "array"; items: RawValue[] }
  | { kind: "string"; value: string }
  | { kind: "number"; value: number; raw: string }
  | { kind: "boolean"; value: boolean }
  | { kind: "null" };

export class RawJsonError extends Error {
  constructor(message: string, readonly offset: number) {
    super(`${message} at offset ${offset}`);
    this.name = "RawJsonError";
  }
}

const WS = new Set([" ", "\t", "\n", "\r"]);

class Parser {
  pos = 0;

  constructor(private readonly text: string) {}

  fail(message: string): never {
    throw new RawJsonError(message, this.pos);
  }

  skipWs(): void {
    while (this.pos < this.text.length && WS.has(this.text[this.pos])) {
      this.pos += 1;
    }
  }

  peek(): string {
    if (this.pos >= this.text.length) this.fail("unexpected end of input");
    return this.text[this.pos];
  }

  expect(ch: string): void {
    if (this.peek() !== ch) this.fail(`expected '${ch}'`);
    this.pos += 1;
  }

  value(): RawValue {
    this.skipWs();
    const ch = this.peek();
    if (ch === "{") return this.object();
    if (ch === "[") return this.array();
    if (ch === '"') return { kind: "string", value: this.string() };
    if (ch === "t" || ch === "f") return this.boolean();
    if (ch === "n") return this.nullLiteral();
    if (ch === "-" || (ch >= "0" && ch <= "9")) return this.number();
    this.fail(`unexpected character '${ch}'`);
  }

  object(): RawValue {
    this.expect("{");
    const entries = new Map<string, RawValue>();
    this.skipWs();
    if (this.peek() === "}") {
      this.pos += 1;
      return { kind: "object", entries };
    }
    for (;;) {
      this.skipWs();
      const key = this.string();
      this.skipWs();
      this.expect(":");
      entries.set(key, this.value());
      this.skipWs();
      const ch = this.peek();
      if (ch === ",") {
        this.pos += 1;
        continue;
      }
      if (ch === "}") {
        this.pos += 1;
        return { kind: "object", entries };
      }
      this.fail("expected ',' or '}'");
    }
  }

  array(): RawValue {
    this.expect("[");
    const items: RawValue[] = [];
    this.skipWs();
    if (this.peek() === "]") {
      this.pos += 1;
      return { kind: "array", items };
    }
    for (;;) {
      items.push(this.value());
      this.skipWs();
      const ch = this.peek();
      if (ch === ",") {
        this.pos += 1;
        continue;
      }
      if (ch === "]") {
        this.pos += 1;
        return { kind: "array", items };
      }
      this.fail("expected ',' or ']'");
    }
  }

  string(): string {
    this.expect('"');
    let out = "";
    for (;;) {
      if (this.pos >= this.text.length) this.fail("unterminated string");
      const ch = this.text[this.pos];
      this.pos += 1;
      if (ch === '"') return out;
      if (ch !== "\\") {
        out += ch;
        continue;
      }
      const esc = this.text[this.pos];
      this.pos += 1;
      switch (esc) {
        case '"': out += '"'; break;
        case "\\": out += "\\"; break;
        case "/": out += "/"; break;
        case "b": out += "\b"; break;
        case "f": out += "\f"; break;
        case "n": out += "\n"; break;
        case "r": out += "\r"; break;
        case "t": out += "\t"; break;
        case "u": {
          const hex = this.text.slice(this.pos, this.pos + 4);
          if (!/^[0-9a-fA-F]{4}$/.test(hex)) this.fail("bad unicode escape");
          out += String.fromCharCode(parseInt(hex, 16));
          this.pos += 4;
          break;
        }
        default:
          this.fail(`bad escape '\\${esc}'`);
      }
    }
  }

  number(): RawValue {
    const start = this.pos;
    if (this.peek() === "-") this.pos += 1;
    while (this.pos < this.text.length && /[0-9]/.test(this.text[this.pos])) this.pos += 1;
    if (this.pos < this.text.length && this.text[this.pos] === ".") {
      this.pos += 1;
      while (this.pos < this.text.length && /[0-9]/.test(this.text[this.pos])) this.pos += 1;
    }
    if (this.pos < this.text.length && (this.text[this.pos] === "e" || this.text[this.pos] === "E")) {
      this.pos += 1;
      if (this.text[this.pos] === "+" || this.text[this.pos] === "-") this.pos += 1;
      while (this.pos < this.text.length && /[0-9]/.test(this.text[this.pos])) this.pos += 1;
    }
    const raw = this.text.slice(start, this.pos);
    if (!/^-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?$/.test(raw)) {
      this.fail(`malformed number '${raw}'`);
    }
    return { kind: "number", value: Number(raw), raw };
  }

  boolean(): RawValue {
    if (this.text.startsWith("true", this.pos)) {
      this.pos += 4;
      return { kind: "boolean", value: true };
    }
    if (this.text.startsWith("false", this.pos)) {
      this.pos += 5;
      return { kind: "boolean", value: false };
    }
    this.fail("bad literal");
  }

  nullLiteral(): RawValue {
    if (!this.text.startsWith("null", this.pos)) this.fail("bad literal");
    this.pos += 4;
    return { kind: "null" };
  }
}

export function parseRaw(text: string): RawValue {
  const parser = new Parser(text);
  const value = parser.value();
  parser.skipWs();
  if (parser.pos !== text.length) parser.fail("trailing content");
  return value;
}

type PathPart = string | number;

/** Walk object keys and array indices; throws when the path is absent. */
export function get(value: RawValue, ...path: PathPart[]): RawValue {
  let node = value;
  for (const part of path) {
    if (typeof part === "string") {
      if (node.kind !== "object") throw new Error(`expected object at '${part}'`);
      const next = node.entries.get(part);
      if (next === undefined) throw new Error(`missing key '${part}'`);
      node = next;
    } else {
      if (node.kind !== "array") throw new Error(`expected array at index ${part}`);
      const next = node.items[part];
      if (next === undefined) throw new Error(`index ${part} out of range`);
      node = next;
    }
  }
  return node;
}

export function opt(value: RawValue, ...path: PathPart[]): RawValue | undefined {
  try {
    return get(value, ...path);
  } catch {
    return undefined;
  }
}

/** Raw byte token of a number node, e.g. "4.0" stays "4.0". */
export function numToken(value: RawValue, ...path: PathPart[]): string {
  const node = get(value, ...path);
  if (node.kind !== "number") throw new Error("not a number");
  return node.raw;
}

export function num(value: RawValue, ...path: PathPart[]): number {
  const node = get(value, ...path);
  if (node.kind !== "number") throw new Error("not a number");
  return node.value;
}

export function str(value: RawValue, ...path: PathPart[]): string {
  const node = get(value, ...path);
  if (node.kind !== "string") throw new Error("not a string");
  return node.value;
}

export function bool(value: RawValue, ...path: PathPart[]): boolean {
  const node = get(value, ...path);
  if (node.kind !== "boolean") throw new Error("not a boolean");
  return node.value;
}

export function arr(value: RawValue, ...path: PathPart[]): RawValue[] {
  const node = get(value, ...path);
  if (node.kind !== "array") throw new Error("not an array");
  return node.items;
}

/** Convert back to a plain JS value (drops raw tokens). */
export function plain(value: RawValue): unknown {
  switch (value.kind) {
    case "object": {
      const out: Record<string, unknown> = {};
      for (const [k, v] of value.entries) out[k] = plain(v);
      return out;
    }
    case "array":
      return value.items.map(plain);
    case "string":
      return value.value;
    case "number":
      return value.value;
    case "boolean":
      return value.value;
    case "null":
      return null;
  }
}
