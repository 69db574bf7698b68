/** Shared test plumbing: a fetch stub that serves captured service bytes. */

import { FetchLike, MinimalResponse } from "../src/api.js";
import { FIXTURES } from "./fixtures.js";

export function response(status: number, body: string): MinimalResponse {
  return { status, text: async () => body };
}

/**
 * Fetch stub backed by the captured fixtures. Records every request so
 * tests can assert exactly which URLs were hit; unknown paths 404 in the
 * service's error shape.
 */
export function fixtureFetch(log: string[] = []): { fetch: FetchLike; log: string[] } {
  const fetchFn: FetchLike = async (url, init) => {
    log.push(`${init?.method ?? "GET"} ${url}`);
    if (init?.method !== undefined && init.method !== "GET") {
      return response(404, `{\n "error": "no POST route ${url}"\n}\n`);
    }
    const body = FIXTURES[url];
    if (body === undefined) {
      return response(404, `{\n "error": "no fixture for ${url}"\n}\n`);
    }
    return response(200, body);
  };
  return { fetch: fetchFn, log };
}

/** Pull the raw text of a top-level JSON array field out of a body. */
export function rawArrayTokens(body: string, key: string): string[] {
  const start = body.indexOf(`"${key}": [`);
  if (start < 0) throw new Error(`no array '${key}' in body`);
  const open = body.indexOf("[", start);
  const close = body.indexOf("]", open);
  const inner = body.slice(open + 1, close);
  return inner
    .split(",")
    .map((tok) => tok.trim())
    .filter((tok) => tok.length > 0);
}

/** All raw tokens following `"key": ` anywhere in the body, in order. */
export function rawFieldTokens(body: string, key: string): string[] {
  const out: string[] = [];
  const re = new RegExp(`"${key}": (-?[0-9][0-9eE+.-]*)`, "g");
  for (const m of body.matchAll(re)) out.push(m[1]);
  return out;
}

/** Token lists of every `"key": [...]` array in the body, in order. */
export function rawArrayTokensAll(body: string, key: string): string[][] {
  const out: string[][] = [];
  let from = 0;
  for (;;) {
    const start = body.indexOf(`"${key}": [`, from);
    if (start < 0) return out;
    const open = body.indexOf("[", start);
    const close = body.indexOf("]", open);
    const inner = body.slice(open + 1, close);
    out.push(
      inner
        .split(",")
        .map((tok) => tok.trim())
        .filter((tok) => tok.length > 0),
    );
    from = close + 1;
  }
}
