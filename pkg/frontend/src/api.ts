import type {
  AlignmentPayload,
  DocumentPayload,
  DocumentSummary,
  OverlayFragment,
  PutResult,
} from "./types";

export class HttpError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function detailOf(response: Response): Promise<string> {
  try {
    const body = await response.json();
    const detail = (body as { detail?: unknown }).detail;
    if (Array.isArray(detail)) return detail.join("; ");
    if (detail !== undefined) return String(detail);
    return JSON.stringify(body);
  } catch {
    return response.statusText;
  }
}

export interface Api {
  listDocuments(): Promise<DocumentSummary[]>;
  getDocument(docId: string): Promise<DocumentPayload>;
  getAlignment(docId: string, sentenceId: number): Promise<AlignmentPayload>;
  putOverrides(
    docId: string,
    sentenceId: number,
    fragment: OverlayFragment,
    revision?: number,
  ): Promise<PutResult>;
}

/** Thin typed client; every score shown in the UI originates here. */
export function createApi(baseUrl = "", fetchImpl: typeof fetch = fetch): Api {
  async function getJson<T>(path: string): Promise<T> {
    const response = await fetchImpl(`${baseUrl}${path}`);
    if (!response.ok) throw new HttpError(response.status, await detailOf(response));
    return (await response.json()) as T;
  }

  return {
    listDocuments: () => getJson<DocumentSummary[]>("/api/documents"),

    getDocument: (docId) =>
      getJson<DocumentPayload>(`/api/documents/${encodeURIComponent(docId)}`),

    getAlignment: (docId, sentenceId) =>
      getJson<AlignmentPayload>(
        `/api/documents/${encodeURIComponent(docId)}/sentences/${sentenceId}/alignment`,
      ),

    async putOverrides(docId, sentenceId, fragment, revision) {
      const headers: Record<string, string> = { "Content-Type": "application/json" };
      if (revision !== undefined) headers["If-Match"] = String(revision);
      const response = await fetchImpl(
        `${baseUrl}/api/documents/${encodeURIComponent(docId)}/sentences/${sentenceId}/overrides`,
        { method: "PUT", headers, body: JSON.stringify(fragment) },
      );
      if (response.status === 409) {
        const body = (await response.json()) as { revision: number };
        return { kind: "conflict", revision: body.revision };
      }
      if (response.status === 400) {
        return { kind: "rejected", detail: await detailOf(response) };
      }
      if (!response.ok) throw new HttpError(response.status, await detailOf(response));
      return { kind: "ok", payload: (await response.json()) as AlignmentPayload };
    },
  };
}
