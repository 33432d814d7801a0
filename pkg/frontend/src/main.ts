import { createApi } from "./api";
import { SentenceController } from "./controller";
import type { SessionState } from "./controller";
import { renderError, renderSentenceView } from "./view";
import type { DocumentSummary, Side } from "./types";
import "./styles.css";

const api = createApi("");

function el<K extends keyof HTMLElementTagNameMap>(tag: K, className?: string,
                                                   text?: string) {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function toast(message: string): void {
  const box = el("div", "toast", message);
  document.body.appendChild(box);
  setTimeout(() => box.remove(), 4000);
}

export function bootstrap(root: HTMLElement): void {
  const header = el("header", "app-header");
  header.appendChild(el("h1", undefined, "framescore adjudication"));
  const docSelect = el("select", "doc-select") as HTMLSelectElement;
  const sentenceSelect = el("select", "sentence-select") as HTMLSelectElement;
  header.appendChild(docSelect);
  header.appendChild(sentenceSelect);
  const main = el("main", "sentence-root");
  root.textContent = "";
  root.appendChild(header);
  root.appendChild(main);

  let summaries: DocumentSummary[] = [];

  const controller = new SentenceController(api, {
    onChange: (state: SessionState) => {
      renderSentenceView(main, {
        sentence: state.sentence,
        alignment: state.alignment,
        scores: state.scores,
        revision: state.revision,
        saving: state.saving,
      }, state.fragment, {
        onRejectPair: (src, tgt) => void controller.rejectPair(src, tgt),
        onRestorePair: (src, tgt) => void controller.restorePair(src, tgt),
        onAcceptPair: (src, tgt) => void controller.acceptPair(src, tgt),
        onFlag: (side: Side, frame, role, occurrence, category) =>
          void controller.flagKeyword(side, frame, role, occurrence, category),
      });
    },
    onToast: toast,
  });

  async function openSentence(docId: string, sentenceId: number): Promise<void> {
    window.location.hash = `#${encodeURIComponent(docId)}/${sentenceId}`;
    try {
      await controller.load(docId, sentenceId);
    } catch (error) {
      renderError(main, `failed to load ${docId} sentence ${sentenceId}: ${error}`,
        () => void openSentence(docId, sentenceId));
    }
  }

  function fillSentenceSelect(summary: DocumentSummary): void {
    sentenceSelect.textContent = "";
    for (const id of summary.sentence_ids) {
      const option = document.createElement("option");
      option.value = String(id);
      option.textContent = `sentence ${id}`;
      sentenceSelect.appendChild(option);
    }
  }

  docSelect.addEventListener("change", () => {
    const summary = summaries.find((s) => s.doc_id === docSelect.value);
    if (!summary) return;
    fillSentenceSelect(summary);
    const first = summary.sentence_ids[0];
    if (first !== undefined) void openSentence(summary.doc_id, first);
  });

  sentenceSelect.addEventListener("change", () => {
    void openSentence(docSelect.value, Number(sentenceSelect.value));
  });

  async function start(): Promise<void> {
    try {
      summaries = await api.listDocuments();
    } catch (error) {
      renderError(main, `cannot reach the adjudication service: ${error}`, () => void start());
      return;
    }
    if (!summaries.length) {
      main.textContent = "";
      main.appendChild(el("p", "zero-state", "No documents in the workspace."));
      return;
    }
    docSelect.textContent = "";
    for (const summary of summaries) {
      const option = document.createElement("option");
      option.value = summary.doc_id;
      option.textContent = `${summary.doc_id} (${summary.system_id})`;
      docSelect.appendChild(option);
    }

    const fromHash = decodeHash();
    const summary = summaries.find((s) => s.doc_id === fromHash?.docId) ?? summaries[0];
    docSelect.value = summary.doc_id;
    fillSentenceSelect(summary);
    const sentenceId = fromHash && summary.sentence_ids.includes(fromHash.sentenceId)
      ? fromHash.sentenceId
      : summary.sentence_ids[0];
    if (sentenceId !== undefined) {
      sentenceSelect.value = String(sentenceId);
      void openSentence(summary.doc_id, sentenceId);
    }
  }

  void start();
}

function decodeHash(): { docId: string; sentenceId: number } | null {
  const raw = window.location.hash.replace(/^#/, "");
  if (!raw) return null;
  const slash = raw.lastIndexOf("/");
  if (slash < 0) return null;
  const docId = decodeURIComponent(raw.slice(0, slash));
  const sentenceId = Number(raw.slice(slash + 1));
  return Number.isFinite(sentenceId) ? { docId, sentenceId } : null;
}

const rootElement = document.getElementById("app");
if (rootElement) bootstrap(rootElement);
