/** Browser wiring: one session at a time, one request in flight at most.
 *
 * All state shown comes straight from the service; clicks turn into
 * mutate/flip/undo requests and the page re-renders from the response.
 */

import { ApiError, SessionApi } from './api.js';
import { renderHistory, renderLegend, renderPolygonSvg, renderQuiverSvg } from './render.js';
import type { Pair, SessionState } from './types.js';

const api = new SessionApi('');

let sessionId: string | null = null;
let state: SessionState | null = null;
let selected: Pair | null = null;
let busy = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setError(message: string | null) {
  const banner = el<HTMLDivElement>('error');
  banner.textContent = message ?? '';
  banner.style.display = message ? 'block' : 'none';
}

function render() {
  const quiverPane = el<HTMLDivElement>('quiver');
  const polygonPane = el<HTMLDivElement>('polygon');
  const legendPane = el<HTMLDivElement>('legend');
  const historyPane = el<HTMLDivElement>('history');
  const undoButton = el<HTMLButtonElement>('undo');
  if (!state) {
    quiverPane.innerHTML = '';
    polygonPane.innerHTML = '';
    legendPane.innerHTML = '';
    historyPane.innerHTML = '';
    undoButton.disabled = true;
    return;
  }
  quiverPane.innerHTML = renderQuiverSvg(state);
  polygonPane.innerHTML = state.angulation ? renderPolygonSvg(state, selected) : '';
  legendPane.innerHTML = renderLegend(state.m);
  historyPane.innerHTML = renderHistory(state.history);
  undoButton.disabled = busy || state.history.length === 0;
  document.body.classList.toggle('busy', busy);
}

async function perform(action: () => Promise<SessionState>) {
  if (busy) return;
  busy = true;
  render();
  try {
    state = await action();
    setError(null);
  } catch (err) {
    setError(err instanceof ApiError ? `${err.status}: ${err.message}` : String(err));
  } finally {
    busy = false;
    selected = null;
    render();
  }
}

function parsePair(text: string): Pair {
  const [a, b] = text.split(',').map(Number);
  return [a, b];
}

function wireClicks() {
  el<HTMLDivElement>('quiver').addEventListener('click', (event) => {
    const target = (event.target as Element).closest('[data-vertex]');
    if (!target || !sessionId || busy) return;
    const vertex = target.getAttribute('data-vertex')!;
    void perform(() => api.mutate(sessionId!, vertex));
  });

  el<HTMLDivElement>('polygon').addEventListener('click', (event) => {
    const node = event.target as Element;
    if (!sessionId || busy || !state) return;
    const candidate = node.closest('[data-candidate]');
    if (candidate && selected) {
      const choice = parsePair(candidate.getAttribute('data-candidate')!);
      const diagonal = selected;
      void perform(() => api.flip(sessionId!, diagonal, choice));
      return;
    }
    const diagonal = node.closest('[data-diagonal]');
    if (diagonal) {
      selected = parsePair(diagonal.getAttribute('data-diagonal')!);
      render();
      return;
    }
    selected = null;
    render();
  });

  el<HTMLButtonElement>('undo').addEventListener('click', () => {
    if (!sessionId || busy) return;
    void perform(() => api.undo(sessionId!));
  });
}

async function startAngulationSession() {
  const m = Number(el<HTMLInputElement>('poly-m').value);
  const n = Number(el<HTMLInputElement>('poly-n').value);
  const text = el<HTMLInputElement>('poly-diagonals').value.trim();
  let diagonals: Pair[];
  try {
    diagonals = JSON.parse(text);
  } catch {
    setError('diagonals must be JSON like [[3,8],[5,8],[3,12],[9,12]]');
    return;
  }
  await perform(async () => {
    const doc = await api.create({ angulation: { m, n, diagonals } });
    sessionId = doc.id;
    return doc.state;
  });
}

async function startSeedSession() {
  const m = Number(el<HTMLInputElement>('seed-m').value);
  const name = el<HTMLInputElement>('seed-name').value.trim();
  await perform(async () => {
    const doc = await api.create({ m, seed: name });
    sessionId = doc.id;
    return doc.state;
  });
}

export function boot() {
  wireClicks();
  el<HTMLButtonElement>('start-angulation').addEventListener('click', () => {
    void startAngulationSession();
  });
  el<HTMLButtonElement>('start-seed').addEventListener('click', () => {
    void startSeedSession();
  });
  render();
}

boot();
