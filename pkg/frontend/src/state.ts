/** UI state ⇄ URL hash, so back/forward navigation restores the view. */

export interface UiState {
  pairId: string | null;
  time: string | null;
}

export function stateFromUrl(hash: string): UiState {
  const match = /^#\/([^?]+)(?:\?(.*))?$/.exec(hash);
  if (!match || !match[1]) {
    return { pairId: null, time: null };
  }
  const params = new URLSearchParams(match[2] ?? "");
  return {
    pairId: decodeURIComponent(match[1]),
    time: params.get("time"),
  };
}

export function urlFromState(state: UiState): string {
  if (state.pairId === null) {
    return "#";
  }
  const base = `#/${encodeURIComponent(state.pairId)}`;
  return state.time === null ? base : `${base}?time=${encodeURIComponent(state.time)}`;
}
