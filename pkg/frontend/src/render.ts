import type { ObservationView } from './types.js';
import { renderLoveLetter } from './games/loveletter.js';
import { renderTicTacToe } from './games/tictactoe.js';
import { renderUno } from './games/uno.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function renderStatus(observation: ObservationView): string {
  const { status, currentPlayer, playerId, results } = observation;
  const turn =
    status === 'ended'
      ? `game over — you ${results[playerId]}`
      : observation.yourTurn
        ? 'your turn'
        : `waiting for player ${currentPlayer}`;
  const scores = observation.scores
    .map((s, i) => `p${i}: ${s.toFixed(2)}`)
    .join(' · ');
  return (
    `<header class="status" data-status="${status}">` +
    `<span class="turn">${escapeHtml(turn)}</span>` +
    `<span class="scores">${escapeHtml(scores)}</span></header>`
  );
}

/** Generic fallback: list the public component summary. */
function renderGenericView(view: Record<string, unknown>): string {
  const items = Object.entries(view)
    .map(
      ([key, value]) =>
        `<li><b>${escapeHtml(key)}</b>: ` +
        `${escapeHtml(JSON.stringify(value))}</li>`,
    )
    .join('');
  return `<ul class="generic-view">${items}</ul>`;
}

/** Action buttons for games without a dedicated skin. */
export function renderActionPicker(observation: ObservationView): string {
  if (!observation.yourTurn) return '';
  const buttons = observation.availableActions
    .map(
      (a) =>
        `<button data-action-id="${a.actionId}">` +
        `${escapeHtml(a.display)}</button>`,
    )
    .join('');
  return `<div class="action-picker">${buttons}</div>`;
}

/**
 * One observation -> one HTML fragment. Clickable elements carry
 * `data-action-id`; the host page submits that id on click.
 */
export function renderObservation(observation: ObservationView): string {
  const game = observation.view['game'];
  let body: string;
  switch (game) {
    case 'TicTacToe':
      body = renderTicTacToe(observation);
      break;
    case 'LoveLetter':
      body = renderLoveLetter(observation);
      break;
    case 'Uno':
      body = renderUno(observation);
      break;
    default:
      body =
        renderGenericView(observation.view) + renderActionPicker(observation);
  }
  return `<div class="table">${renderStatus(observation)}${body}</div>`;
}
