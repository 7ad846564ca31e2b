import { parseCellActions } from '../actions.js';
import type { ObservationView } from '../types.js';

const MARKS = ['', 'X', 'O'];

/** Clickable N×N grid; empty cells carry the matching place action. */
export function renderTicTacToe(observation: ObservationView): string {
  const board = observation.view['board'] as number[][];
  const cells = parseCellActions(observation.availableActions);
  const actionAt = new Map(
    cells.map((c) => [`${c.x},${c.y}`, c.actionId] as const),
  );
  const rows = board
    .map((row, y) => {
      const tds = row
        .map((value, x) => {
          const actionId = observation.yourTurn
            ? actionAt.get(`${x},${y}`)
            : undefined;
          const attr = actionId ? ` data-action-id="${actionId}"` : '';
          const cls = value === 0 ? 'cell empty' : 'cell taken';
          return `<td class="${cls}"${attr}>${MARKS[value]}</td>`;
        })
        .join('');
      return `<tr>${tds}</tr>`;
    })
    .join('');
  return `<table class="ttt-board">${rows}</table>`;
}
