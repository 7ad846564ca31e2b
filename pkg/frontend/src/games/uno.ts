import { groupUnoActions } from '../actions.js';
import { escapeHtml } from '../render.js';
import type { ObservationView } from '../types.js';

interface UnoCardView {
  color: string;
  type: string;
  number: number | null;
}

function cardLabel(card: UnoCardView): string {
  if (card.color === 'Wild') return card.type;
  return card.type === 'Number'
    ? `${card.color} ${card.number}`
    : `${card.color} ${card.type}`;
}

function cardHtml(card: UnoCardView, extra = ''): string {
  return (
    `<span class="card uno ${card.color.toLowerCase()}"${extra}>` +
    `${escapeHtml(cardLabel(card))}</span>`
  );
}

/**
 * Uno table: opponents as counts, the top discard with the active color,
 * own hand with playable cards clickable; wilds open a color chooser.
 */
export function renderUno(observation: ObservationView): string {
  const view = observation.view;
  const hand = view['hand'] as UnoCardView[];
  const handCounts = view['handCounts'] as number[];
  const top = view['topDiscard'] as UnoCardView | null;
  const points = view['points'] as number[];

  const seats = handCounts
    .map((count, p) =>
      p === observation.playerId
        ? ''
        : `<div class="seat" data-player="${p}">p${p}: ${count} cards, ` +
          `${points[p]} pts</div>`,
    )
    .join('');

  const actions = observation.yourTurn
    ? groupUnoActions(observation.availableActions)
    : { drawActionId: null, plays: [] };
  const playable = new Map(
    actions.plays
      .filter((play) => play.actionId !== null)
      .map((play) => [play.label, play.actionId] as const),
  );
  const wilds = actions.plays.filter((play) => play.colorChoices.length > 0);

  const ownHand = hand
    .map((card) => {
      const label = cardLabel(card);
      const actionId = playable.get(label);
      return cardHtml(
        card,
        actionId ? ` data-action-id="${actionId}"` : '',
      );
    })
    .join('');

  const colorPickers = wilds
    .map(
      (play) =>
        `<div class="color-picker" data-card="${escapeHtml(play.label)}">` +
        `${escapeHtml(play.label)}: ` +
        play.colorChoices
          .map(
            (choice) =>
              `<button class="${choice.color.toLowerCase()}" ` +
              `data-action-id="${choice.actionId}">` +
              `${escapeHtml(choice.color)}</button>`,
          )
          .join('') +
        `</div>`,
    )
    .join('');

  const drawButton = actions.drawActionId
    ? `<button class="draw" data-action-id="${actions.drawActionId}">` +
      `draw a card</button>`
    : '';

  return (
    `<div class="uno-table">${seats}` +
    `<div class="center">top: ${top ? cardHtml(top) : '—'} ` +
    `<span class="current-color">color: ` +
    `${escapeHtml(String(view['currentColor']))}</span> ` +
    `<span class="pile">draw pile: ${view['drawPileSize']}</span></div>` +
    `<div class="own-area">your hand: ${ownHand}</div>` +
    `${colorPickers}${drawButton}</div>`
  );
}
