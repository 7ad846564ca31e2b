import { groupLoveLetterActions, guessesFor, targetsOf } from '../actions.js';
import { escapeHtml } from '../render.js';
import type { ObservationView } from '../types.js';

interface HandCard {
  type: string;
  value: number;
}

/**
 * Love Letter table: own hand face up, everyone else as card backs,
 * public discards and affection tokens. The Guard play cascades
 * card -> target -> guessed type, each step a data-action-id-free button
 * except the final one.
 */
export function renderLoveLetter(observation: ObservationView): string {
  const view = observation.view;
  const hand = view['hand'] as HandCard[];
  const handCounts = view['handCounts'] as number[];
  const discards = view['discards'] as string[][];
  const tokens = view['affectionTokens'] as number[];
  const protectedFlags = view['protected'] as boolean[];
  const alive = view['alive'] as boolean[];

  const seats = handCounts
    .map((count, p) => {
      if (p === observation.playerId) return '';
      const backs = '🂠'.repeat(count);
      const badges =
        (protectedFlags[p] ? ' <span class="badge">protected</span>' : '') +
        (alive[p] ? '' : ' <span class="badge">out</span>');
      return (
        `<div class="seat" data-player="${p}">p${p} ${backs} ` +
        `♥${tokens[p]}${badges}` +
        `<div class="discards">${discards[p]
          .map((name) => `<span class="card mini">${escapeHtml(name)}</span>`)
          .join('')}</div></div>`
      );
    })
    .join('');

  const ownHand = hand
    .map(
      (card) =>
        `<span class="card own" data-card="${escapeHtml(card.type)}">` +
        `${escapeHtml(card.type)} (${card.value})</span>`,
    )
    .join('');

  let picker = '';
  if (observation.yourTurn) {
    const groups = groupLoveLetterActions(observation.availableActions);
    picker = groups
      .map((group) => {
        const branches = targetsOf(group)
          .map((target) => {
            const leaves = guessesFor(group, target)
              .map((choice) => {
                const label =
                  choice.guess ??
                  (target === null ? group.card : `p${target}`);
                return (
                  `<button data-action-id="${choice.actionId}">` +
                  `${escapeHtml(label)}</button>`
                );
              })
              .join('');
            const caption =
              target === null ? '' : `<span class="target">p${target}</span>`;
            return `<span class="branch">${caption}${leaves}</span>`;
          })
          .join('');
        return (
          `<div class="play-group" data-card="${escapeHtml(group.card)}">` +
          `<span class="card-name">${escapeHtml(group.card)}</span>` +
          `${branches}</div>`
        );
      })
      .join('');
  }

  return (
    `<div class="ll-table">${seats}` +
    `<div class="own-area">your hand: ${ownHand} ` +
    `♥${tokens[observation.playerId]} ` +
    `<span class="pile">draw pile: ${view['drawPileSize']}</span></div>` +
    `<div class="picker">${picker}</div></div>`
  );
}
