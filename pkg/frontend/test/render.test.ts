import { describe, expect, it } from 'vitest';

import { renderObservation } from '../src/render.js';
import type { ObservationView } from '../src/types.js';

function observation(partial: Partial<ObservationView>): ObservationView {
  return {
    sessionId: 's',
    playerId: 0,
    tick: 4,
    phase: 'Main',
    status: 'ongoing',
    yourTurn: true,
    currentPlayer: 0,
    availableActions: [],
    scores: [0, 0],
    results: ['ongoing', 'ongoing'],
    view: {},
    ...partial,
  };
}

describe('tic-tac-toe skin', () => {
  const obs = observation({
    view: {
      game: 'TicTacToe',
      gridSize: 3,
      board: [
        [1, 0, 0],
        [0, 2, 0],
        [0, 0, 0],
      ],
    },
    availableActions: [
      { actionId: '4-0', display: 'place X at (1,0)' },
      { actionId: '4-1', display: 'place X at (2,2)' },
    ],
  });

  it('renders marks and clickable empty cells', () => {
    const html = renderObservation(obs);
    expect(html).toContain('>X</td>');
    expect(html).toContain('>O</td>');
    expect(html).toContain('data-action-id="4-0"');
    expect(html).toContain('data-action-id="4-1"');
  });

  it('renders no actions when it is not your turn', () => {
    const html = renderObservation({ ...obs, yourTurn: false });
    expect(html).not.toContain('data-action-id');
    expect(html).toContain('waiting for player');
  });
});

describe('love letter skin', () => {
  const obs = observation({
    scores: [0, 0, 0],
    results: ['ongoing', 'ongoing', 'ongoing'],
    view: {
      game: 'LoveLetter',
      hand: [{ type: 'Guard', value: 1 }, { type: 'Prince', value: 5 }],
      handCounts: [2, 1, 1],
      discards: [[], ['Priest'], []],
      drawPileSize: 9,
      reserve: [null],
      affectionTokens: [0, 1, 0],
      protected: [false, false, true],
      alive: [true, true, true],
    },
    availableActions: [
      { actionId: '6-0', display: 'play Guard on p1 guessing Baron' },
      { actionId: '6-1', display: 'play Prince on p0' },
    ],
  });

  it('shows own cards face up and opponents as backs', () => {
    const html = renderObservation(obs);
    expect(html).toContain('Guard (1)');
    expect(html).toContain('Prince (5)');
    expect(html).toContain('🂠');
    expect(html).toContain('protected');
  });

  it('never renders opponent hand contents', () => {
    // opponent 1 holds some card; the only face-up names allowed are our
    // own hand, discards and action labels
    const html = renderObservation({ ...obs, yourTurn: false,
                                     availableActions: [] });
    expect(html).toContain('Priest'); // public discard
    expect(html).not.toContain('data-action-id');
    const backs = html.match(/🂠/g) ?? [];
    expect(backs.length).toBe(2); // one per hidden opponent card
  });

  it('emits the guard cascade buttons', () => {
    const html = renderObservation(obs);
    expect(html).toContain('data-action-id="6-0"');
    expect(html).toContain('>Baron</button>');
    expect(html).toContain('data-card="Guard"');
  });
});

describe('uno skin', () => {
  const obs = observation({
    view: {
      game: 'Uno',
      hand: [
        { color: 'Red', type: 'Number', number: 5 },
        { color: 'Wild', type: 'Wild', number: null },
        { color: 'Blue', type: 'Skip', number: null },
      ],
      handCounts: [3, 7],
      topDiscard: { color: 'Red', type: 'Number', number: 9 },
      currentColor: 'Red',
      direction: 1,
      drawPileSize: 40,
      discardSize: 5,
      points: [12, 30],
    },
    availableActions: [
      { actionId: '8-0', display: 'play Red 5' },
      { actionId: '8-1', display: 'play Wild choosing Red' },
      { actionId: '8-2', display: 'play Wild choosing Green' },
      { actionId: '8-3', display: 'play Wild choosing Blue' },
      { actionId: '8-4', display: 'play Wild choosing Yellow' },
    ],
  });

  it('marks playable cards and opens a wild color picker', () => {
    const html = renderObservation(obs);
    expect(html).toContain('Red 5</span>');
    expect(html).toContain('data-action-id="8-0"');
    expect(html).toContain('color-picker');
    expect(html).toContain('data-action-id="8-3"');
    // unplayable Blue Skip gets no action id on its hand card
    expect(html).toMatch(/<span class="card uno blue">Blue Skip/);
  });

  it('shows opponents only as counts', () => {
    const html = renderObservation(obs);
    expect(html).toContain('p1: 7 cards');
    expect(html).toContain('top: ');
    expect(html).toContain('Red 9');
  });
});

describe('generic fallback', () => {
  it('lists view fields and an action picker', () => {
    const html = renderObservation(
      observation({
        view: { game: 'SomethingNew', tokens: 3 },
        availableActions: [{ actionId: '1-0', display: 'pass <turn>' }],
      }),
    );
    expect(html).toContain('generic-view');
    expect(html).toContain('<b>tokens</b>');
    expect(html).toContain('pass &lt;turn&gt;'); // escaped
  });
});
