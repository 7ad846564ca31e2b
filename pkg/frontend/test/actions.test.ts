import { describe, expect, it } from 'vitest';

import {
  groupLoveLetterActions,
  groupUnoActions,
  guessesFor,
  parseCellActions,
  targetsOf,
} from '../src/actions.js';

const a = (actionId: string, display: string) => ({ actionId, display });

describe('tic-tac-toe cells', () => {
  it('maps place actions to coordinates', () => {
    const cells = parseCellActions([
      a('3-0', 'place X at (0,0)'),
      a('3-1', 'place X at (2,1)'),
    ]);
    expect(cells).toEqual([
      { x: 0, y: 0, actionId: '3-0' },
      { x: 2, y: 1, actionId: '3-1' },
    ]);
  });

  it('ignores non-placement actions', () => {
    expect(parseCellActions([a('1-0', 'draw a card')])).toEqual([]);
  });
});

describe('love letter cascade', () => {
  const actions = [
    a('5-0', 'play Guard on p1 guessing Priest'),
    a('5-1', 'play Guard on p1 guessing Baron'),
    a('5-2', 'play Guard on p2 guessing Priest'),
    a('5-3', 'play Prince on p0'),
    a('5-4', 'play Prince on p1'),
    a('5-5', 'play Handmaid (protected)'),
  ];

  it('groups by card', () => {
    const groups = groupLoveLetterActions(actions);
    expect(groups.map((g) => g.card)).toEqual([
      'Guard',
      'Prince',
      'Handmaid',
    ]);
  });

  it('cascades guard to targets then guesses', () => {
    const guard = groupLoveLetterActions(actions)[0];
    expect(targetsOf(guard)).toEqual([1, 2]);
    const onP1 = guessesFor(guard, 1);
    expect(onP1.map((c) => c.guess)).toEqual(['Priest', 'Baron']);
    expect(onP1[1].actionId).toBe('5-1');
  });

  it('keeps king swap phrasing as a targeted play', () => {
    const groups = groupLoveLetterActions([
      a('7-0', 'play King, swapping hands with p2'),
    ]);
    expect(groups[0].card).toBe('King');
    expect(groups[0].choices[0].target).toBe(2);
  });

  it('untargeted plays have a single null-target leaf', () => {
    const handmaid = groupLoveLetterActions(actions)[2];
    expect(targetsOf(handmaid)).toEqual([null]);
    expect(guessesFor(handmaid, null)[0].actionId).toBe('5-5');
  });
});

describe('uno grouping', () => {
  it('splits draw, plain plays and wild color choices', () => {
    const grouped = groupUnoActions([
      a('9-0', 'play Red 5'),
      a('9-1', 'play Blue Skip'),
      a('9-2', 'play Wild choosing Red'),
      a('9-3', 'play Wild choosing Green'),
      a('9-4', 'play Wild choosing Blue'),
      a('9-5', 'play Wild choosing Yellow'),
      a('9-6', 'draw a card'),
    ]);
    expect(grouped.drawActionId).toBe('9-6');
    expect(grouped.plays.map((p) => p.label)).toEqual([
      'Red 5',
      'Blue Skip',
      'Wild',
    ]);
    const wild = grouped.plays[2];
    expect(wild.actionId).toBeNull();
    expect(wild.colorChoices.map((c) => c.color)).toEqual([
      'Red',
      'Green',
      'Blue',
      'Yellow',
    ]);
  });

  it('handles a draw-only turn', () => {
    const grouped = groupUnoActions([a('2-0', 'draw a card')]);
    expect(grouped.drawActionId).toBe('2-0');
    expect(grouped.plays).toEqual([]);
  });
});
