import type { AvailableAction } from './types.js';

/**
 * Per-game structure on top of the flat action list. The service only
 * hands out `{actionId, display}` pairs; the display strings follow the
 * engine's stable formats, which these parsers rely on.
 */

// ---------------------------------------------------------------------------
// Tic-Tac-Toe: "place X at (x,y)"
// ---------------------------------------------------------------------------

export interface CellAction {
  x: number;
  y: number;
  actionId: string;
}

export function parseCellActions(actions: AvailableAction[]): CellAction[] {
  const cells: CellAction[] = [];
  for (const action of actions) {
    const match = action.display.match(/at \((\d+),(\d+)\)$/);
    if (match) {
      cells.push({
        x: Number(match[1]),
        y: Number(match[2]),
        actionId: action.actionId,
      });
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Love Letter: "draw a card", "play <Card>[ on p<target>[ guessing <type>]]"
// Grouped card -> target -> guess so the UI can cascade the choice.
// ---------------------------------------------------------------------------

export interface LoveLetterChoice {
  target: number | null;
  guess: string | null;
  actionId: string;
}

export interface LoveLetterGroup {
  card: string;
  choices: LoveLetterChoice[];
}

export function groupLoveLetterActions(
  actions: AvailableAction[],
): LoveLetterGroup[] {
  const groups = new Map<string, LoveLetterChoice[]>();
  for (const action of actions) {
    const match = action.display.match(
      /^play (\w+)(?:.*? p(\d+))?(?: guessing (\w+))?/,
    );
    const card = match ? match[1] : action.display;
    const choice: LoveLetterChoice = {
      target: match && match[2] !== undefined ? Number(match[2]) : null,
      guess: match && match[3] !== undefined ? match[3] : null,
      actionId: action.actionId,
    };
    const existing = groups.get(card);
    if (existing) existing.push(choice);
    else groups.set(card, [choice]);
  }
  return [...groups.entries()].map(([card, choices]) => ({ card, choices }));
}

export function targetsOf(group: LoveLetterGroup): (number | null)[] {
  const seen = new Set<number | null>();
  for (const choice of group.choices) seen.add(choice.target);
  return [...seen];
}

export function guessesFor(
  group: LoveLetterGroup,
  target: number | null,
): LoveLetterChoice[] {
  return group.choices.filter((choice) => choice.target === target);
}

// ---------------------------------------------------------------------------
// Uno: "draw a card", "play <Color> <label>", "play Wild* choosing <Color>"
// Wild plays collapse into one entry carrying its color choices.
// ---------------------------------------------------------------------------

export interface UnoPlay {
  label: string;
  actionId: string | null; // null when a color must be chosen first
  colorChoices: { color: string; actionId: string }[];
}

export interface UnoActions {
  drawActionId: string | null;
  plays: UnoPlay[];
}

export function groupUnoActions(actions: AvailableAction[]): UnoActions {
  let drawActionId: string | null = null;
  const plays: UnoPlay[] = [];
  const wilds = new Map<string, UnoPlay>();
  for (const action of actions) {
    if (action.display === 'draw a card') {
      drawActionId = action.actionId;
      continue;
    }
    const wild = action.display.match(/^play (\w+) choosing (\w+)$/);
    if (wild) {
      let play = wilds.get(wild[1]);
      if (!play) {
        play = { label: wild[1], actionId: null, colorChoices: [] };
        wilds.set(wild[1], play);
        plays.push(play);
      }
      play.colorChoices.push({ color: wild[2], actionId: action.actionId });
    } else {
      plays.push({
        label: action.display.replace(/^play /, ''),
        actionId: action.actionId,
        colorChoices: [],
      });
    }
  }
  return { drawActionId, plays };
}
