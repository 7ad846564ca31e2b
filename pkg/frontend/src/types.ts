import { z } from 'zod';

/** Wire types of the play service, validated at the boundary. */

export const AvailableAction = z
  .object({
    actionId: z.string().regex(/^\d+-\d+$/),
    display: z.string(),
  })
  .strict();

export const ObservationView = z
  .object({
    sessionId: z.string(),
    playerId: z.number().int().nonnegative(),
    tick: z.number().int().nonnegative(),
    phase: z.string(),
    status: z.enum(['ongoing', 'ended']),
    yourTurn: z.boolean(),
    currentPlayer: z.number().int().nonnegative(),
    availableActions: z.array(AvailableAction),
    scores: z.array(z.number()),
    results: z.array(
      z.enum(['ongoing', 'win', 'lose', 'draw', 'disqualified']),
    ),
    view: z.record(z.unknown()),
  })
  .strict();

export const CreateSessionResponse = z
  .object({
    sessionId: z.string(),
    seatTokens: z.array(z.string().nullable()),
    seed: z.number().int(),
  })
  .strict();

export const SubmitActionResponse = z
  .object({
    ok: z.literal(true),
    actionId: z.string(),
  })
  .strict();

export const SessionSummary = z
  .object({
    sessionId: z.string(),
    game: z.string(),
    status: z.enum(['ongoing', 'ended']),
    tick: z.number().int().nonnegative(),
    seats: z.array(
      z.object({ spec: z.string(), human: z.boolean() }).strict(),
    ),
  })
  .strict();

export const SessionListResponse = z
  .object({ sessions: z.array(SessionSummary) })
  .strict();

export const EventFrame = z
  .object({
    type: z.enum([
      'state-snapshot',
      'turn-started',
      'action-applied',
      'round-ended',
      'game-ended',
      'interrupt',
      'error',
    ]),
    payload: z.record(z.unknown()),
    tick: z.number().int().nonnegative(),
  })
  .strict();

export type AvailableAction = z.infer<typeof AvailableAction>;
export type ObservationView = z.infer<typeof ObservationView>;
export type CreateSessionResponse = z.infer<typeof CreateSessionResponse>;
export type SubmitActionResponse = z.infer<typeof SubmitActionResponse>;
export type SessionSummary = z.infer<typeof SessionSummary>;
export type SessionListResponse = z.infer<typeof SessionListResponse>;
export type EventFrame = z.infer<typeof EventFrame>;
