import type { ApiClient } from './api.js';
import type { ObservationView } from './types.js';

export type SessionListener = (observation: ObservationView) => void;

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

/**
 * Client-side model of one seat in one session: polls the observation,
 * notifies listeners on change, and submits chosen actions.
 */
export class ClientSessionModel {
  observation: ObservationView | null = null;
  private listeners: SessionListener[] = [];

  constructor(
    private readonly client: ApiClient,
    readonly sessionId: string,
    readonly seatToken: string,
    private readonly pollIntervalMs = 150,
  ) {}

  onUpdate(listener: SessionListener): void {
    this.listeners.push(listener);
  }

  get isEnded(): boolean {
    return this.observation?.status === 'ended';
  }

  get isMyTurn(): boolean {
    return this.observation?.yourTurn === true;
  }

  async refresh(): Promise<ObservationView> {
    const observation = await this.client.getObservation(
      this.sessionId,
      this.seatToken,
    );
    const changed =
      this.observation === null ||
      observation.tick !== this.observation.tick ||
      observation.yourTurn !== this.observation.yourTurn ||
      observation.status !== this.observation.status;
    this.observation = observation;
    if (changed) {
      for (const listener of this.listeners) listener(observation);
    }
    return observation;
  }

  async submit(actionId: string): Promise<void> {
    await this.client.submitAction(this.sessionId, this.seatToken, actionId);
    await this.refresh();
  }

  /** Poll until it is this seat's turn or the game is over. */
  async waitForTurn(timeoutMs = 30_000): Promise<ObservationView> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const observation = await this.refresh();
      if (observation.yourTurn || observation.status === 'ended') {
        return observation;
      }
      if (Date.now() > deadline) {
        throw new Error('timed out waiting for the turn');
      }
      await sleep(this.pollIntervalMs);
    }
  }

  /**
   * Drive the whole game: whenever it is our turn, ask `choose` for an
   * actionId and submit it. Resolves with the final observation.
   */
  async playUntilEnded(
    choose: (observation: ObservationView) => string,
    timeoutMs = 120_000,
  ): Promise<ObservationView> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const observation = await this.waitForTurn(
        Math.max(1, deadline - Date.now()),
      );
      if (observation.status === 'ended') return observation;
      await this.submit(choose(observation));
      if (Date.now() > deadline) {
        throw new Error('game did not finish in time');
      }
    }
  }
}
