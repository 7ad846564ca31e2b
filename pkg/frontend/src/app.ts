import { ApiClient } from './api.js';
import { renderObservation } from './render.js';
import { ClientSessionModel } from './session.js';

/**
 * Mount a seat onto a DOM element: render every observation update and
 * submit whatever `data-action-id` the user clicks.
 */
export function mountSeat(
  root: HTMLElement,
  client: ApiClient,
  sessionId: string,
  seatToken: string,
): ClientSessionModel {
  const model = new ClientSessionModel(client, sessionId, seatToken);
  model.onUpdate((observation) => {
    root.innerHTML = renderObservation(observation);
  });
  root.addEventListener('click', (event) => {
    const target = (event.target as HTMLElement).closest('[data-action-id]');
    if (target instanceof HTMLElement && model.isMyTurn) {
      void model.submit(target.dataset.actionId as string);
    }
  });
  const poll = async () => {
    await model.refresh();
    if (!model.isEnded) setTimeout(poll, 200);
  };
  void poll();
  return model;
}

/** Create a session from the lobby form and mount the first human seat. */
export async function startGame(
  root: HTMLElement,
  baseUrl: string,
  game: string,
  seats: string[],
  seed?: number,
): Promise<ClientSessionModel> {
  const client = new ApiClient(baseUrl);
  const created = await client.createSession(game, seats, seed);
  const token = created.seatTokens.find((t): t is string => t !== null);
  if (token === undefined) {
    throw new Error('no human seat in this session');
  }
  return mountSeat(root, client, created.sessionId, token);
}
