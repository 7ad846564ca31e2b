export { ApiClient, ApiError } from './api.js';
export { mountSeat, startGame } from './app.js';
export {
  groupLoveLetterActions,
  groupUnoActions,
  guessesFor,
  parseCellActions,
  targetsOf,
} from './actions.js';
export { renderActionPicker, renderObservation } from './render.js';
export { ClientSessionModel } from './session.js';
export * from './types.js';
