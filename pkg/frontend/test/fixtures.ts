/** A recorded session state, exactly as the service serializes it. */

import type { SessionState } from '../src/types.js';

export const BASE_STATE: SessionState = {
  id: 's1',
  m: 2,
  n: 4,
  quiver: {
    m: 2,
    vertices: ['3,8', '5,8', '3,12', '9,12'],
    arrows: [
      { from: '3,12', to: '3,8', colour: 2, mult: 1 },
      { from: '3,12', to: '9,12', colour: 0, mult: 1 },
      { from: '3,8', to: '3,12', colour: 0, mult: 1 },
      { from: '3,8', to: '5,8', colour: 0, mult: 1 },
      { from: '3,8', to: '9,12', colour: 1, mult: 1 },
      { from: '5,8', to: '3,8', colour: 2, mult: 1 },
      { from: '9,12', to: '3,12', colour: 2, mult: 1 },
      { from: '9,12', to: '3,8', colour: 1, mult: 1 },
    ],
  },
  angulation: {
    m: 2,
    n: 5,
    diagonals: [
      [3, 8],
      [3, 12],
      [5, 8],
      [9, 12],
    ],
  },
  legal_moves: {
    vertices: ['3,8', '5,8', '3,12', '9,12'],
    flips: [
      { diagonal: [3, 8], candidates: [[5, 12], [4, 9]] },
      { diagonal: [3, 12], candidates: [[2, 9], [1, 8]] },
      { diagonal: [5, 8], candidates: [[4, 7], [3, 6]] },
      { diagonal: [9, 12], candidates: [[8, 11], [3, 10]] },
    ],
  },
  history: [],
};

export const SINGLE_VERTEX_STATE: SessionState = {
  id: 's2',
  m: 2,
  n: 1,
  quiver: { m: 2, vertices: ['1'], arrows: [] },
  angulation: null,
  legal_moves: { vertices: ['1'] },
  history: [],
};
