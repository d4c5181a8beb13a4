/** JSON shapes of the session service, mirrored verbatim. */

export interface ArrowDoc {
  from: string | number;
  to: string | number;
  colour: number;
  mult: number;
}

export interface QuiverDoc {
  m: number;
  vertices: (string | number)[];
  arrows: ArrowDoc[];
}

export type Pair = [number, number];

export interface AngulationDoc {
  m: number;
  n: number;
  diagonals: Pair[];
}

export interface FlipMove {
  diagonal: Pair;
  candidates: Pair[];
}

export interface LegalMoves {
  vertices: string[];
  flips?: FlipMove[];
}

export type Move =
  | { type: 'mutate'; vertex: string }
  | { type: 'flip'; diagonal: Pair; choice: Pair };

export interface SessionState {
  id: string;
  m: number;
  n: number;
  quiver: QuiverDoc;
  angulation: AngulationDoc | null;
  legal_moves: LegalMoves;
  history: Move[];
}

export interface SessionExport {
  version: number;
  m: number;
  kind: 'quiver' | 'angulation';
  seed: unknown;
  history: Move[];
}

export type CreateRequest =
  | { m: number; seed: string | QuiverDoc }
  | { angulation: AngulationDoc }
  | { import: SessionExport };
