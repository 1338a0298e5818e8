export interface RankedCondition {
  condition: string;
  confidence: number;
}

export interface DiagnoseResponse {
  ranked: RankedCondition[];
  differential: string[];
  model_id: string;
}

export type Sex = "male" | "female";

export interface SessionState {
  reportText: string;
  age: number;
  sex: Sex;
  threshold: number;
  lastResponse: DiagnoseResponse | null;
  /** texts of previous successful runs, most recent last */
  editHistory: string[];
  /** differential of the previous successful run, for the diff badge */
  previousDifferential: string[] | null;
}

export function initialState(): SessionState {
  return {
    reportText: "",
    age: 40,
    sex: "female",
    threshold: 0.5,
    lastResponse: null,
    editHistory: [],
    previousDifferential: null,
  };
}
