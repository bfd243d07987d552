// Wire types for the JSON-lines stdio protocol: one request object per
// line on stdin, one response per line on stdout, answered in order.

export interface TermDoc {
  kind: "variable" | "function";
  name: string;
  arguments?: TermDoc[];
}

export interface PredicateDoc {
  kind: "predicate";
  name: string;
  arguments: TermDoc[];
}

export interface LiteralDoc {
  kind: "literal";
  negated: boolean;
  atom: PredicateDoc;
}

export interface ClauseDoc {
  format: number;
  kind: "clause";
  label: string;
  role: string;
  literals: LiteralDoc[];
  inference_rule: string | null;
  inference_parents: string[];
  birth_step: number;
  processed: boolean;
}

export interface Observation {
  clauses: ClauseDoc[];
  step_number: number;
}

export interface StepInfo {
  outcome:
    | "running"
    | "proof_found"
    | "step_limit_reached"
    | "saturated"
    | "clause_limit_reached";
  generated_count: number;
}

export interface StepResult {
  observation: Observation;
  reward: number;
  done: boolean;
  info: StepInfo;
}

export type RequestOp = "reset" | "step" | "render" | "tstp_proof" | "close";

export interface Request {
  op: RequestOp;
  id: number;
  problem_index?: number;
  action?: number;
  mode?: "human" | "json";
}

export interface Response {
  id: number | null;
  ok: boolean;
  payload?: unknown;
  error?: string;
}

/** The server rejected the request (bad action, no episode, no proof).
 *  The episode is still alive; callers may recover and continue. */
export class EnvironmentError extends Error {
  constructor(message: string, readonly requestId: number) {
    super(message);
    this.name = "EnvironmentError";
  }
}

/** The server process is gone or the stream broke mid-request. */
export class TransportError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "TransportError";
  }
}
