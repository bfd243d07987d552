// Ports of the three selection heuristics, for driving RemoteEnv.
// Semantics mirror the server-side agents exactly: indices address the
// full clause table and only unprocessed clauses are eligible.

import type { Observation } from "./protocol.js";

function unprocessedIndices(observation: Observation): number[] {
  const out: number[] = [];
  observation.clauses.forEach((clause, index) => {
    if (!clause.processed) {
      out.push(index);
    }
  });
  if (out.length === 0) {
    throw new Error("no unprocessed clause to select");
  }
  return out;
}

/** Shortest unprocessed clause; ties break toward the lowest index. */
export function selectSize(observation: Observation): number {
  const candidates = unprocessedIndices(observation);
  let best = candidates[0];
  for (const index of candidates) {
    if (
      observation.clauses[index].literals.length <
      observation.clauses[best].literals.length
    ) {
      best = index;
    }
  }
  return best;
}

/** The unprocessed clause that entered the table first. */
export function selectAge(observation: Observation): number {
  return unprocessedIndices(observation)[0];
}

/** Shortest clause `sizeStreak` steps in a row, then once the oldest. */
export function selectSizeAndAge(
  observation: Observation,
  stepCount: number,
  sizeStreak = 5,
): number {
  if (stepCount % (sizeStreak + 1) < sizeStreak) {
    return selectSize(observation);
  }
  return selectAge(observation);
}

export type AgentKind = "size" | "age" | "size_and_age";

export function selectAction(
  kind: AgentKind,
  observation: Observation,
  stepCount: number,
  sizeStreak = 5,
): number {
  if (kind === "size") {
    return selectSize(observation);
  }
  if (kind === "age") {
    return selectAge(observation);
  }
  return selectSizeAndAge(observation, stepCount, sizeStreak);
}
