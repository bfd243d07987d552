import { execFileSync } from "node:child_process";
import { afterEach, describe, expect, it } from "vitest";

import { selectAge } from "../src/agents.js";
import { EnvironmentError, TransportError } from "../src/protocol.js";
import { RemoteEnv } from "../src/remoteEnv.js";

const PYTHON = process.env.SATENV_PYTHON ?? "python3";
const COMMAND = [PYTHON, "-m", "satenv"];

function socratesPath(): string {
  return execFileSync(
    PYTHON,
    ["-c", "from satenv.problems import socrates_problem; print(socrates_problem())"],
    { encoding: "utf8" },
  ).trim();
}

const SOCRATES = socratesPath();

let env: RemoteEnv | null = null;

afterEach(async () => {
  if (env) {
    await env.close().catch(() => undefined);
    env = null;
  }
});

function spawnSocrates(): RemoteEnv {
  env = RemoteEnv.spawn({ problems: [SOCRATES], stepLimit: 10, command: COMMAND });
  return env;
}

describe("RemoteEnv", () => {
  it("runs the full episode and matches the in-process payloads byte for byte", async () => {
    const client = spawnSocrates();
    let observation = await client.reset();
    expect(observation.clauses).toHaveLength(3);
    expect(observation.step_number).toBe(0);

    let done = false;
    let reward = 0;
    let outcome = "";
    while (!done) {
      const result = await client.step(selectAge(observation));
      observation = result.observation;
      done = result.done;
      reward = result.reward;
      outcome = result.info.outcome;
    }
    expect(outcome).toBe("proof_found");
    expect(reward).toBe(1.0);

    const proof = await client.tstpProof();
    expect(proof.split("\n")).toHaveLength(2);

    // wire equivalence: raw payload bytes equal the in-process trace
    const trace = execFileSync(
      PYTHON,
      ["-m", "satenv.trace", "--problem", SOCRATES, "--agent", "age",
        "--step-limit", "10"],
      { encoding: "utf8" },
    )
      .split("\n")
      .filter((line) => line.length > 0);
    expect(client.payloadLog).toEqual(trace);

    // and the decoded proof equals what the prove command prints
    const proved = execFileSync(
      PYTHON,
      ["-m", "satenv", "prove", "--problem", SOCRATES, "--agent", "age"],
      { encoding: "utf8" },
    );
    expect(proof.trimEnd()).toBe(proved.trimEnd());
  }, 60_000);

  it("renders the starting hypotheses", async () => {
    const client = spawnSocrates();
    await client.reset();
    const text = await client.render("human");
    expect(text.split("\n")[0]).toBe(
      "cnf(p_imp_q, hypothesis, ~man(X0) | mortal(X0)).",
    );
    const json = await client.render("json");
    expect(JSON.parse(json).step_number).toBe(0);
  }, 60_000);

  it("surfaces invalid actions in-band and lets the episode continue", async () => {
    const client = spawnSocrates();
    await client.reset();
    await expect(client.step(99)).rejects.toBeInstanceOf(EnvironmentError);
    const result = await client.step(0);
    expect(result.observation.clauses[0].processed).toBe(true);
  }, 60_000);

  it("reports proof requests without a refutation as in-band errors", async () => {
    const client = spawnSocrates();
    await client.reset();
    await expect(client.tstpProof()).rejects.toBeInstanceOf(EnvironmentError);
  }, 60_000);

  it("rejects calls after close with a transport error", async () => {
    const client = spawnSocrates();
    await client.reset();
    await client.close();
    await expect(client.step(0)).rejects.toBeInstanceOf(TransportError);
  }, 60_000);

  it("distinguishes a dead server from in-band errors", async () => {
    const client = RemoteEnv.spawn({
      problems: [SOCRATES],
      command: [PYTHON, "-c", "import sys; sys.exit(0)"],
    });
    env = client;
    await expect(client.reset()).rejects.toBeInstanceOf(TransportError);
  }, 60_000);
});
