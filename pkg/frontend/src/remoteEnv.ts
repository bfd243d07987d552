import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";

import {
  EnvironmentError,
  TransportError,
  type Observation,
  type Request,
  type RequestOp,
  type Response,
  type StepResult,
} from "./protocol.js";

export interface RemoteEnvOptions {
  /** Problem files, addressed by reset's problemIndex. */
  problems: string[];
  /** Maximum selection steps per episode. */
  stepLimit?: number;
  /** Clause table cap; breaching it ends the episode. */
  maxClauses?: number;
  /** Command that exposes the `serve` subcommand. Defaults to the
   *  installed `satenv` entry point; pass e.g. ["python3", "-m", "satenv"]
   *  to run a specific interpreter. */
  command?: string[];
}

interface Pending {
  resolve: (line: string) => void;
  reject: (err: Error) => void;
}

/**
 * A saturation environment living in a spawned server process.
 *
 * The client holds no environment logic: every call marshals one
 * request line to the server and decodes one response line.  Requests
 * are serialized so at most one is in flight.  Raw payload text is kept
 * in `payloadLog` so callers can verify wire transparency byte by byte.
 */
export class RemoteEnv {
  readonly payloadLog: string[] = [];

  private child: ChildProcessWithoutNullStreams;
  private buffer = "";
  private queue: Pending[] = [];
  private nextId = 0;
  private chain: Promise<unknown> = Promise.resolve();
  private closed = false;
  private exitError: Error | null = null;

  private constructor(child: ChildProcessWithoutNullStreams) {
    this.child = child;
    child.stdout.setEncoding("utf8");
    child.stdout.on("data", (chunk: string) => this.onData(chunk));
    child.stdout.on("close", () => this.failPending("server stdout closed"));
    // a write racing the server's exit (EPIPE) must not crash the host;
    // the exit handler rejects the pending request with a TransportError
    child.stdin.on("error", () => undefined);
    child.on("exit", (code) => {
      this.failPending(`server exited with code ${code}`);
    });
    child.on("error", (err) => this.failPending(`spawn failed: ${err.message}`));
  }

  static spawn(options: RemoteEnvOptions): RemoteEnv {
    const command = options.command ?? ["satenv"];
    const args = [...command.slice(1), "serve"];
    for (const problem of options.problems) {
      args.push("--problem", problem);
    }
    if (options.stepLimit !== undefined) {
      args.push("--step-limit", String(options.stepLimit));
    }
    if (options.maxClauses !== undefined) {
      args.push("--max-clauses", String(options.maxClauses));
    }
    const child = spawn(command[0], args, { stdio: ["pipe", "pipe", "pipe"] });
    return new RemoteEnv(child);
  }

  async reset(problemIndex = 0): Promise<Observation> {
    return (await this.request("reset", { problem_index: problemIndex })) as Observation;
  }

  async step(action: number): Promise<StepResult> {
    return (await this.request("step", { action })) as StepResult;
  }

  async render(mode: "human" | "json" = "human"): Promise<string> {
    const payload = (await this.request("render", { mode })) as { text: string };
    return payload.text;
  }

  async tstpProof(): Promise<string> {
    const payload = (await this.request("tstp_proof", {})) as { proof: string };
    return payload.proof;
  }

  /** Ask the server to shut down and wait for it to exit. */
  async close(): Promise<void> {
    if (this.closed) {
      return;
    }
    const exited = new Promise<void>((resolve) => {
      this.child.once("exit", () => resolve());
    });
    try {
      await this.request("close", {});
    } finally {
      this.closed = true;
      this.child.stdin.end();
    }
    await exited;
  }

  private onData(chunk: string): void {
    this.buffer += chunk;
    let index = this.buffer.indexOf("\n");
    while (index >= 0) {
      const line = this.buffer.slice(0, index);
      this.buffer = this.buffer.slice(index + 1);
      const pending = this.queue.shift();
      if (pending) {
        pending.resolve(line);
      }
      index = this.buffer.indexOf("\n");
    }
  }

  private failPending(reason: string): void {
    this.exitError = this.exitError ?? new TransportError(reason);
    while (this.queue.length > 0) {
      this.queue.shift()!.reject(new TransportError(reason));
    }
  }

  private request(op: RequestOp, args: Partial<Request>): Promise<unknown> {
    const run = this.chain.then(() => this.exchange(op, args));
    // keep the chain alive after failures so later calls still run
    this.chain = run.catch(() => undefined);
    return run;
  }

  private async exchange(op: RequestOp, args: Partial<Request>): Promise<unknown> {
    if (this.closed) {
      throw new TransportError("client is closed");
    }
    if (this.exitError && op !== "close") {
      throw this.exitError;
    }
    const id = this.nextId++;
    const request: Request = { op, id, ...args };
    const reply = new Promise<string>((resolve, reject) => {
      this.queue.push({ resolve, reject });
    });
    this.child.stdin.write(JSON.stringify(request) + "\n");
    const line = await reply;
    const response = JSON.parse(line) as Response;
    if (response.id !== id) {
      throw new TransportError(`response id ${response.id} does not match ${id}`);
    }
    if (!response.ok) {
      throw new EnvironmentError(response.error ?? "unknown error", id);
    }
    // record the raw payload bytes for wire-transparency checks
    const prefix = `{"id":${id},"ok":true,"payload":`;
    if (line.startsWith(prefix) && line.endsWith("}")) {
      this.payloadLog.push(line.slice(prefix.length, -1));
    }
    return response.payload;
  }
}
