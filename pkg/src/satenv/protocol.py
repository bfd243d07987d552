"""JSON-lines request/response server over standard streams.

One request per line, one response per line, answered in order; the
process owns exactly one environment instance.  Malformed input and
environment misuse produce in-band error responses (``ok`` false); the
loop only stops on a ``close`` request or end of input.  Nothing but
responses is ever written to standard output.

Requests:  {"op": "reset"|"step"|"render"|"tstp_proof"|"close",
            "id": <int>, ...op arguments}
Responses: {"id": <id>, "ok": true, "payload": ...}
           {"id": <id>, "ok": false, "error": "..."}

Op arguments: reset takes "problem_index" (default 0); step takes
"action"; render takes "mode" (default "human").  Payloads are the
canonical JSON renderings of the in-process observation / step result,
``{"text": ...}`` for render and ``{"proof": ...}`` for tstp_proof.
"""

from __future__ import annotations

import json
import sys

from .env import EnvConfig, SaturationEnv
from .errors import EnvError, ParseError
from .jsonio import dumps


def _response(id_value, ok: bool, *, payload=None, error: str | None = None) -> str:
    body: dict = {"id": id_value, "ok": ok}
    if ok:
        body["payload"] = payload
    else:
        body["error"] = error
    return dumps(body)


def handle_request(env: SaturationEnv, request: dict):
    """Apply one decoded request; returns (payload, should_close)."""
    op = request.get("op")
    if op == "reset":
        observation = env.reset(int(request.get("problem_index", 0)))
        return observation.to_obj(), False
    if op == "step":
        if "action" not in request:
            raise EnvError("step requires an 'action' argument")
        result = env.step(request["action"])
        return result.to_obj(), False
    if op == "render":
        return {"text": env.render(request.get("mode", "human"))}, False
    if op == "tstp_proof":
        return {"proof": env.tstp_proof()}, False
    if op == "close":
        return {"closed": True}, True
    raise EnvError(f"unknown op {op!r}")


def serve_stdio(config: EnvConfig, stdin=None, stdout=None) -> int:
    """Serve requests until ``close`` or end of input; returns exit status."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    env = SaturationEnv(config)
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
        except json.JSONDecodeError as exc:
            print(_response(None, False, error=f"parse: {exc}"), file=stdout, flush=True)
            continue
        if not isinstance(request, dict):
            print(_response(None, False, error="parse: request must be an object"),
                  file=stdout, flush=True)
            continue
        id_value = request.get("id")
        try:
            payload, should_close = handle_request(env, request)
        except (EnvError, ParseError, IndexError, ValueError, OSError) as exc:
            print(_response(id_value, False, error=str(exc)), file=stdout, flush=True)
            continue
        print(_response(id_value, True, payload=payload), file=stdout, flush=True)
        if should_close:
            return 0
    return 0
