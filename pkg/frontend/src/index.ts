export { RemoteEnv, type RemoteEnvOptions } from "./remoteEnv.js";
export {
  selectAction,
  selectAge,
  selectSize,
  selectSizeAndAge,
  type AgentKind,
} from "./agents.js";
export {
  EnvironmentError,
  TransportError,
  type ClauseDoc,
  type LiteralDoc,
  type Observation,
  type PredicateDoc,
  type Request,
  type Response,
  type StepInfo,
  type StepResult,
  type TermDoc,
} from "./protocol.js";
