import { ApiClient, Rejection } from "./api.js";
import {
  canonical,
  Dir,
  Edge,
  EdgeView,
  Role,
  sameEdge,
  View,
} from "./types.js";

/**
 * Session state machine between the rendered board and the server.
 *
 * The controller never decides legality itself: clickable edges and
 * enabled direction buttons are read off the latest server view, and a
 * rejected answer is surfaced exactly as the server reported it.
 */
export class GameController {
  sessionId: string | null = null;
  role: Role = "algy";
  view: View | null = null;
  graphText = "";
  lastAnswer: Dir | null = null;
  toasts: string[] = [];

  constructor(private api: ApiClient) {}

  async start(graphText: string, role: Role, opponent: string): Promise<View> {
    const created = await this.api.createSession(graphText, role, opponent);
    this.sessionId = created.id;
    this.role = role;
    this.view = created.view;
    this.graphText = graphText;
    this.lastAnswer = null;
    this.toasts = [];
    return created.view;
  }

  get terminal(): boolean {
    return this.view?.terminal ?? false;
  }

  get total(): number {
    return this.view?.total ?? 0;
  }

  get pending(): Edge | null {
    return this.view?.pending ?? null;
  }

  edgeView(edge: Edge): EdgeView | undefined {
    const target = canonical(edge);
    return this.view?.edges.find((ev) => sameEdge(ev.e, target));
  }

  private toast(message: string) {
    this.toasts.push(message);
  }

  /** Human questioner: post the query unless the view already rules it out. */
  async clickEdge(edge: Edge): Promise<Dir | null> {
    if (!this.sessionId || !this.view) throw new Error("no active session");
    if (this.view.terminal) {
      return null; // board is done; clicks are a silent no-op
    }
    const ev = this.edgeView(edge);
    if (!ev) {
      this.toast(`${edge.join("-")} is not an edge of this board`);
      return null;
    }
    if (ev.status === "queried") {
      this.toast(`edge ${ev.e.join("-")} was already queried`);
      return null;
    }
    const result = await this.api.query(this.sessionId, canonical(edge));
    this.view = result.view;
    this.lastAnswer = result.dir;
    return result.dir;
  }

  /**
   * Human answerer: direction buttons for the engine's pending query. Only
   * directions the server would accept are enabled; on a forced pending
   * edge that is exactly the direction carried by the view.
   */
  enabledDirections(): Dir[] {
    const pending = this.pending;
    if (!pending || !this.view) return [];
    const ev = this.edgeView(pending);
    if (!ev) return [];
    if (ev.status === "forced" && ev.dir) {
      return [ev.dir];
    }
    const [u, v] = ev.e;
    return [
      [u, v],
      [v, u],
    ];
  }

  async chooseDirection(dir: Dir): Promise<Edge | null> {
    if (!this.sessionId || !this.view) throw new Error("no active session");
    const result = await this.api.answer(this.sessionId, dir);
    if ((result as Rejection).rejected) {
      const rejection = result as Rejection;
      const hint = rejection.forced
        ? `; the only legal answer is ${rejection.forced.join("->")}`
        : "";
      this.toast(`server rejected ${dir.join("->")}: ${rejection.error}${hint}`);
      return this.pending;
    }
    const accepted = result as { next_query: Edge | null; view: View };
    this.view = accepted.view;
    this.lastAnswer = dir;
    return accepted.next_query;
  }

  async hint() {
    if (!this.sessionId) throw new Error("no active session");
    return this.api.hint(this.sessionId);
  }
}
