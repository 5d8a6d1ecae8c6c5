/** Session controller: the single state machine behind the page.  Every
 * mutation goes through the service and the view model is rebuilt from the
 * response, so the rendered picture always equals the server state. */

import { ApiError } from "./api.js";
import type { MapDescriptor, MoveWord, PuzzleApi, SessionState } from "./api.js";
import { computeLayout, NotPlanarError } from "./layout.js";
import type { Layout } from "./layout.js";
import { buildRenderModel } from "./render.js";
import type { RenderModel } from "./render.js";

export class PuzzleController {
  descriptor: MapDescriptor | null = null;
  layout: Layout | null = null;
  state: SessionState | null = null;
  session: string | null = null;
  pendingSolution: MoveWord = [];
  message = "";
  busy = false;

  constructor(private readonly api: PuzzleApi) {}

  async load(mapName: string): Promise<void> {
    this.descriptor = null;
    this.layout = null;
    this.state = null;
    this.session = null;
    this.pendingSolution = [];
    this.message = "";
    const desc = await this.api.describeMap(mapName);
    this.descriptor = desc;
    try {
      this.layout = computeLayout(desc);
    } catch (err) {
      if (err instanceof NotPlanarError) {
        this.message = err.message;
        return;
      }
      throw err;
    }
    const created = await this.api.createSession(mapName);
    this.session = created.session;
    this.state = created.state;
  }

  private async guarded(action: () => Promise<void>): Promise<void> {
    if (!this.session || this.busy) return;
    this.busy = true;
    try {
      await action();
      this.message = this.state?.solved ? "solved" : "";
    } catch (err) {
      this.message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    } finally {
      this.busy = false;
    }
  }

  async clickFace(label: string, direction: 1 | -1 = 1): Promise<void> {
    await this.guarded(async () => {
      const resp = await this.api.move(this.session!, label, direction);
      this.state = resp.state;
    });
  }

  async scramble(seed?: number, moves?: number): Promise<void> {
    await this.guarded(async () => {
      const resp = await this.api.scramble(this.session!, seed, moves);
      this.state = resp.state;
      this.pendingSolution = [];
    });
  }

  async reset(): Promise<void> {
    await this.guarded(async () => {
      const resp = await this.api.reset(this.session!);
      this.state = resp.state;
      this.pendingSolution = [];
    });
  }

  /** Ask for a solution word; the state itself is untouched until stepping. */
  async solve(): Promise<void> {
    await this.guarded(async () => {
      const resp = await this.api.solve(this.session!);
      this.pendingSolution = [...resp.word];
      this.state = resp.state;
    });
    if (!this.message) {
      this.message = this.pendingSolution.length
        ? `solution ready: ${this.pendingSolution.length} moves`
        : "already solved";
    }
  }

  /** Apply the next move of the pending solution word. */
  async stepSolution(): Promise<boolean> {
    const next = this.pendingSolution.shift();
    if (!next) return false;
    const [face, exponent] = next;
    await this.guarded(async () => {
      const resp = await this.api.move(this.session!, face, exponent);
      this.state = resp.state;
    });
    if (!this.message && this.pendingSolution.length) {
      this.message = `${this.pendingSolution.length} moves left`;
    }
    return true;
  }

  async playSolution(): Promise<void> {
    while (await this.stepSolution()) {
      // each step awaits its response before the next is sent
    }
  }

  model(): RenderModel | null {
    if (!this.descriptor || !this.layout || !this.state) return null;
    return buildRenderModel(this.descriptor, this.layout, this.state);
  }
}
