/** Scripted round-trip against the real play service: the UI acceptance of
 * "clicking a p-gonal face p times restores the rendered state" and
 * "scramble, solve, playback ends solved" on prism3 and the cube.
 *
 * Spawns the Python service; skipped when the package is not installed.
 */

import { spawn, spawnSync } from "node:child_process";
import type { ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client } from "../src/api.js";
import { PuzzleController } from "../src/controller.js";

const PORT = 8645;
const BASE = `http://127.0.0.1:${PORT}`;

const haveService =
  spawnSync("python3", ["-c", "import rubikmap.service"]).status === 0;

let child: ChildProcess | null = null;

async function waitForService(): Promise<void> {
  for (let i = 0; i < 120; i++) {
    try {
      const resp = await fetch(`${BASE}/maps`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("service did not come up");
}

describe.skipIf(!haveService)("live service round-trips", () => {
  beforeAll(async () => {
    child = spawn(
      "python3",
      ["-m", "uvicorn", "rubikmap.service:app", "--port", String(PORT)],
      { stdio: "ignore" },
    );
    await waitForService();
  }, 60_000);

  afterAll(() => {
    child?.kill();
  });

  it("renders exactly the server state after every interaction", async () => {
    const controller = new PuzzleController(new Client(BASE));
    await controller.load("prism3");
    await controller.clickFace("F1");
    const replay = await new Client(BASE).getState(controller.session!);
    expect(controller.state).toEqual(replay.state);
  });

  for (const mapName of ["prism3", "cube"]) {
    it(`${mapName}: clicking a p-gonal face p times restores the picture`, async () => {
      const controller = new PuzzleController(new Client(BASE));
      await controller.load(mapName);
      const before = JSON.stringify(controller.model());
      const face = controller.descriptor!.face_list[0]!;
      for (let i = 0; i < face.size; i++) {
        await controller.clickFace(face.label);
        const rendered = JSON.stringify(controller.model());
        if (i < face.size - 1) expect(rendered).not.toEqual(before);
      }
      expect(controller.state!.solved).toBe(true);
      expect(JSON.stringify(controller.model())).toEqual(before);
    }, 120_000);

    it(`${mapName}: scramble, solve, playback ends solved`, async () => {
      const controller = new PuzzleController(new Client(BASE));
      await controller.load(mapName);
      const solvedPicture = JSON.stringify(controller.model());
      await controller.scramble(20_24, 25);
      expect(controller.state!.solved).toBe(false);
      expect(JSON.stringify(controller.model())).not.toEqual(solvedPicture);
      await controller.solve();
      expect(controller.state!.solved).toBe(false); // solve alone moves nothing
      expect(controller.pendingSolution.length).toBeGreaterThan(0);
      await controller.playSolution();
      expect(controller.state!.solved).toBe(true);
      expect(JSON.stringify(controller.model())).toEqual(solvedPicture);
    }, 240_000);
  }
});
