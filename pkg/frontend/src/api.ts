/** Typed client for the play service; paths and shapes mirror docs/api.md. */

export interface MapSummary {
  name: string;
  vertices: number;
  edges: number;
  faces: number;
  genus: number;
  planar: boolean;
  face_sizes: number[];
}

export interface FaceInfo {
  label: string;
  size: number;
  vertices: number[];
  edges: number[];
}

export interface CornerInfo {
  point: number;
  face: string;
  vertex: number;
}

export interface SideEdgeInfo {
  point: number;
  face: string;
  edge: number;
}

export interface MapDescriptor extends MapSummary {
  edge_list: [number, number][];
  face_list: FaceInfo[];
  corners: CornerInfo[];
  side_edges: SideEdgeInfo[];
}

export type MoveWord = [string, number][];

export interface SessionState {
  map: string;
  face_labels: string[];
  solved: boolean;
  stickers: { corners: string[]; side_edges: string[] };
  history: MoveWord;
}

export interface SessionResponse {
  session: string;
  state: SessionState;
}

export interface WordResponse extends SessionResponse {
  word: MoveWord;
}

export class ApiError extends Error {
  constructor(public readonly code: string, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

/** What the controller needs from the service; Client is the HTTP version. */
export interface PuzzleApi {
  listMaps(): Promise<{ maps: MapSummary[] }>;
  describeMap(name: string): Promise<MapDescriptor>;
  createSession(map: string): Promise<SessionResponse>;
  getState(session: string): Promise<SessionResponse>;
  move(session: string, face: string, exponent?: number): Promise<SessionResponse>;
  scramble(session: string, seed?: number, moves?: number): Promise<WordResponse>;
  reset(session: string): Promise<SessionResponse>;
  solve(session: string): Promise<WordResponse>;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class Client implements PuzzleApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = (await resp.json()) as T & { error?: string; detail?: string };
    if (!resp.ok) {
      throw new ApiError(body.error ?? "unknown", body.detail ?? resp.statusText);
    }
    return body;
  }

  listMaps(): Promise<{ maps: MapSummary[] }> {
    return this.request("/maps");
  }

  describeMap(name: string): Promise<MapDescriptor> {
    return this.request(`/maps/${name}`);
  }

  createSession(map: string): Promise<SessionResponse> {
    return this.request("/sessions", { method: "POST", body: JSON.stringify({ map }) });
  }

  getState(session: string): Promise<SessionResponse> {
    return this.request(`/sessions/${session}`);
  }

  move(session: string, face: string, exponent = 1): Promise<SessionResponse> {
    return this.request(`/sessions/${session}/move`, {
      method: "POST",
      body: JSON.stringify({ face, exponent }),
    });
  }

  scramble(session: string, seed?: number, moves?: number): Promise<WordResponse> {
    return this.request(`/sessions/${session}/scramble`, {
      method: "POST",
      body: JSON.stringify({ seed: seed ?? null, moves: moves ?? 30 }),
    });
  }

  reset(session: string): Promise<SessionResponse> {
    return this.request(`/sessions/${session}/reset`, { method: "POST" });
  }

  solve(session: string): Promise<WordResponse> {
    return this.request(`/sessions/${session}/solve`, { method: "POST" });
  }
}
