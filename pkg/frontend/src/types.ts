/** Wire types of the qwind service (JSON bodies, rationals as strings). */

export type RationalStr = string;
export type PointJson = [RationalStr, RationalStr];

export interface DrawingJson {
  n: number;
  edges: [number, number][];
  positions: Record<string, PointJson>;
  bends: Record<string, PointJson[]>;
}

export type FaceJson = number[];

export interface EvidenceJson {
  kind: "vertex-hit" | "on-edge-arc" | "on-cycle-image" | "winding";
  winding?: number;
}

export interface CertificateJson {
  family: FaceJson[];
  witness: PointJson;
  evidence: EvidenceJson[];
}

export interface GpViolationJson {
  kind: string;
  involved: number[][];
  location: unknown;
}

export interface GpReportJson {
  ok: boolean;
  violations: GpViolationJson[];
}

export interface EnumerateResponse {
  count: number;
  certificates: CertificateJson[];
  gp: GpReportJson;
  elapsed_ms: number;
}

export interface CheckResponse {
  certified: boolean;
  certificate: CertificateJson | null;
}

export interface HuntStepResponse {
  drawing: DrawingJson;
  best_count: number;
  trace: { step: number; count: number; best: number; accepted: boolean; temperature: number }[];
}

export interface BoundsResponse {
  d: number;
  q: number;
  sierksma: number;
  prime_power: [number, number] | null;
  hell_bound: string | null;
  d2_winding_bound: string | null;
  observed: number | null;
  meets_hell_bound: boolean | null;
}

export function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

export function sameFamily(a: FaceJson[], b: FaceJson[]): boolean {
  if (a.length !== b.length) return false;
  const norm = (fam: FaceJson[]) =>
    fam
      .map((f) => [...f].sort((x, y) => x - y).join(","))
      .sort()
      .join(";");
  return norm(a) === norm(b);
}
