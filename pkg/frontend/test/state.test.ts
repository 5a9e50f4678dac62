import { describe, expect, it } from "vitest";

import { alternatingK7, enumerateK7Q3, fixtureFetch, jsonResponse, manualFetch, storeWith } from "./helpers.js";

describe("loading (B1 data flow)", () => {
  it("loads alternating K_7 and shows the service count", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    expect(store.state.drawing?.n).toBe(7);
    expect(store.state.count).toBe(4);
    expect(store.state.dirty).toBe(false);
    expect(store.state.certificates).toHaveLength(4);
  });

  it("renders exactly the certificates of the response", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    expect(store.state.certificates).toEqual(enumerateK7Q3.certificates);
  });
});

describe("editing", () => {
  it("drag positions snap to the rational grid and serialize exactly", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    store.state.gridDenominator = 8n;
    store.moveVertex(0, 1.131, -0.26);
    expect(store.state.drawing?.positions["0"]).toEqual(["9/8", "-1/4"]);
    expect(store.state.dirty).toBe(true);
    const exported = JSON.parse(store.exportJson());
    expect(exported.positions["0"]).toEqual(["9/8", "-1/4"]);
  });

  it("bend moves snap too", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    store.state.gridDenominator = 4n;
    store.moveBend("0-1", 0, 1.26, -1.1);
    expect(store.state.drawing?.bends["0-1"]?.[0]).toEqual(["5/4", "-1"]);
  });

  it("perturb is deterministic in the seed and keeps rationals", async () => {
    const a = storeWith(fixtureFetch());
    const b = storeWith(fixtureFetch());
    await a.loadAlternating(7);
    await b.loadAlternating(7);
    a.perturb(42);
    b.perturb(42);
    expect(a.state.drawing).toEqual(b.state.drawing);
    const moved = a.state.drawing!.positions["3"]!;
    expect(moved[0]).toMatch(/^-?\d+(\/\d+)?$/);
  });

  it("import validates and export round-trips", async () => {
    const store = storeWith(fixtureFetch());
    store.importJson(JSON.stringify(alternatingK7));
    expect(store.state.drawing?.n).toBe(7);
    expect(() => store.importJson('{"n": 3}')).toThrow();
    const bad = JSON.parse(JSON.stringify(alternatingK7));
    bad.positions["0"] = ["1/0", "0"];
    expect(() => store.importJson(JSON.stringify(bad))).toThrow();
  });
});

describe("request sequencing (B2)", () => {
  it("discards superseded responses and aborts the older request", async () => {
    const { fetch, calls } = manualFetch();
    const store = storeWith(fetch);
    store.adoptDrawing(structuredClone(alternatingK7));

    const first = store.refresh();
    expect(calls).toHaveLength(1);
    const second = store.refresh();
    expect(calls).toHaveLength(2);
    expect(calls[0]!.signal?.aborted).toBe(true); // cancel-supersede

    // newest response lands first and is rendered
    calls[1]!.resolve(jsonResponse(enumerateK7Q3));
    await second;
    expect(store.state.count).toBe(4);
    expect(store.state.pending).toBe(false);

    // the stale response resolves later with a different count: ignored
    calls[0]!.resolve(jsonResponse({ ...enumerateK7Q3, count: 99 }));
    await first;
    expect(store.state.count).toBe(4);
  });

  it("a response for an older drawing never overwrites a newer edit", async () => {
    const { fetch, calls } = manualFetch();
    const store = storeWith(fetch);
    store.adoptDrawing(structuredClone(alternatingK7));
    const inflight = store.refresh();
    store.moveVertex(0, 0.5, 0.5); // edit while the request is in flight
    const newer = store.refresh();
    calls[0]!.resolve(jsonResponse({ ...enumerateK7Q3, count: 7 }));
    await inflight;
    expect(store.state.count).toBe(null); // stale result dropped
    calls[1]!.resolve(jsonResponse(enumerateK7Q3));
    await newer;
    expect(store.state.count).toBe(4);
  });

  it("errors surface but stale errors do not", async () => {
    const { fetch, calls } = manualFetch();
    const store = storeWith(fetch);
    store.adoptDrawing(structuredClone(alternatingK7));
    const only = store.refresh();
    calls[0]!.resolve(jsonResponse({ detail: "boom" }, 422));
    await only;
    expect(store.state.error).toContain("boom");
  });
});

describe("selection and pins", () => {
  it("selection survives a refresh when the family persists", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    store.select(1);
    await store.refresh();
    expect(store.state.selected).toBe(1);
  });

  it("selection is cleared by edits and bounded by the list", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    store.select(99);
    expect(store.state.selected).toBe(null);
    store.select(2);
    store.moveVertex(0, 1, 0);
    expect(store.state.selected).toBe(null);
  });

  it("pins toggle", async () => {
    const store = storeWith(fixtureFetch());
    await store.loadAlternating(7);
    store.togglePin(4);
    store.togglePin(2);
    expect(store.state.pinned).toEqual([2, 4]);
    store.togglePin(4);
    expect(store.state.pinned).toEqual([2]);
  });
});
