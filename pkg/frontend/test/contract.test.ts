import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, DOCUMENTED_ENDPOINTS, endpointTemplate } from "../src/api.js";
import { FakeService } from "./fakeService.js";

describe("endpointTemplate", () => {
  it("collapses session ids", () => {
    expect(endpointTemplate("post", "/sessions/abc123/select-context")).toBe(
      "POST /sessions/{id}/select-context",
    );
  });

  it("strips query strings", () => {
    expect(endpointTemplate("GET", "/sessions/abc/query?text=o")).toBe(
      "GET /sessions/{id}/query",
    );
  });

  it("leaves global paths alone", () => {
    expect(endpointTemplate("GET", "/contexts")).toBe("GET /contexts");
  });
});

describe("ApiClient contract", () => {
  it("touches only documented endpoints across the full surface", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);

    await api.health();
    await api.contexts();
    const session = await api.createSession();
    await api.getSession(session.id);
    await api.selectContext(session.id, 6);
    await api.cloud(session.id);
    await api.selectConcept(session.id, 14);
    await api.videos(session.id);
    await api.map(session.id);
    await api.feedback(session.id, ["v3"], []);
    await api.sendVoice(session.id, "retour");
    await api.sendGesture(session.id, [
      { t: 0, x: 0.1, y: 0.5 },
      { t: 300, x: 0.6, y: 0.5 },
    ]);
    await api.query(session.id, "bird");
    await api.back(session.id);

    expect(fake.calls.length).toBeGreaterThan(0);
    for (const call of fake.calls) {
      expect(DOCUMENTED_ENDPOINTS).toContain(endpointTemplate(call.method, call.path));
    }
  });

  it("uses the documented bodies", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    const session = await api.createSession();
    await api.selectContext(session.id, 6);
    await api.selectConcept(session.id, 14);
    await api.feedback(session.id, ["v1"], ["v3"]);

    const selectContext = fake.calls.find((c) => c.path.endsWith("/select-context"));
    expect(selectContext?.body).toEqual({ num: 6 });
    const selectConcept = fake.calls.find((c) => c.path.endsWith("/select-concept"));
    expect(selectConcept?.body).toEqual({ id: 14 });
    const feedback = fake.calls.find((c) => c.path.endsWith("/feedback"));
    expect(feedback?.body).toEqual({ relevant: ["v1"], nonRelevant: ["v3"] });
  });

  it("surfaces service errors with their status", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    const session = await api.createSession();
    await expect(api.videos(session.id)).rejects.toMatchObject({
      name: "ApiError",
      status: 409,
    });
    await expect(api.getSession("ghost")).rejects.toBeInstanceOf(ApiError);
  });
});
