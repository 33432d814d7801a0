import { describe, expect, it } from "vitest";

import { canonicalLabel, roleBorderColor, roleColor } from "../src/colors";

describe("canonicalLabel", () => {
  it("lower-cases, trims, collapses separators", () => {
    expect(canonicalLabel("Purpose_of_Recipient")).toBe("purpose_of_recipient");
    expect(canonicalLabel("  Education  Teaching ")).toBe("education_teaching");
    expect(canonicalLabel("Theme")).toBe("theme");
  });

  it("is idempotent", () => {
    const once = canonicalLabel("Created  Entity");
    expect(canonicalLabel(once)).toBe(once);
  });
});

describe("roleColor", () => {
  it("is deterministic and spelling-insensitive", () => {
    expect(roleColor("Theme")).toBe(roleColor("theme"));
    expect(roleColor("Purpose_of_Recipient")).toBe(roleColor("Purpose_of_recipient"));
    expect(roleColor("Entity")).toBe(roleColor("Entity"));
  });

  it("separates distinct roles", () => {
    expect(roleColor("Theme")).not.toBe(roleColor("Goal"));
    expect(roleColor("Entity")).not.toBe(roleColor("Event"));
  });

  it("emits valid hsl strings", () => {
    expect(roleColor("Agent")).toMatch(/^hsl\(\d+, 65%, 82%\)$/);
    expect(roleBorderColor("Agent")).toMatch(/^hsl\(\d+, 55%, 45%\)$/);
  });
});
