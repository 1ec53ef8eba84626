import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    globalSetup: ["tests/setup/backend.ts"],
    hookTimeout: 180_000,
    testTimeout: 120_000,
  },
});
