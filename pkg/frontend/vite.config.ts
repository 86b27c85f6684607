import { defineConfig } from "vitest/config";

// The dev server proxies API calls to the dualnet job service
// (python -m dualnet.service), so the app can use same-origin paths.
export default defineConfig({
  server: {
    proxy: {
      "/datasets": "http://127.0.0.1:8040",
      "/jobs": "http://127.0.0.1:8040",
    },
  },
  test: {
    environment: "node",
    include: ["src/**/*.test.ts"],
  },
});
