/// <reference types="vitest/config" />
import { defineConfig } from "vite";

// the dev server proxies API calls to a locally running exercise service
const API = "http://127.0.0.1:8000";

export default defineConfig({
  server: {
    proxy: {
      "/passages": API,
      "/sessions": API,
      "/constructs": API,
    },
  },
  test: {
    environment: "jsdom",
  },
});
