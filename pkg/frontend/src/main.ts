import { ApiClient } from "./api.js";
import { mount } from "./render.js";
import { ScenarioStore } from "./state.js";

// When the page is served by the probative service, same-origin works; a
// file:// page falls back to the default local service address.
const base = window.location.protocol === "file:" ? "http://127.0.0.1:8000" : "";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  const client = new ApiClient(base);
  const store = new ScenarioStore(client);
  try {
    const models = await client.listModels();
    mount(store, root, models);
    if (models.length) await store.loadModel(models[0].id);
  } catch (error) {
    root.textContent =
      `cannot reach the service (${error instanceof Error ? error.message : error}); ` +
      "start it with: probative serve";
  }
}

void boot();
