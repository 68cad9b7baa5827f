import { ApiClient } from "./api.js";
import type { ArtworkConfig, ExportFormat, PlotOverrides } from "./api.js";
import { StudioController } from "./controller.js";
import { DomView } from "./view.js";

const api = new ApiClient("");
const view = new DomView((index) => {
  const entry = controller.state.history[index];
  if (entry) void controller.loadConfig(entry.config);
});
const controller = new StudioController(api, view);

function input<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

const rotation = input<HTMLInputElement>("rotation");
const alpha = input<HTMLInputElement>("alpha");
const spotSize = input<HTMLInputElement>("spot-size");
const projection = input<HTMLSelectElement>("projection");
const color = input<HTMLInputElement>("color");
const bgcolor = input<HTMLInputElement>("bgcolor");

function overridesFromControls(): PlotOverrides {
  return {
    rotation: Number(rotation.value),
    alpha: Number(alpha.value),
    spot_size: Number(spotSize.value),
    projection: projection.value,
    color: color.value || undefined,
    bgcolor: bgcolor.value || undefined,
  };
}

for (const el of [rotation, alpha, spotSize]) {
  el.addEventListener("input", () => void controller.tweak(overridesFromControls()));
}
for (const el of [projection, color, bgcolor]) {
  el.addEventListener("change", () => {
    if (el === color || el === bgcolor) {
      const value = (el as HTMLInputElement).value.trim();
      if (value && !/^[#a-zA-Z0-9]+$/.test(value)) {
        view.showError(`invalid color text: ${value}`);
        return; // no request for garbage input
      }
    }
    void controller.tweak(overridesFromControls());
  });
}

input<HTMLInputElement>("lock-func-seed").addEventListener("change", (event) => {
  controller.setLock("funcSeed", (event.target as HTMLInputElement).checked);
});
input<HTMLInputElement>("lock-seed").addEventListener("change", (event) => {
  controller.setLock("seed", (event.target as HTMLInputElement).checked);
});

input<HTMLButtonElement>("randomize").addEventListener("click", () => {
  void controller.randomize();
});

for (const format of ["svg", "png", "config", "data"] as ExportFormat[]) {
  input<HTMLButtonElement>(`export-${format}`).addEventListener("click", () => {
    void controller.exportArtwork(format);
  });
}

input<HTMLInputElement>("load-config").addEventListener("change", async (event) => {
  const file = (event.target as HTMLInputElement).files?.[0];
  if (!file) return;
  try {
    const config = JSON.parse(await file.text()) as ArtworkConfig;
    await controller.loadConfig(config);
  } catch (error) {
    view.showError(`could not load config: ${error}`);
  }
});

void controller.randomize();
