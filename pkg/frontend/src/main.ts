import "./style.css";
import { ApiError } from "./api";
import { isProductAt } from "./product";
import { renderTree } from "./render";
import { SessionController } from "./session";
import type { ViewerSession } from "./types";

const app = document.querySelector<HTMLDivElement>("#app")!;
app.innerHTML = `
  <header>
    <h1>Binary tree of Bloch spheres</h1>
    <div class="controls">
      <label class="file-label">
        Load states JSON
        <input type="file" id="file-input" accept=".json,application/json" />
      </label>
      <div id="chips" class="chips" title="drag to change the qubit order"></div>
      <label class="slider-label">
        sample <span id="sample-value">0</span>
        <input type="range" id="sample-slider" min="0" max="0" value="0" disabled />
      </label>
    </div>
    <div id="error-banner" class="error-banner" hidden></div>
  </header>
  <main>
    <svg id="tree" xmlns="http://www.w3.org/2000/svg"></svg>
    <aside id="detail" class="detail" hidden></aside>
  </main>
`;

const controller = new SessionController();
const fileInput = document.querySelector<HTMLInputElement>("#file-input")!;
const chips = document.querySelector<HTMLDivElement>("#chips")!;
const slider = document.querySelector<HTMLInputElement>("#sample-slider")!;
const sampleValue = document.querySelector<HTMLSpanElement>("#sample-value")!;
const banner = document.querySelector<HTMLDivElement>("#error-banner")!;
const svg = document.querySelector<SVGSVGElement>("#tree")!;
const detail = document.querySelector<HTMLElement>("#detail")!;

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function clearError(): void {
  banner.hidden = true;
}

function renderChips(session: ViewerSession): void {
  chips.replaceChildren();
  session.order.forEach((qubit, slot) => {
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.textContent = `q${qubit}`;
    chip.draggable = true;
    chip.dataset.slot = String(slot);
    chip.addEventListener("dragstart", (event) => {
      event.dataTransfer?.setData("text/plain", String(slot));
    });
    chip.addEventListener("dragover", (event) => event.preventDefault());
    chip.addEventListener("drop", (event) => {
      event.preventDefault();
      const from = Number(event.dataTransfer?.getData("text/plain"));
      const to = slot;
      if (Number.isNaN(from) || from === to) return;
      const next = [...controller.session.order];
      const [moved] = next.splice(from, 1);
      next.splice(to, 0, moved);
      controller.reorder(next).catch((err) => showError(String(err.message ?? err)));
    });
    chips.appendChild(chip);
  });
}

function renderDetail(session: ViewerSession): void {
  const coord = session.highlight;
  if (coord === null || !session.register) {
    detail.hidden = true;
    return;
  }
  const record = controller.nodeRecord(coord);
  if (!record) {
    detail.hidden = true;
    return;
  }
  const sample = session.selectedSample;
  const theta = record.theta[sample];
  const phi = record.phi[sample];
  const product = isProductAt(session.register, coord, sample);
  const badge =
    product === null
      ? ""
      : `<span class="badge ${product ? "product" : "entangled"}">${
          product ? "product" : "entangled"
        }</span>`;
  detail.innerHTML = `
    <h2>node "${coord || "root"}"</h2>
    <p>sample ${sample}</p>
    <p>&theta; = ${theta.toFixed(6)}</p>
    <p>&phi; = ${phi.toFixed(6)}</p>
    ${badge}
  `;
  detail.hidden = false;
}

function rerender(session: ViewerSession): void {
  if (!session.register) return;
  renderTree(svg, session.register, {
    selectedSample: session.selectedSample,
    highlightCoord: session.highlight,
    onNodeClick: (coord) => controller.inspectNode(coord),
  });
  slider.max = String(session.register.n_samples - 1);
  slider.value = String(session.selectedSample);
  slider.disabled = session.register.n_samples <= 1;
  sampleValue.textContent = String(session.selectedSample);
  renderChips(session);
  renderDetail(session);
}

controller.onChange(rerender);

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  clearError();
  try {
    await controller.loadStates(await file.text());
  } catch (err) {
    showError(err instanceof ApiError ? err.message : `unexpected error: ${err}`);
  }
});

slider.addEventListener("input", () => controller.scrub(Number(slider.value)));
